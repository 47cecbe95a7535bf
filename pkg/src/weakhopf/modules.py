"""Finite-dimensional modules presented by action matrices."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import FiniteDimAlgebra
from .linalg import (
    Matrix,
    Subspace,
    block_diagonal,
    kernel_vectors,
    linear_combination,
)


class ModuleError(ValueError):
    pass


class Module:
    """Left module over ``algebra``: ``actions[i]`` is the matrix of ``e_i``.

    Right modules are handled as left modules over the opposite algebra
    (or, for weak Hopf algebras, over ``H^{op,cop}``).
    """

    def __init__(self, algebra: FiniteDimAlgebra, actions: Sequence[Matrix], dim: int | None = None, name: str = ""):
        self.algebra = algebra
        self.actions = list(actions)
        if len(self.actions) != algebra.dim:
            raise ModuleError("need one action matrix per basis element")
        if dim is None:
            dim = self.actions[0].nrows if self.actions else 0
        self.dim = dim
        for m in self.actions:
            if m.shape != (dim, dim):
                raise ModuleError("action matrix has the wrong shape")
        self.name = name
        self._cache: dict = {}

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<Module{nm} dim={self.dim}>"

    @property
    def field(self):
        return self.algebra.field

    def act(self, a: Sequence) -> Matrix:
        """Matrix of the algebra element with coordinates ``a``."""
        return linear_combination(self.field, a, self.actions, self.dim, self.dim)

    def act_vector(self, a: Sequence, v: Sequence) -> list:
        return self.act(a).apply(v)

    def identity(self) -> "ModuleMap":
        return ModuleMap(self, self, Matrix.identity(self.field, self.dim))

    def is_valid(self) -> bool:
        return not self.validation_failures()

    def validation_failures(self) -> list:
        a = self.algebra
        out = []
        if not self.act(a.unit).is_identity():
            out.append(("unit", ()))
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.actions[i] @ self.actions[j]
                if lhs != self.act(a.mul_basis(i, j)):
                    out.append(("associativity", (i, j)))
        return out


@dataclass
class ModuleMap:
    source: Module
    target: Module
    matrix: Matrix

    def is_module_map(self) -> bool:
        src, tgt, f = self.source, self.target, self.matrix
        if f.shape != (tgt.dim, src.dim):
            return False
        return all(f @ src.actions[i] == tgt.actions[i] @ f for i in range(src.algebra.dim))

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self o other``."""
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)

    def rank(self) -> int:
        return self.matrix.rank()

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def kernel(self) -> Subspace:
        return self.matrix.kernel()

    def image(self) -> Subspace:
        return self.matrix.image()


@dataclass
class ShortExactSequence:
    """``0 -> first --f--> middle --g--> last -> 0``."""

    first: Module
    middle: Module
    last: Module
    f: ModuleMap
    g: ModuleMap
    label: str = ""

    def failures(self) -> list[str]:
        out = []
        if not (self.f.is_module_map() and self.g.is_module_map()):
            out.append("maps are not module maps")
        if not self.f.is_injective():
            out.append("first map not injective")
        if not self.g.is_surjective():
            out.append("second map not surjective")
        if not (self.g.matrix @ self.f.matrix).is_zero():
            out.append("composite not zero")
        if self.first.dim + self.last.dim != self.middle.dim:
            out.append("image differs from kernel")
        return out

    def is_exact(self) -> bool:
        return not self.failures()


def is_exact_at(f: Matrix, g: Matrix, mid_dim: int) -> bool:
    """Exactness of ``. --f--> M --g--> .`` at ``M``."""
    if not (g @ f).is_zero():
        return False
    return f.rank() + g.rank() == mid_dim


# ---------------------------------------------------------------------------
# constructors


def regular_module(a: FiniteDimAlgebra) -> Module:
    if "regular" not in a._cache:
        a._cache["regular"] = Module(a, a.left_matrices, a.dim, name="regular")
    return a._cache["regular"]


def zero_module(a: FiniteDimAlgebra) -> Module:
    return Module(a, [Matrix.zeros(a.field, 0, 0) for _ in range(a.dim)], 0, name="0")


def trivial_character_module(a: FiniteDimAlgebra, character: Sequence) -> Module:
    """One-dimensional module ``e_i -> character[i]``."""
    return Module(a, [Matrix.raw(a.field, [[a.field(c)]], 1) for c in character], 1)


def direct_sum(*mods: Module) -> tuple[Module, list[ModuleMap], list[ModuleMap]]:
    """Direct sum with its canonical inclusions and projections."""
    if not mods:
        raise ModuleError("empty direct sum")
    a = mods[0].algebra
    f = a.field
    total = sum(m.dim for m in mods)
    acts = [block_diagonal(f, [m.actions[i] for m in mods]) for i in range(a.dim)]
    s = Module(a, acts, total)
    incs, projs = [], []
    off = 0
    for m in mods:
        inc = [[0] * m.dim for _ in range(total)]
        proj = [[0] * total for _ in range(m.dim)]
        for k in range(m.dim):
            inc[off + k][k] = 1
            proj[k][off + k] = 1
        incs.append(ModuleMap(m, s, Matrix.raw(f, inc, m.dim)))
        projs.append(ModuleMap(s, m, Matrix.raw(f, proj, total)))
        off += m.dim
    return s, incs, projs


def direct_sum_module(*mods: Module) -> Module:
    return direct_sum(*mods)[0]


def spin(m: Module, vectors: Sequence[Sequence]) -> Subspace:
    """Smallest submodule containing ``vectors``."""
    a = m.algebra
    gens = a.generators()
    mats = [m.actions[g] for g in gens]
    span = Subspace.span(m.field, m.dim, vectors)
    frontier = list(span.basis)
    while frontier:
        new = []
        for v in frontier:
            for g in mats:
                w = g.apply(v)
                if not span.contains(w):
                    span = Subspace.span(m.field, m.dim, span.basis + [w])
                    new.append(w)
        frontier = new
    return span


def is_submodule(m: Module, sub: Subspace) -> bool:
    return all(sub.contains(act.apply(v)) for act in m.actions for v in sub.basis)


def submodule(m: Module, sub: Subspace, name: str = "") -> tuple[Module, ModuleMap]:
    """The submodule on ``sub`` (must be invariant) and its inclusion."""
    inc = sub.inclusion()
    proj = sub.projection()
    acts = []
    for act in m.actions:
        img = act @ inc
        acts.append(proj @ img)
    s = Module(m.algebra, acts, sub.dim, name=name)
    return s, ModuleMap(s, m, inc)


def quotient(m: Module, sub: Subspace, name: str = "") -> tuple[Module, ModuleMap]:
    """``M / sub`` with its projection; basis = images of the non-pivot vectors."""
    comp = sub.complement_basis()
    f = m.field
    n = len(comp)
    # projection matrix: column j is quotient_coords(e_j)
    cols = []
    for j in range(m.dim):
        e = [0] * m.dim
        e[j] = 1
        cols.append(sub.quotient_coords(e))
    proj = Matrix.from_columns(f, cols, n) if m.dim else Matrix.zeros(f, n, 0)
    lift_cols = []
    for j in comp:
        e = [0] * m.dim
        e[j] = 1
        lift_cols.append(e)
    lift = Matrix.from_columns(f, lift_cols, m.dim) if comp else Matrix.zeros(f, m.dim, 0)
    acts = [proj @ act @ lift for act in m.actions]
    q = Module(m.algebra, acts, n, name=name)
    return q, ModuleMap(m, q, proj)


def kernel_module(fmap: ModuleMap) -> tuple[Module, ModuleMap]:
    return submodule(fmap.source, fmap.kernel())


def image_module(fmap: ModuleMap) -> tuple[Module, ModuleMap]:
    return submodule(fmap.target, fmap.image())


def restrict_scalars(m: Module, b: FiniteDimAlgebra, hom: Matrix) -> Module:
    """Pull back along the algebra map ``hom: B -> A`` (columns = images of basis)."""
    return Module(b, [m.act(hom.column(i)) for i in range(b.dim)], m.dim)


def linear_dual(m: Module, algebra_op: FiniteDimAlgebra | None = None) -> Module:
    """``Hom_k(M, k)`` as a left module over the opposite algebra.

    ``(phi . a)(x) = phi(a x)``, i.e. the action matrix is the transpose.
    """
    op = algebra_op or m.algebra.opposite()
    return Module(op, [act.T for act in m.actions], m.dim, name=f"D({m.name})" if m.name else "")


# ---------------------------------------------------------------------------
# Hom spaces


def hom_space(m: Module, n: Module) -> list[Matrix]:
    """Basis of ``Hom_A(M, N)`` as ``dim N x dim M`` matrices.

    Solved as the kernel of the commutation system ``X rho_M(g) = rho_N(g) X``
    over a generating set of the algebra, shrinking the candidate space one
    generator at a time.
    """
    if m.algebra is not n.algebra and not m.algebra.same_structure(n.algebra):
        raise ModuleError("modules over different algebras")
    f = m.field
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    red = f.reduce
    size = dm * dn
    gens = m.algebra.generators() or list(range(m.algebra.dim))
    basis: list[list] | None = None  # current kernel, vectors of length size (row-major X)
    for g in gens:
        A = m.actions[g].rows
        B = n.actions[g].rows
        if basis is None:
            # full commutator matrix: (X A - B X)[r][c] = sum_k X[r][k] A[k][c] - sum_k B[r][k] X[k][c]
            rows = []
            for r in range(dn):
                for c in range(dm):
                    row = [0] * size
                    for k in range(dm):
                        x = A[k][c]
                        if x != 0:
                            row[r * dm + k] += x
                    for k in range(dn):
                        x = B[r][k]
                        if x != 0:
                            row[k * dm + c] -= x
                    rows.append([red(v) for v in row])
            basis = kernel_vectors(rows, size, f)
        else:
            if not basis:
                return []
            cols = []
            for v in basis:
                X = Matrix.raw(f, [v[r * dm:(r + 1) * dm] for r in range(dn)], dm)
                cols.append((X @ m.actions[g] - n.actions[g] @ X).flatten())
            rows = [list(r) for r in zip(*cols)]
            ker = kernel_vectors(rows, len(basis), f)
            basis = [_combine_rows(f, k, basis, size) for k in ker]
    if basis is None:
        basis = Matrix.identity(f, size).rows
    basis = Subspace.span(f, size, basis).basis
    return [Matrix.raw(f, [v[r * dm:(r + 1) * dm] for r in range(dn)], dm) for v in basis]


def _combine_rows(f, coeffs: Sequence, rows: Sequence[Sequence], size: int) -> list:
    out = [0] * size
    for c, row in zip(coeffs, rows):
        if c == 0:
            continue
        for t, x in enumerate(row):
            if x != 0:
                out[t] += c * x
    return [f.reduce(v) for v in out]


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_space(m, n))


def coords_in_span(mats: Sequence[Matrix], target: Matrix) -> list | None:
    """Coordinates of ``target`` in the span of ``mats`` (None if outside)."""
    from .linalg import solve_vector

    if not mats:
        return [] if target.is_zero() else None
    A = Matrix.from_columns(target.field, [x.flatten() for x in mats], target.nrows * target.ncols)
    return solve_vector(A, target.flatten())


class SpanCoordinates:
    """Repeated coordinate solves against a fixed list of independent matrices.

    A square invertible minor is chosen once; each target then costs one
    small matrix-vector product plus a membership check.
    """

    def __init__(self, mats: Sequence[Matrix]):
        self.mats = list(mats)
        self.k = len(self.mats)
        if not self.mats:
            return
        f = self.field = self.mats[0].field
        self.flat = [x.flatten() for x in self.mats]
        _, rows = Matrix(f, self.flat, len(self.flat[0])).rref()
        if len(rows) != self.k:
            raise ModuleError("spanning matrices are not independent")
        self.rows = rows
        self.inv = Matrix(f, [[v[r] for v in self.flat] for r in rows], self.k).inverse()

    def __call__(self, target: Matrix) -> list | None:
        if not self.mats:
            return [] if target.is_zero() else None
        t = target.flatten()
        c = self.inv.apply([t[r] for r in self.rows])
        f = self.field
        red = f.reduce
        for i, x in enumerate(t):
            if red(sum(cj * v[i] for cj, v in zip(c, self.flat) if cj != 0)) != x:
                return None
        return c


def find_isomorphism(m: Module, n: Module, candidates: Sequence[Matrix] = (), seed: int = 0, tries: int = 64) -> Matrix | None:
    """An explicit module isomorphism ``M -> N`` or ``None``.

    Candidates are tried first (and accepted only if they intertwine and are
    invertible); then hom-space basis elements and seeded random combinations.
    """
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return Matrix.zeros(m.field, 0, 0)
    for c in candidates:
        if ModuleMap(m, n, c).is_module_map() and c.is_invertible():
            return c
    homs = hom_space(m, n)
    if not homs:
        return None
    for h in homs:
        if h.is_invertible():
            return h
    rng = random.Random(seed)
    f = m.field
    elems = list(f.elements()) if f.characteristic else list(range(-3, 4))
    for _ in range(tries):
        coeffs = [f(rng.choice(elems)) for _ in homs]
        h = linear_combination(f, coeffs, homs, n.dim, m.dim)
        if h.is_invertible():
            return h
    return None


def are_isomorphic(m: Module, n: Module) -> bool:
    return find_isomorphism(m, n) is not None


def submodule_lattice(m: Module, limit: int = 100000) -> list[Subspace]:
    """All submodules, as the closure of the cyclic ones under sums.

    Only feasible over small finite fields; raises if the field is infinite.
    """
    f = m.field
    if not f.characteristic:
        raise ModuleError("submodule enumeration needs a finite field")
    from itertools import product

    found: dict[tuple, Subspace] = {}
    zero = Subspace.zero(f, m.dim)
    found[zero.key()] = zero
    cyclic: dict[tuple, Subspace] = {}
    for v in product(range(f.p), repeat=m.dim):
        if not any(v):
            continue
        # one representative per line: first nonzero coordinate is 1
        lead = next(x for x in v if x)
        if lead != 1:
            continue
        s = spin(m, [list(v)])
        cyclic.setdefault(s.key(), s)
    found.update(cyclic)
    frontier = list(cyclic.values())
    while frontier:
        new = []
        for s in frontier:
            for c in cyclic.values():
                t = s + c
                k = t.key()
                if k not in found:
                    found[k] = t
                    new.append(t)
                    if len(found) > limit:
                        raise ModuleError("submodule lattice too large")
        frontier = new
    return sorted(found.values(), key=lambda s: (s.dim, s.key()))

"""Radical, idempotents, simple modules, projective covers and blocks."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy

from .algebra import AlgebraError, FiniteDimAlgebra, center, quotient_algebra, subalgebra
from .linalg import Matrix, Subspace, kernel_vectors, solve_vector
from .modules import Module, ModuleMap, direct_sum, regular_module, submodule


class NonSplitError(AlgebraError):
    """The semisimple quotient is not split over the base field."""

    code = "non-split-semisimple-quotient"


class UnsupportedFieldError(AlgebraError):
    code = "unsupported-field"


class NotIdempotentError(AlgebraError):
    code = "not-idempotent"


# ---------------------------------------------------------------------------
# radical


def jacobson_radical(a: FiniteDimAlgebra) -> Subspace:
    """The Jacobson radical as a subspace of ``a``.

    Characteristic 0 uses the kernel of the trace form of the regular
    representation.  Characteristic ``p`` uses the iterated trace-form
    kernels of Cohen, Ivanyos and Wales: ``I_i = {x in I_{i-1} :
    g_i(x y) = 0 for all y}`` with ``g_i(x) = Tr(lift(x)^(p^i)) / p^i mod p``
    and ``J = I_l`` for ``l = floor(log_p dim)``.
    """
    if "radical" in a._cache:
        return a._cache["radical"]
    f = a.field
    n = a.dim
    if f.characteristic == 0:
        traces = [sum(a.constants.get((k, j), {}).get(j, 0) for j in range(n)) for k in range(n)]
        form = []
        for i in range(n):
            row = []
            for j in range(n):
                row.append(f.reduce(sum(c * traces[k] for k, c in a.constants.get((i, j), {}).items())))
            form.append(row)
        rad = Subspace.span(f, n, kernel_vectors(form, n, f))
    elif hasattr(f, "p"):
        rad = _radical_char_p(a)
    else:  # pragma: no cover - only Q and F_p exist
        raise UnsupportedFieldError(f"no radical algorithm for {f}")
    a._cache["radical"] = rad
    return rad


def _radical_char_p(a: FiniteDimAlgebra) -> Subspace:
    f = a.field
    p = f.p
    n = a.dim
    levels = 0
    while p ** (levels + 1) <= n:
        levels += 1
    current = [a.basis_vector(i) for i in range(n)]
    L = [np.array(m.rows, dtype=object) for m in a.left_matrices]
    for i in range(levels + 1):
        if not current:
            break
        modulus = p ** (i + 1)
        use_obj = n * modulus * modulus >= 2**62
        dtype = object if use_obj else np.int64
        stack = []
        for v in current:
            for j in range(n):
                w = a.mul(v, a.basis_vector(j))
                m = sum((int(c) * L[k] for k, c in enumerate(w) if c), np.zeros((n, n), dtype=object))
                stack.append(np.asarray(m % p, dtype=dtype))
        mats = np.stack(stack) if stack else np.zeros((0, n, n), dtype=dtype)
        powered = _batched_power_mod(mats, p**i, modulus)
        traces = np.trace(powered, axis1=1, axis2=2) % modulus
        g = []
        for t in traces:
            t = int(t)
            if t % (p**i):
                raise AssertionError("trace not divisible; radical computation inconsistent")
            g.append((t // p**i) % p)
        r = len(current)
        G = [[g[k * n + j] for j in range(n)] for k in range(r)]
        # coefficients c with sum_k c_k G[k][j] = 0 for all j
        rows = [[G[k][j] for k in range(r)] for j in range(n)]
        ker = kernel_vectors(rows, r, f)
        current = [
            [f.reduce(sum(c[k] * current[k][t] for k in range(r) if c[k])) for t in range(n)]
            for c in ker
        ]
    return Subspace.span(f, n, current)


def _batched_power_mod(mats, exponent: int, modulus: int):
    n = mats.shape[-1]
    result = np.broadcast_to(np.eye(n, dtype=mats.dtype), mats.shape).copy()
    base = mats % modulus
    while exponent:
        if exponent & 1:
            result = np.matmul(result, base) % modulus
        exponent >>= 1
        if exponent:
            base = np.matmul(base, base) % modulus
    return result


def radical_power(a: FiniteDimAlgebra, k: int) -> Subspace:
    """``J^k`` as a subspace (``J^0 = A``)."""
    J = jacobson_radical(a)
    cur = Subspace.full(a.field, a.dim)
    for _ in range(k):
        cur = Subspace.span(a.field, a.dim, [a.mul(x, y) for x in cur.basis for y in J.basis])
    return cur


def is_nilpotent_element(a: FiniteDimAlgebra, x: Sequence) -> bool:
    y = list(x)
    for _ in range(a.dim + 1):
        if not any(y):
            return True
        y = a.mul(y, x)
    return not any(y)


# ---------------------------------------------------------------------------
# polynomial helpers


def _sym_domain(field):
    return sympy.QQ if field.characteristic == 0 else sympy.GF(field.p)


def _to_field(field, c):
    if field.characteristic == 0:
        c = sympy.Rational(c)
        return field(Fraction(int(c.p), int(c.q)))
    return field(int(c))


def minimal_polynomial(a: FiniteDimAlgebra, e: Sequence, y: Sequence) -> list:
    """Monic minimal polynomial of ``y`` in the corner with unit ``e``.

    Returned as coefficients, lowest degree first.
    """
    f = a.field
    powers = [list(e)]
    while True:
        nxt = a.mul(powers[-1], y)
        A = Matrix.from_columns(f, powers, a.dim)
        sol = solve_vector(A, nxt)
        if sol is not None:
            return [f.reduce(-c) for c in sol] + [1]
        powers.append(nxt)
        if len(powers) > a.dim + 1:  # pragma: no cover
            raise AssertionError("minimal polynomial degree exceeds dimension")


def evaluate_polynomial(a: FiniteDimAlgebra, coeffs: Sequence, y: Sequence, e: Sequence) -> list:
    f = a.field
    acc = [0] * a.dim
    for c in reversed(list(coeffs)):
        acc = a.mul(acc, y)
        if c:
            acc = [f.reduce(u + c * v) for u, v in zip(acc, e)]
    return acc


def _sym_poly(field, coeffs):
    x = sympy.Symbol("x")
    dom = _sym_domain(field)
    vals = [sympy.Rational(int(c.numerator), int(c.denominator)) if isinstance(c, Fraction) else int(c) for c in reversed(coeffs)]
    return sympy.Poly(vals, x, domain=dom), x


def _coeffs_from_poly(field, poly) -> list:
    return [_to_field(field, c) for c in reversed(poly.all_coeffs())]


@dataclass
class Splitting:
    idempotents: list
    factors: list  # [(coeffs of irreducible factor, multiplicity)]


def split_by_element(a: FiniteDimAlgebra, e: Sequence, y: Sequence) -> Splitting:
    """Orthogonal idempotents of the corner ``eAe`` cut out by ``y``.

    The minimal polynomial ``m`` of ``y`` is factored into coprime
    prime-power parts; each part contributes the idempotent polynomial that
    is 1 modulo that part and 0 modulo the others.
    """
    f = a.field
    m = minimal_polynomial(a, e, y)
    poly, x = _sym_poly(f, m)
    _, flist = poly.factor_list()
    factors = [(_coeffs_from_poly(f, q), k) for q, k in flist]
    if len(flist) <= 1:
        return Splitting([list(e)], factors)
    idems = []
    for q, k in flist:
        part = q**k
        rest = sympy.quo(poly, part)
        s, t, h = sympy.gcdex(rest, part)
        assert h == 1 or h.as_expr() == 1
        E = sympy.rem(s * rest, poly)
        idems.append(evaluate_polynomial(a, _coeffs_from_poly(f, sympy.Poly(E, x, domain=_sym_domain(f))), y, e))
    return Splitting(idems, factors)


def lift_idempotent(a: FiniteDimAlgebra, x: Sequence) -> list:
    """Lift an idempotent modulo the radical: ``e <- 3e^2 - 2e^3``."""
    f = a.field
    e = list(x)
    for _ in range(2 * a.dim + 2):
        e2 = a.mul(e, e)
        if e2 == e:
            return e
        e3 = a.mul(e2, e)
        e = [f.reduce(3 * u - 2 * v) for u, v in zip(e2, e3)]
    raise AssertionError("idempotent lifting did not converge")


# ---------------------------------------------------------------------------
# central idempotents and blocks


def central_primitive_idempotents(a: FiniteDimAlgebra) -> list[list]:
    """Primitive idempotents of the centre, found by splitting along centre elements."""
    if "central_idempotents" in a._cache:
        return a._cache["central_idempotents"]
    Z = center(a)
    idems = [list(a.unit)]
    zb = list(Z.basis)
    for z in zb:
        new = []
        for e in idems:
            new.extend(split_by_element(a, e, a.mul(e, z)).idempotents)
        idems = new
    # every centre element must act on each component as scalar + nilpotent
    pairs = [(zb[i], zb[j]) for i in range(len(zb)) for j in range(i + 1, len(zb))]
    for e in idems:
        for z in zb:
            sp = split_by_element(a, e, a.mul(e, z))
            if any(len(q) != 2 for q, _ in sp.factors):
                # retry with pair sums before giving up
                ok = False
                for u, v in pairs:
                    w = [a.field.reduce(s + t) for s, t in zip(u, v)]
                    if len(split_by_element(a, e, a.mul(e, w)).idempotents) > 1:
                        ok = True
                        break
                raise NonSplitError(
                    "centre has a component with a non-split residue field"
                    + (" (pair sum splits; basis sweep incomplete)" if ok else "")
                )
    idems.sort(key=lambda v: [i for i, c in enumerate(v) if c])
    a._cache["central_idempotents"] = idems
    return idems


@dataclass
class BlockDecomposition:
    idempotents: list
    blocks: list  # FiniteDimAlgebra per block (unit = idempotent)
    inclusions: list  # Matrix dim(A) x dim(block)

    def __len__(self):
        return len(self.blocks)

    @property
    def dims(self) -> list[int]:
        return [b.dim for b in self.blocks]


def block_decompose(a: FiniteDimAlgebra) -> BlockDecomposition:
    if "blocks" in a._cache:
        return a._cache["blocks"]
    idems = central_primitive_idempotents(a)
    blocks, incs = [], []
    for idx, e in enumerate(idems):
        space = a.left_matrix(e).image()
        blocks.append(subalgebra(a, space, unit=e, name=f"{a.name}[block {idx}]"))
        incs.append(space.inclusion())
    bd = BlockDecomposition(idems, blocks, incs)
    a._cache["blocks"] = bd
    return bd


def check_central_idempotent_lemma(a: FiniteDimAlgebra, e: Sequence, e2: Sequence) -> str:
    """If ``eA = Ae'`` then ``e = e'`` and it is central.

    Returns ``verified``, ``refuted`` or ``hypothesis-not-met``.
    """
    for x in (e, e2):
        if a.mul(x, x) != list(x):
            raise NotIdempotentError("argument is not idempotent")
    eA = a.left_matrix(e).image()
    Ae = a.right_matrix(e2).image()
    if eA != Ae:
        return "hypothesis-not-met"
    if list(e) == list(e2) and center(a).contains(e):
        return "verified"
    return "refuted"


# ---------------------------------------------------------------------------
# simple modules


@dataclass
class SimpleModule:
    index: int
    module: Module
    idempotent: list  # primitive idempotent of A whose projective cover tops this simple
    block_idempotent: list  # central idempotent of A/J (coordinates in A/J)

    @property
    def dim(self) -> int:
        return self.module.dim


def _primitive_in_simple(b: FiniteDimAlgebra, c: Sequence) -> list:
    """A primitive idempotent under the central idempotent ``c`` of the semisimple ``b``."""
    fld = b.field
    f = list(c)
    while True:
        corner = Subspace.span(fld, b.dim, [b.mul(b.mul(f, b.basis_vector(i)), f) for i in range(b.dim)])
        if corner.dim == 1:
            return f
        cb = corner.basis
        cands = list(cb)
        cands += [b.mul(u, v) for u in cb for v in cb]
        cands += [[fld.reduce(s + t) for s, t in zip(cb[i], cb[j])] for i in range(len(cb)) for j in range(i + 1, len(cb))]
        nxt = None
        for y in cands:
            sp = split_by_element(b, f, y)
            if len(sp.idempotents) > 1:
                nxt = sp.idempotents
                break
            (q, k), = sp.factors
            if k >= 2:
                nil = evaluate_polynomial(b, q, y, f)
                for z in cb:
                    sp2 = split_by_element(b, f, b.mul(nil, z))
                    if len(sp2.idempotents) > 1:
                        nxt = sp2.idempotents
                        break
                if nxt:
                    break
        if nxt is None:
            raise NonSplitError("simple component is not a full matrix algebra over the base field")
        # continue with the smallest piece
        f = min(nxt, key=lambda g: Subspace.span(fld, b.dim, [b.mul(b.mul(g, b.basis_vector(i)), g) for i in range(b.dim)]).dim)


def simple_modules(a: FiniteDimAlgebra) -> list[SimpleModule]:
    """One simple module per isomorphism class (split case only)."""
    if "simples" in a._cache:
        return a._cache["simples"]
    J = jacobson_radical(a)
    B = quotient_algebra(a, J, name=f"{a.name}/J")
    comp = J.complement_basis()
    images = [J.quotient_coords(a.basis_vector(i)) for i in range(a.dim)]
    out = []
    for idx, c in enumerate(central_primitive_idempotents(B)):
        fB = _primitive_in_simple(B, c)
        S = Subspace.span(a.field, B.dim, [B.mul(B.basis_vector(i), fB) for i in range(B.dim)])
        block_dim = B.left_matrix(c).rank()
        if S.dim * S.dim != block_dim:
            raise NonSplitError(f"simple component of dimension {block_dim} is not split")
        acts = []
        inc = S.inclusion()
        proj = S.projection()
        for i in range(a.dim):
            acts.append(proj @ B.left_matrix(images[i]) @ inc)
        mod = Module(a, acts, S.dim, name=f"S{idx}")
        lift = [0] * a.dim
        for pos, col in enumerate(comp):
            lift[col] = fB[pos]
        e = lift_idempotent(a, lift)
        out.append(SimpleModule(idx, mod, e, list(c)))
    a._cache["simples"] = out
    return out


def composition_multiplicities(m: Module) -> list[int]:
    """``[M : S_i]`` for each simple, read off as ``dim e_i M``."""
    return [m.act(s.idempotent).rank() for s in simple_modules(m.algebra)]


def identify_simple(m: Module) -> int | None:
    """Index of the simple isomorphic to ``m`` or ``None`` if ``m`` is not simple."""
    simples = simple_modules(m.algebra)
    mult = composition_multiplicities(m)
    hits = [i for i, k in enumerate(mult) if k]
    if len(hits) == 1 and mult[hits[0]] == 1 and simples[hits[0]].dim == m.dim:
        return hits[0]
    return None


def radical_of_module(m: Module) -> Subspace:
    J = jacobson_radical(m.algebra)
    vecs = []
    mats = [m.act(j) for j in J.basis]
    for mat in mats:
        vecs.extend(mat.columns())
    return Subspace.span(m.field, m.dim, vecs)


def socle_of_module(m: Module) -> Subspace:
    """Vectors annihilated by the radical."""
    J = jacobson_radical(m.algebra)
    if not J.basis:
        return Subspace.full(m.field, m.dim)
    rows = []
    for j in J.basis:
        rows.extend(m.act(j).copy_rows())
    return Subspace.span(m.field, m.dim, kernel_vectors(rows, m.dim, m.field))


def indecomposable_projective(a: FiniteDimAlgebra, index: int) -> Module:
    """``A e_i`` for the primitive idempotent of simple ``index``."""
    key = ("projective", index)
    if key not in a._cache:
        e = simple_modules(a)[index].idempotent
        space = a.right_matrix(e).image()
        mod, _ = submodule(regular_module(a), space, name=f"P{index}")
        mod._cache["ambient"] = space
        a._cache[key] = mod
    return a._cache[key]


@dataclass
class ProjectiveCover:
    module: Module
    map: ModuleMap
    summands: list[int]  # simple index of each indecomposable summand, in order
    offsets: list[int]

    def generator(self, k: int) -> list:
        """Coordinates in ``module`` of the generator ``e_i`` of summand ``k``."""
        a = self.module.algebra
        i = self.summands[k]
        P = indecomposable_projective(a, i)
        e = simple_modules(a)[i].idempotent
        local = P._cache["ambient"].coords(e)
        v = [0] * self.module.dim
        for t, c in enumerate(local):
            v[self.offsets[k] + t] = c
        return v


def projective_cover(m: Module) -> ProjectiveCover:
    """Projective cover ``P -> M`` with kernel inside ``rad P``."""
    a = m.algebra
    simples = simple_modules(a)
    JM = radical_of_module(m)
    gens = []
    for s in simples:
        eM = m.act(s.idempotent).image()
        span = JM
        for v in eM.basis:
            if not span.contains(v):
                gens.append((s.index, v))
                span = Subspace.span(m.field, m.dim, span.basis + [v])
    if not gens:
        from .modules import zero_module

        z = zero_module(a)
        return ProjectiveCover(z, ModuleMap(z, m, Matrix.zeros(m.field, m.dim, 0)), [], [])
    pieces = [indecomposable_projective(a, i) for i, _ in gens]
    P, _, _ = direct_sum(*pieces)
    cols = []
    offsets = []
    off = 0
    for (i, v), piece in zip(gens, pieces):
        offsets.append(off)
        for b in piece._cache["ambient"].basis:
            cols.append(m.act(b).apply(v))
        off += piece.dim
    cover = ModuleMap(P, m, Matrix.from_columns(m.field, cols, m.dim))
    return ProjectiveCover(P, cover, [i for i, _ in gens], offsets)


def is_projective(m: Module) -> bool:
    if m.dim == 0:
        return True
    pc = projective_cover(m)
    return pc.module.dim == m.dim

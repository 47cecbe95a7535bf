"""Finite-dimensional associative algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .linalg import Field, Matrix, Subspace, kernel_vectors, vec_add, vec_scale, vec_sub


class AlgebraError(ValueError):
    code = "algebra-error"


class FiniteDimAlgebra:
    """Associative unital algebra with basis ``e_0 .. e_{dim-1}``.

    ``constants`` maps ``(i, j)`` to a sparse dict ``{k: c}`` meaning
    ``e_i e_j = sum_k c e_k``.  Instances are immutable; derived data
    (radical, simples, blocks ...) is cached in ``_cache``.
    """

    def __init__(self, field: Field, dim: int, constants, unit: Sequence, labels: Sequence[str] | None = None, name: str = ""):
        self.field = field
        self.dim = dim
        red = field.reduce
        table: dict[tuple[int, int], dict[int, object]] = {}
        if isinstance(constants, dict):
            items = []
            for (i, j), terms in constants.items():
                for k, c in terms.items():
                    items.append((i, j, k, c))
        else:
            items = constants
        for i, j, k, c in items:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise AlgebraError(f"structure constant index out of range: {(i, j, k)}")
            c = field(c)
            d = table.setdefault((i, j), {})
            v = red(d.get(k, 0) + c)
            if v == 0:
                d.pop(k, None)
            else:
                d[k] = v
        self.constants = {key: d for key, d in table.items() if d}
        self.unit = [field(x) for x in unit]
        if len(self.unit) != dim:
            raise AlgebraError("unit vector has the wrong length")
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]
        self.name = name
        self._cache: dict = {}
        self._left: list[Matrix] | None = None
        self._right: list[Matrix] | None = None

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<FiniteDimAlgebra{nm} dim={self.dim} over {self.field}>"

    # ------------------------------------------------------------------
    def structure_tuples(self) -> list[tuple[int, int, int, object]]:
        return sorted((i, j, k, c) for (i, j), d in self.constants.items() for k, c in d.items())

    def basis_vector(self, i: int) -> list:
        v = [0] * self.dim
        v[i] = 1
        return v

    def zero(self) -> list:
        return [0] * self.dim

    def one(self) -> list:
        return list(self.unit)

    def mul(self, u: Sequence, v: Sequence) -> list:
        red = self.field.reduce
        out = [0] * self.dim
        su = [(i, x) for i, x in enumerate(u) if x != 0]
        sv = [(j, y) for j, y in enumerate(v) if y != 0]
        const = self.constants
        for i, x in su:
            for j, y in sv:
                d = const.get((i, j))
                if d:
                    xy = x * y
                    for k, c in d.items():
                        out[k] += xy * c
        return [red(z) for z in out]

    def mul_basis(self, i: int, j: int) -> list:
        out = [0] * self.dim
        for k, c in self.constants.get((i, j), {}).items():
            out[k] = c
        return out

    def add(self, u, v):
        return vec_add(self.field, u, v)

    def sub(self, u, v):
        return vec_sub(self.field, u, v)

    def scale(self, c, u):
        return vec_scale(self.field, c, u)

    def power(self, u: Sequence, k: int) -> list:
        result = self.one()
        for _ in range(k):
            result = self.mul(result, u)
        return result

    @property
    def left_matrices(self) -> list[Matrix]:
        """``L[i]`` is the matrix of ``x -> e_i x``."""
        if self._left is None:
            mats = []
            for i in range(self.dim):
                rows = [[0] * self.dim for _ in range(self.dim)]
                for j in range(self.dim):
                    for k, c in self.constants.get((i, j), {}).items():
                        rows[k][j] = c
                mats.append(Matrix.raw(self.field, rows, self.dim))
            self._left = mats
        return self._left

    @property
    def right_matrices(self) -> list[Matrix]:
        """``R[j]`` is the matrix of ``x -> x e_j``."""
        if self._right is None:
            mats = []
            for j in range(self.dim):
                rows = [[0] * self.dim for _ in range(self.dim)]
                for i in range(self.dim):
                    for k, c in self.constants.get((i, j), {}).items():
                        rows[k][i] = c
                mats.append(Matrix.raw(self.field, rows, self.dim))
            self._right = mats
        return self._right

    def left_matrix(self, u: Sequence) -> Matrix:
        return _combine(self.field, u, self.left_matrices, self.dim)

    def right_matrix(self, u: Sequence) -> Matrix:
        return _combine(self.field, u, self.right_matrices, self.dim)

    def is_commutative(self) -> bool:
        return all(self.constants.get((i, j), {}) == self.constants.get((j, i), {}) for i in range(self.dim) for j in range(i + 1, self.dim))

    def generators(self) -> list[int]:
        """Indices of basis elements that generate the algebra (greedy)."""
        if "generators" in self._cache:
            return self._cache["generators"]
        gens: list[int] = []
        span = Subspace.span(self.field, self.dim, [self.unit])
        for i in range(self.dim):
            if span.contains(self.basis_vector(i)):
                continue
            gens.append(i)
            span = self.subalgebra_generated([self.basis_vector(g) for g in gens])
            if span.dim == self.dim:
                break
        self._cache["generators"] = gens
        return gens

    def subalgebra_generated(self, elements: Iterable[Sequence]) -> Subspace:
        elements = [list(e) for e in elements]
        span = Subspace.span(self.field, self.dim, [self.unit] + elements)
        frontier = list(span.basis)
        while frontier:
            new = []
            for v in frontier:
                for g in elements:
                    w = self.mul(v, g)
                    if not span.contains(w):
                        span = Subspace.span(self.field, self.dim, span.basis + [w])
                        new.append(w)
            frontier = new
        return span

    # ------------------------------------------------------------------
    def opposite(self) -> "FiniteDimAlgebra":
        if "opposite" not in self._cache:
            op = FiniteDimAlgebra(
                self.field,
                self.dim,
                [(j, i, k, c) for (i, j, k, c) in self.structure_tuples()],
                self.unit,
                self.labels,
                name=f"{self.name}^op" if self.name else "op",
            )
            op._cache["opposite"] = self
            self._cache["opposite"] = op
        return self._cache["opposite"]

    def same_structure(self, other: "FiniteDimAlgebra") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.constants == other.constants
            and self.unit == other.unit
        )


def _combine(field: Field, coeffs: Sequence, mats: Sequence[Matrix], n: int) -> Matrix:
    red = field.reduce
    acc = [[0] * n for _ in range(n)]
    for c, m in zip(coeffs, mats):
        if c == 0:
            continue
        for i, r in enumerate(m.rows):
            ai = acc[i]
            for j, x in enumerate(r):
                if x != 0:
                    ai[j] += c * x
    return Matrix.raw(field, [[red(x) for x in r] for r in acc], n)


@dataclass
class ValidationReport:
    name: str
    failures: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def validate_algebra(a: FiniteDimAlgebra) -> ValidationReport:
    """Check associativity on every basis triple and the two unit laws."""
    rep = ValidationReport("algebra")
    n = a.dim
    prods = {(i, j): a.mul_basis(i, j) for i in range(n) for j in range(n)}
    for i in range(n):
        for j in range(n):
            ij = prods[(i, j)]
            for k in range(n):
                lhs = a.mul(ij, a.basis_vector(k))
                rhs = a.mul(a.basis_vector(i), prods[(j, k)])
                if lhs != rhs:
                    rep.failures.append(("associativity", (i, j, k)))
    one = a.unit
    for i in range(n):
        e = a.basis_vector(i)
        if a.mul(one, e) != e:
            rep.failures.append(("left unit", (i,)))
        if a.mul(e, one) != e:
            rep.failures.append(("right unit", (i,)))
    return rep


def center(a: FiniteDimAlgebra) -> Subspace:
    """Basis of ``{z : z e_i = e_i z for all i}``."""
    if "center" in a._cache:
        return a._cache["center"]
    n = a.dim
    rows = []
    for g in a.generators() or range(n):
        L, R = a.left_matrices[g], a.right_matrices[g]
        # z e_g - e_g z = (R_g - L_g) z
        for r in range(n):
            rows.append([a.field.reduce(x - y) for x, y in zip(R.rows[r], L.rows[r])])
    vecs = kernel_vectors(rows, n, a.field) if rows else Matrix.identity(a.field, n).rows
    z = Subspace.span(a.field, n, vecs)
    a._cache["center"] = z
    return z


def direct_sum_algebra(a: FiniteDimAlgebra, b: FiniteDimAlgebra, name: str = "") -> FiniteDimAlgebra:
    if a.field != b.field:
        raise AlgebraError("direct sum of algebras over different fields")
    off = a.dim
    tuples = a.structure_tuples() + [(i + off, j + off, k + off, c) for i, j, k, c in b.structure_tuples()]
    labels = [f"{l}" for l in a.labels] + [f"{l}'" if l in a.labels else l for l in b.labels]
    return FiniteDimAlgebra(a.field, a.dim + b.dim, tuples, a.unit + b.unit, labels, name=name)


def tensor_algebra(a: FiniteDimAlgebra, b: FiniteDimAlgebra, name: str = "") -> FiniteDimAlgebra:
    if a.field != b.field:
        raise AlgebraError("tensor product of algebras over different fields")
    f = a.field
    m = b.dim
    tuples = []
    for (i1, j1), d1 in a.constants.items():
        for (i2, j2), d2 in b.constants.items():
            for k1, c1 in d1.items():
                for k2, c2 in d2.items():
                    tuples.append((i1 * m + i2, j1 * m + j2, k1 * m + k2, f.reduce(c1 * c2)))
    unit = [f.reduce(x * y) for x in a.unit for y in b.unit]
    labels = [f"{x}*{y}" for x in a.labels for y in b.labels]
    return FiniteDimAlgebra(f, a.dim * b.dim, tuples, unit, labels, name=name)


def subalgebra(a: FiniteDimAlgebra, space: Subspace, unit: Sequence | None = None, name: str = "") -> FiniteDimAlgebra:
    """The algebra structure on a multiplicatively closed subspace.

    ``unit`` defaults to the unit of ``a``; pass an idempotent for corner or
    block algebras ``eAe``.
    """
    basis = space.basis
    tuples = []
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            w = a.mul(u, v)
            if not space.contains(w):
                raise AlgebraError("subspace is not closed under multiplication")
            for k, c in enumerate(space.coords(w)):
                if c != 0:
                    tuples.append((i, j, k, c))
    u = a.unit if unit is None else unit
    if not space.contains(u):
        raise AlgebraError("unit does not lie in the subspace")
    return FiniteDimAlgebra(a.field, space.dim, tuples, space.coords(u), name=name)


def quotient_algebra(a: FiniteDimAlgebra, ideal: Subspace, name: str = "") -> FiniteDimAlgebra:
    """``A / I`` with basis the images of the non-pivot basis vectors of ``I``."""
    comp = ideal.complement_basis()
    tuples = []
    for x, i in enumerate(comp):
        for y, j in enumerate(comp):
            w = ideal.quotient_coords(a.mul_basis(i, j))
            for z, c in enumerate(w):
                if c != 0:
                    tuples.append((x, y, z, c))
    return FiniteDimAlgebra(a.field, len(comp), tuples, ideal.quotient_coords(a.unit), name=name)


def matrix_algebra(field: Field, n: int) -> FiniteDimAlgebra:
    """``M_n`` on matrix units, ``e_(i,j) = index i*n + j``."""
    tuples = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                tuples.append((i * n + j, j * n + l, i * n + l, 1))
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return FiniteDimAlgebra(field, n * n, tuples, unit, labels, name=f"M{n}")


def upper_triangular_algebra(field: Field) -> FiniteDimAlgebra:
    """The A2 path algebra: upper-triangular 2x2 matrices on ``E11, E12, E22``."""
    # E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
    tuples = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]
    return FiniteDimAlgebra(field, 3, tuples, [1, 0, 1], ["E11", "E12", "E22"], name="A2")


def field_algebra(field: Field) -> FiniteDimAlgebra:
    return FiniteDimAlgebra(field, 1, [(0, 0, 0, 1)], [1], ["1"], name="k")


@dataclass
class Element:
    """Convenience wrapper for arithmetic with algebra elements."""

    parent: FiniteDimAlgebra
    coords: tuple

    def __post_init__(self):
        self.coords = tuple(self.coords)
        if len(self.coords) != self.parent.dim:
            raise AlgebraError("coordinate vector has the wrong length")

    def __add__(self, other):
        return Element(self.parent, self.parent.add(self.coords, other.coords))

    def __sub__(self, other):
        return Element(self.parent, self.parent.sub(self.coords, other.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return Element(self.parent, self.parent.mul(self.coords, other.coords))
        return Element(self.parent, self.parent.scale(self.parent.field(other), self.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Element) and self.coords == other.coords and self.parent is other.parent

    def __hash__(self):
        return hash(self.coords)

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_central(self) -> bool:
        return center(self.parent).contains(self.coords)

"""Exact scalar fields and a dense linear-algebra kernel.

Scalars are plain Python numbers.  Over the rationals an entry is an ``int``
or a ``fractions.Fraction`` (integral fractions are normalised back to
``int`` so the common integer case stays fast); over a prime field it is an
``int`` in ``range(p)``.  Nothing here ever touches floating point.

Tensor index convention, used by every module in the package: the basis
vector ``e_i (x) f_j`` of ``V (x) W`` has index ``i * dim(W) + j`` (left factor
major).  ``kronecker`` realises exactly this convention.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class FieldError(ArithmeticError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Base class for the two supported exact fields."""

    characteristic: int = 0

    def __call__(self, x):
        raise NotImplementedError

    zero = 0
    one = 1

    def is_zero(self, x) -> bool:
        return x == 0

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return self.reduce(x * self.inv(y))

    def reduce(self, x):
        raise NotImplementedError

    def elements(self):
        raise FieldError(f"{self} is infinite")


class Rationals(Field):
    characteristic = 0
    name = "Q"

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        elif isinstance(x, tuple):
            x = Fraction(*x)
        return self.reduce(x)

    def reduce(self, x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        if type(x) is int or type(x) is Fraction:
            return x
        if isinstance(x, int):
            return int(x)
        return self.reduce(Fraction(x))

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in Q")
        if type(x) is int:
            return 1 if x == 1 else (-1 if x == -1 else Fraction(1, x))
        return self.reduce(1 / x)

    def div(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero in Q")
        return self.reduce(Fraction(x) / y)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        elif isinstance(x, tuple):
            x = Fraction(*x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def reduce(self, x):
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return pow(x, -1, self.p)

    def elements(self):
        return range(self.p)

    def __repr__(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """Parse a field descriptor: ``Q``, ``F5``, ``Fp 5`` or ``GF(5)``."""
    t = text.strip().replace("GF(", "F").rstrip(")")
    if t in ("Q", "QQ"):
        return QQ
    if t.startswith("Fp"):
        return GF(int(t[2:]))
    if t.startswith("F"):
        return GF(int(t[1:]))
    raise FieldError(f"unknown field descriptor {text!r}")


def format_scalar(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


# ---------------------------------------------------------------------------
# row-level kernels (lists of lists, entries already reduced)


def _rref_rows(rows: list[list], ncols: int, field: Field, stop_col: int | None = None):
    """In-place reduced row echelon form; returns the pivot columns.

    Only columns ``< stop_col`` are used as pivots (for augmented systems).
    """
    limit = ncols if stop_col is None else stop_col
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    if field.characteristic:
        p = field.p
        for c in range(limit):
            if r == nrows:
                break
            piv = None
            for i in range(r, nrows):
                if rows[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            prow = rows[r]
            inv = pow(prow[c], -1, p)
            if inv != 1:
                prow = [x * inv % p for x in prow]
                rows[r] = prow
            nz = [j for j in range(c, ncols) if prow[j]]
            for i in range(nrows):
                if i != r:
                    row = rows[i]
                    f = row[c]
                    if f:
                        for j in nz:
                            row[j] = (row[j] - f * prow[j]) % p
            pivots.append(c)
            r += 1
    else:
        red = field.reduce
        for c in range(limit):
            if r == nrows:
                break
            piv = None
            for i in range(r, nrows):
                if rows[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            prow = rows[r]
            lead = prow[c]
            if lead != 1:
                inv = field.inv(lead)
                prow = [red(x * inv) if x else 0 for x in prow]
                rows[r] = prow
            nz = [j for j in range(c, ncols) if prow[j] != 0]
            for i in range(nrows):
                if i != r:
                    row = rows[i]
                    f = row[c]
                    if f != 0:
                        for j in nz:
                            row[j] = red(row[j] - f * prow[j])
            pivots.append(c)
            r += 1
    return pivots


def _matmul_rows(a: list[list], b: list[list], ncols_b: int, field: Field) -> list[list]:
    out = []
    if field.characteristic:
        p = field.p
        for arow in a:
            acc = [0] * ncols_b
            for k, x in enumerate(arow):
                if x:
                    brow = b[k]
                    for j in range(ncols_b):
                        y = brow[j]
                        if y:
                            acc[j] += x * y
            out.append([v % p for v in acc])
    else:
        red = field.reduce
        for arow in a:
            acc = [0] * ncols_b
            for k, x in enumerate(arow):
                if x != 0:
                    brow = b[k]
                    for j in range(ncols_b):
                        y = brow[j]
                        if y != 0:
                            acc[j] += x * y
            out.append([red(v) for v in acc])
    return out


class Matrix:
    """Dense exact matrix.  Treated as immutable once built."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Iterable[Sequence], ncols: int | None = None, *, _trusted=False):
        self.field = field
        if _trusted:
            self.rows = rows
        else:
            self.rows = [[field(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            if self.nrows == 0:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")

    # constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols, _trusted=True)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        return cls(field, rows, n, _trusted=True)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        if not cols:
            return cls.zeros(field, nrows, 0)
        return cls(field, [list(r) for r in zip(*cols)], len(cols), _trusted=True)

    @classmethod
    def raw(cls, field: Field, rows: list[list], ncols: int) -> "Matrix":
        return cls(field, rows, ncols, _trusted=True)

    # basic protocol ---------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix<{self.field}>({self.nrows}x{self.ncols}: {body})"

    def copy_rows(self) -> list[list]:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list]:
        return [list(c) for c in zip(*self.rows)] if self.nrows else [[] for _ in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        if self.nrows == 0:
            return Matrix.zeros(self.field, self.ncols, 0)
        return Matrix(self.field, [list(c) for c in zip(*self.rows)], self.nrows, _trusted=True)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(x == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    # arithmetic -------------------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        red = self.field.reduce
        return Matrix.raw(self.field, [[red(x + y) for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        red = self.field.reduce
        return Matrix.raw(self.field, [[red(x - y) for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> "Matrix":
        red = self.field.reduce
        return Matrix.raw(self.field, [[red(-x) for x in r] for r in self.rows], self.ncols)

    def scale(self, c) -> "Matrix":
        red = self.field.reduce
        c = self.field(c)
        return Matrix.raw(self.field, [[red(c * x) for x in r] for r in self.rows], self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            return Matrix.raw(self.field, _matmul_rows(self.rows, other.rows, other.ncols, self.field), other.ncols)
        return self.apply(other)

    def apply(self, v: Sequence) -> list:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        red = self.field.reduce
        nz = [(j, x) for j, x in enumerate(v) if x != 0]
        return [red(sum(r[j] * x for j, x in nz)) for r in self.rows]

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix.raw(self.field, [a + b for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix.raw(self.field, self.copy_rows() + other.copy_rows(), self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix.raw(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def flatten(self) -> list:
        return [x for r in self.rows for x in r]

    # linear algebra ---------------------------------------------------------
    def rref(self) -> tuple["Matrix", list[int]]:
        return rref(self)

    def rank(self) -> int:
        rows = self.copy_rows()
        return len(_rref_rows(rows, self.ncols, self.field))

    def kernel(self) -> "Subspace":
        return kernel_basis(self)

    def image(self) -> "Subspace":
        return Subspace.span(self.field, self.nrows, self.columns())

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        sol = solve_linear(self, Matrix.identity(self.field, self.nrows))
        if sol is None:
            raise ZeroDivisionError("matrix is singular")
        return sol

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def power(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse().power(-k)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = m.copy_rows()
    pivots = _rref_rows(rows, m.ncols, m.field)
    return Matrix.raw(m.field, rows, m.ncols), pivots


def kernel_vectors(rows: list[list], ncols: int, field: Field) -> list[list]:
    """Null-space basis of the matrix with the given rows (rows are consumed)."""
    pivots = _rref_rows(rows, ncols, field)
    pivset = set(pivots)
    red = field.reduce
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            x = rows[r][free]
            if x != 0:
                v[pc] = red(-x)
        basis.append(v)
    return basis


def kernel_basis(m: Matrix) -> "Subspace":
    """Basis of ``{v : m v = 0}``."""
    vecs = kernel_vectors(m.copy_rows(), m.ncols, m.field)
    return Subspace.span(m.field, m.ncols, vecs)


def solve_linear(m: Matrix, targets: Matrix) -> Matrix | None:
    """A particular solution ``X`` of ``m X = targets`` or ``None``."""
    if m.nrows != targets.nrows:
        raise ValueError("targets must have the same row count as the system")
    n, k = m.ncols, targets.ncols
    rows = [a + b for a, b in zip(m.copy_rows(), targets.copy_rows())]
    pivots = _rref_rows(rows, n + k, m.field, stop_col=n)
    r = len(pivots)
    for i in range(r, len(rows)):
        if any(x != 0 for x in rows[i][n:]):
            return None
    out = [[0] * k for _ in range(n)]
    for i, pc in enumerate(pivots):
        out[pc] = list(rows[i][n:])
    return Matrix.raw(m.field, out, k)


def solve_vector(m: Matrix, b: Sequence) -> list | None:
    sol = solve_linear(m, Matrix.raw(m.field, [[x] for x in b], 1))
    return None if sol is None else sol.column(0)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with index ``(i, j) -> i * b.nrows + j``."""
    f = a.field
    red = f.reduce
    rows = []
    for arow in a.rows:
        for brow in b.rows:
            row = []
            for x in arow:
                if x == 0:
                    row.extend([0] * b.ncols)
                else:
                    row.extend(red(x * y) if y != 0 else 0 for y in brow)
            rows.append(row)
    return Matrix.raw(f, rows, a.ncols * b.ncols)


def block_diagonal(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    nr = sum(b.nrows for b in blocks)
    nc = sum(b.ncols for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for r in b.rows:
            rows.append([0] * off + list(r) + [0] * (nc - off - b.ncols))
        off += b.ncols
    return Matrix.raw(field, rows, nc) if rows else Matrix.zeros(field, nr, nc)


def linear_combination(field: Field, coeffs: Sequence, mats: Sequence[Matrix], nrows: int, ncols: int) -> Matrix:
    red = field.reduce
    acc = [[0] * ncols for _ in range(nrows)]
    for c, m in zip(coeffs, mats):
        if c == 0:
            continue
        for i, r in enumerate(m.rows):
            ai = acc[i]
            for j, x in enumerate(r):
                if x != 0:
                    ai[j] += c * x
    return Matrix.raw(field, [[red(x) for x in r] for r in acc], ncols)


def vec_add(field: Field, u: Sequence, v: Sequence) -> list:
    red = field.reduce
    return [red(x + y) for x, y in zip(u, v)]


def vec_sub(field: Field, u: Sequence, v: Sequence) -> list:
    red = field.reduce
    return [red(x - y) for x, y in zip(u, v)]


def vec_scale(field: Field, c, v: Sequence) -> list:
    red = field.reduce
    return [red(c * x) for x in v]


class Subspace:
    """A subspace of ``field^ambient_dim`` stored by an RREF basis.

    Because the basis is reduced, the coordinates of a member vector are just
    its entries at the pivot positions.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, rref_rows: list[list], pivots: list[int]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = rref_rows
        self.pivots = pivots

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [list(v) for v in vectors]
        if not rows:
            return cls(field, ambient_dim, [], [])
        pivots = _rref_rows(rows, ambient_dim, field)
        return cls(field, ambient_dim, rows[: len(pivots)], pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [], [])

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim).rows, list(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.pivots == other.pivots and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(r) for r in self.basis)))

    def key(self) -> tuple:
        return tuple(tuple(r) for r in self.basis)

    def reduce(self, v: Sequence) -> list:
        """Normal form of ``v`` modulo this subspace."""
        red = self.field.reduce
        w = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = w[pc]
            if c != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        w[j] = red(w[j] - c * x)
        return w

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coords(self, v: Sequence, check: bool = False) -> list:
        if check and not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return [v[p] for p in self.pivots]

    def vector(self, coords: Sequence) -> list:
        red = self.field.reduce
        out = [0] * self.ambient_dim
        for c, row in zip(coords, self.basis):
            if c != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        out[j] += c * x
        return [red(x) for x in out]

    def inclusion(self) -> Matrix:
        """Matrix whose columns are the basis vectors (ambient x dim)."""
        return Matrix.from_columns(self.field, self.basis, self.ambient_dim)

    def projection(self) -> Matrix:
        """Coordinate extraction (dim x ambient); a left inverse of ``inclusion``."""
        rows = []
        for p in self.pivots:
            r = [0] * self.ambient_dim
            r[p] = 1
            rows.append(r)
        return Matrix.raw(self.field, rows, self.ambient_dim)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        # solve sum a_i u_i = sum b_j w_j
        cols = [list(u) for u in self.basis] + [vec_scale(self.field, -1, w) for w in other.basis]
        m = Matrix.from_columns(self.field, cols, self.ambient_dim)
        ker = kernel_basis(m)
        vecs = [self.vector(k[: self.dim]) for k in ker.basis]
        return Subspace.span(self.field, self.ambient_dim, vecs)

    def complement_basis(self) -> list[int]:
        """Standard basis indices spanning a complement (the non-pivots)."""
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def quotient_coords(self, v: Sequence) -> list:
        w = self.reduce(v)
        return [w[j] for j in self.complement_basis()]

"""Weak bialgebra and weak Hopf structures on finite-dimensional algebras.

Tensor indices follow one convention everywhere: ``e_p (x) e_q`` has index
``p * dim + q`` (left factor major).  Coalgebra data is kept both as dense
matrices and as sparse Sweedler terms ``{(p, q): c}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import permutations
from typing import Callable, Hashable, Sequence

from .algebra import (
    AlgebraError,
    FiniteDimAlgebra,
    ValidationReport,
    direct_sum_algebra,
    subalgebra,
    tensor_algebra,
)
from .linalg import Field, Matrix, Subspace, kronecker


class NotAGroupoidError(AlgebraError):
    code = "not-a-groupoid"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class MissingAntipodeError(AlgebraError):
    code = "missing-antipode"


def _sparse(vec: Sequence) -> dict:
    return {i: c for i, c in enumerate(vec) if c != 0}


class WeakHopfAlgebra:
    """An algebra with comultiplication, counit and optional antipode.

    ``comul`` is the ``dim^2 x dim`` matrix of Delta, ``counit`` the
    ``1 x dim`` matrix of epsilon and ``antipode`` the ``dim x dim`` matrix
    of S (``None`` for a weak bialgebra).
    """

    def __init__(self, algebra: FiniteDimAlgebra, comul: Matrix, counit: Matrix, antipode: Matrix | None = None, name: str = ""):
        n = algebra.dim
        if comul.shape != (n * n, n):
            raise AlgebraError(f"comultiplication must be {n * n}x{n}, got {comul.shape}")
        if counit.shape != (1, n):
            raise AlgebraError(f"counit must be 1x{n}, got {counit.shape}")
        if antipode is not None and antipode.shape != (n, n):
            raise AlgebraError(f"antipode must be {n}x{n}, got {antipode.shape}")
        self.algebra = algebra
        self.comul = comul
        self.counit = counit
        self.antipode = antipode
        self.name = name or algebra.name
        self._cache: dict = {}
        cols = comul.columns()
        self._terms = [{divmod(r, n): c for r, c in enumerate(col) if c != 0} for col in cols]

    @classmethod
    def from_terms(cls, algebra: FiniteDimAlgebra, delta: Sequence[dict], counit: Sequence, antipode: Sequence[dict] | Matrix | None = None, name: str = ""):
        """Build from sparse data: ``delta[i] = {(p, q): c}``, ``antipode[i] = {j: c}``."""
        f = algebra.field
        n = algebra.dim
        rows = [[0] * n for _ in range(n * n)]
        for i, terms in enumerate(delta):
            for (p, q), c in terms.items():
                rows[p * n + q][i] = f.reduce(rows[p * n + q][i] + f(c))
        S = None
        if isinstance(antipode, Matrix):
            S = antipode
        elif antipode is not None:
            srows = [[0] * n for _ in range(n)]
            for i, terms in enumerate(antipode):
                for j, c in terms.items():
                    srows[j][i] = f(c)
            S = Matrix(f, srows, n)
        return cls(algebra, Matrix(f, rows, n), Matrix(f, [[f(c) for c in counit]], n), S, name=name)

    def __repr__(self):
        kind = "WeakHopfAlgebra" if self.antipode is not None else "WeakBialgebra"
        return f"<{kind} {self.name} dim={self.dim} over {self.field}>"

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def has_antipode(self) -> bool:
        return self.antipode is not None

    def with_data(self, comul=None, counit=None, antipode=None, name=None) -> "WeakHopfAlgebra":
        return WeakHopfAlgebra(
            self.algebra,
            self.comul if comul is None else comul,
            self.counit if counit is None else counit,
            self.antipode if antipode is None else antipode,
            name=self.name if name is None else name,
        )

    # ------------------------------------------------------------------
    def delta_terms(self, i: int) -> dict:
        """Sweedler terms of ``Delta(e_i)`` as ``{(p, q): c}``."""
        return self._terms[i]

    def delta(self, v: Sequence) -> list:
        return self.comul.apply(v)

    def eps(self, v: Sequence):
        f = self.field
        return f.reduce(sum(c * x for c, x in zip(self.counit.rows[0], v) if x))

    def S(self, v: Sequence) -> list:
        if self.antipode is None:
            raise MissingAntipodeError(f"{self.name} has no antipode")
        return self.antipode.apply(v)

    @property
    def delta_one(self) -> list:
        if "delta_one" not in self._cache:
            self._cache["delta_one"] = self.delta(self.algebra.unit)
        return self._cache["delta_one"]

    def delta_one_terms(self) -> dict:
        n = self.dim
        return {divmod(r, n): c for r, c in enumerate(self.delta_one) if c != 0}

    def is_bialgebra_unit(self) -> bool:
        """``Delta(1) == 1 (x) 1``."""
        u = self.algebra.unit
        return self.delta_one == [self.field.reduce(x * y) for x in u for y in u]

    # counital maps -----------------------------------------------------
    def _counital_matrix(self, key: str) -> Matrix:
        if key in self._cache:
            return self._cache[key]
        a = self.algebra
        f = self.field
        n = self.dim
        eps_row = self.counit.rows[0]
        one = self.delta_one_terms()
        cols = []
        for i in range(n):
            col = [0] * n
            for (p, q), c in one.items():
                if key == "eps_s":  # 1_1 eps(h 1_2)
                    x, out = self._eps_of(a.mul_basis(i, q), eps_row), p
                elif key == "eps_t":  # eps(1_1 h) 1_2
                    x, out = self._eps_of(a.mul_basis(p, i), eps_row), q
                elif key == "eps_bar_s":  # 1_1 eps(1_2 h)
                    x, out = self._eps_of(a.mul_basis(q, i), eps_row), p
                else:  # eps_bar_t: eps(h 1_1) 1_2
                    x, out = self._eps_of(a.mul_basis(i, p), eps_row), q
                if x:
                    col[out] += c * x
            cols.append([f.reduce(z) for z in col])
        m = Matrix.from_columns(f, cols, n)
        self._cache[key] = m
        return m

    def _eps_of(self, vec, eps_row):
        return self.field.reduce(sum(c * x for c, x in zip(eps_row, vec) if x))

    @property
    def eps_s_matrix(self) -> Matrix:
        return self._counital_matrix("eps_s")

    @property
    def eps_t_matrix(self) -> Matrix:
        return self._counital_matrix("eps_t")

    @property
    def eps_bar_s_matrix(self) -> Matrix:
        return self._counital_matrix("eps_bar_s")

    @property
    def eps_bar_t_matrix(self) -> Matrix:
        return self._counital_matrix("eps_bar_t")

    def eps_s(self, h: Sequence) -> list:
        return self.eps_s_matrix.apply(h)

    def eps_t(self, h: Sequence) -> list:
        return self.eps_t_matrix.apply(h)

    def eps_bar_s(self, h: Sequence) -> list:
        return self.eps_bar_s_matrix.apply(h)

    @property
    def H_s(self) -> Subspace:
        return self.eps_s_matrix.image()

    @property
    def H_t(self) -> Subspace:
        return self.eps_t_matrix.image()

    def counital_data(self) -> "CounitalData":
        if "counital" not in self._cache:
            hs, ht = self.H_s, self.H_t
            self._cache["counital"] = CounitalData(
                self.eps_s_matrix,
                self.eps_t_matrix,
                hs,
                ht,
                subalgebra(self.algebra, hs, name=f"{self.name}_s"),
                subalgebra(self.algebra, ht, name=f"{self.name}_t"),
            )
        return self._cache["counital"]

    def opcop(self) -> "WeakHopfAlgebra":
        """``H^{op,cop}``: opposite product, flipped coproduct, same counit and antipode."""
        if "opcop" not in self._cache:
            delta = [{(q, p): c for (p, q), c in t.items()} for t in self._terms]
            w = WeakHopfAlgebra.from_terms(self.algebra.opposite(), delta, self.counit.rows[0], self.antipode, name=f"{self.name}^opcop")
            w._cache["opcop"] = self
            self._cache["opcop"] = w
        return self._cache["opcop"]


@dataclass
class CounitalData:
    eps_s_matrix: Matrix
    eps_t_matrix: Matrix
    H_s: Subspace
    H_t: Subspace
    H_s_algebra: FiniteDimAlgebra
    H_t_algebra: FiniteDimAlgebra


# ---------------------------------------------------------------------------
# axiom checking
#
# The checker works on any structure exposing its basis through hashable keys
# with sparse products; finite-dimensional algebras and the degree-bounded
# symbolic families share it.


class SparseStructure:
    """Interface for the axiom checker.

    Subclasses provide ``field``, ``unit`` (sparse dict), ``mul_keys``,
    ``delta_key``, ``eps_key`` and optionally ``antipode_key``.
    """

    field: Field
    unit: dict
    has_antipode: bool = True

    def mul_keys(self, a: Hashable, b: Hashable) -> dict:
        raise NotImplementedError

    def delta_key(self, a: Hashable) -> dict:
        raise NotImplementedError

    def eps_key(self, a: Hashable):
        raise NotImplementedError

    def antipode_key(self, a: Hashable) -> dict:
        raise NotImplementedError


class _Lin:
    """Linear extensions and tensor arithmetic over a ``SparseStructure``."""

    def __init__(self, st: SparseStructure):
        self.st = st
        self.f = st.field
        self._mul: dict = {}
        self._delta: dict = {}
        self._eps: dict = {}
        self._S: dict = {}

    def _add(self, out: dict, key, c):
        v = self.f.reduce(out.get(key, 0) + c)
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    def mk(self, a, b) -> dict:
        k = (a, b)
        if k not in self._mul:
            self._mul[k] = self.st.mul_keys(a, b)
        return self._mul[k]

    def dk(self, a) -> dict:
        if a not in self._delta:
            self._delta[a] = self.st.delta_key(a)
        return self._delta[a]

    def ek(self, a):
        if a not in self._eps:
            self._eps[a] = self.st.eps_key(a)
        return self._eps[a]

    def sk(self, a) -> dict:
        if a not in self._S:
            self._S[a] = self.st.antipode_key(a)
        return self._S[a]

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, c in x.items():
            for b, d in y.items():
                for k, e in self.mk(a, b).items():
                    self._add(out, k, c * d * e)
        return out

    def delta(self, x: dict) -> dict:
        out: dict = {}
        for a, c in x.items():
            for k, e in self.dk(a).items():
                self._add(out, k, c * e)
        return out

    def eps(self, x: dict):
        return self.f.reduce(sum(c * self.ek(a) for a, c in x.items()))

    def S(self, x: dict) -> dict:
        out: dict = {}
        for a, c in x.items():
            for k, e in self.sk(a).items():
                self._add(out, k, c * e)
        return out

    def tmul(self, x: dict, y: dict) -> dict:
        """Product in a tensor power; keys are tuples of basis keys."""
        out: dict = {}
        for ka, c in x.items():
            for kb, d in y.items():
                parts = [self.mk(a, b) for a, b in zip(ka, kb)]
                if not all(parts):
                    continue
                for combo in _product_terms(parts):
                    key, e = combo
                    self._add(out, key, c * d * e)
        return out

    def tensor(self, *xs: dict) -> dict:
        out = {(): 1}
        for x in xs:
            nxt: dict = {}
            for k, c in out.items():
                for a, d in x.items():
                    self._add(nxt, k + (a,), c * d)
            out = nxt
        return out

    def apply_leg(self, x: dict, leg: int, fn: Callable[[Hashable], dict]) -> dict:
        """Apply a linear map (given on keys, returning a dict) to one tensor leg.

        If ``fn`` returns tuples as keys they are spliced in place.
        """
        out: dict = {}
        for key, c in x.items():
            for k2, e in fn(key[leg]).items():
                ins = k2 if isinstance(k2, tuple) else (k2,)
                self._add(out, key[:leg] + ins + key[leg + 1:], c * e)
        return out

    def contract_eps(self, x: dict, leg: int) -> dict:
        out: dict = {}
        for key, c in x.items():
            e = self.ek(key[leg])
            if e:
                rest = key[:leg] + key[leg + 1:]
                self._add(out, rest[0] if len(rest) == 1 else rest, c * e)
        return out


def _product_terms(parts: list[dict]):
    if not parts:
        yield (), 1
        return
    head, rest = parts[0], parts[1:]
    for tail, e in _product_terms(rest):
        for k, c in head.items():
            yield (k,) + tail, c * e


@dataclass
class AxiomReport(ValidationReport):
    """Failing tuples per axiom; ``checked`` counts evaluated instances."""

    checked: dict = dc_field(default_factory=dict)
    genuine_bialgebra: bool | None = None
    limit: int = 50

    def fail(self, axiom: str, witness) -> None:
        if sum(1 for a, _ in self.failures if a == axiom) < self.limit:
            self.failures.append((axiom, witness))
        self.checked.setdefault("_failed", {}).setdefault(axiom, 0)
        self.checked["_failed"][axiom] += 1

    def count(self, axiom: str, k: int = 1) -> None:
        self.checked[axiom] = self.checked.get(axiom, 0) + k

    def failed_axioms(self) -> list[str]:
        return sorted({a for a, _ in self.failures})

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        out = AxiomReport(self.name, self.failures + other.failures)
        for rep in (self, other):
            for k, v in rep.checked.items():
                if k != "_failed":
                    out.checked[k] = out.checked.get(k, 0) + v
        out.genuine_bialgebra = self.genuine_bialgebra if self.genuine_bialgebra is not None else other.genuine_bialgebra
        return out


def check_weak_bialgebra_structure(st: SparseStructure, keys: Sequence, name: str = "weak bialgebra") -> AxiomReport:
    """Coalgebra axioms plus (a) multiplicativity of Delta, (b) weak
    comultiplicativity of the unit and (c) weak multiplicativity of the counit,
    checked on all basis keys (pairs, triples) in ``keys``."""
    L = _Lin(st)
    rep = AxiomReport(name)
    one = st.unit
    keys = list(keys)
    # coassociativity and counit
    for a in keys:
        d = L.dk(a)
        lhs = L.apply_leg({(p, q): c for (p, q), c in d.items()}, 0, L.dk)
        rhs = L.apply_leg({(p, q): c for (p, q), c in d.items()}, 1, L.dk)
        rep.count("coassociativity")
        if lhs != rhs:
            rep.fail("coassociativity", (a,))
        rep.count("counit")
        if L.contract_eps(d, 0) != {a: 1} or L.contract_eps(d, 1) != {a: 1}:
            rep.fail("counit", (a,))
    # (a)
    for a in keys:
        for b in keys:
            rep.count("comultiplicativity")
            lhs = L.delta(L.mk(a, b))
            rhs = L.tmul(L.dk(a), L.dk(b))
            if lhs != rhs:
                rep.fail("comultiplicativity", (a, b))
    # (b)
    d1 = L.delta(one)
    d2 = L.apply_leg(d1, 0, L.dk)
    d1_one = _extend(d1, one, L, right=True)
    one_d1 = _extend(d1, one, L, right=False)
    left = L.tmul(d1_one, one_d1)
    right = L.tmul(one_d1, d1_one)
    rep.count("unit-comultiplicativity", 2)
    if d2 != left:
        rep.fail("unit-comultiplicativity", ("(Delta(1) x 1)(1 x Delta(1))",))
    if d2 != right:
        rep.fail("unit-comultiplicativity", ("(1 x Delta(1))(Delta(1) x 1)",))
    # (c) via the bilinear form E(x, y) = eps(xy)
    E: dict = {}

    def form(x, y):
        k = (x, y)
        if k not in E:
            E[k] = L.eps(L.mk(x, y))
        return E[k]

    f = st.field
    for a in keys:
        for b in keys:
            ab = L.mk(a, b)
            db = L.dk(b)
            for c in keys:
                lhs = f.reduce(sum(v * form(k, c) for k, v in ab.items()))
                m1 = f.reduce(sum(v * form(a, p) * form(q, c) for (p, q), v in db.items()))
                m2 = f.reduce(sum(v * form(a, q) * form(p, c) for (p, q), v in db.items()))
                rep.count("counit-multiplicativity", 2)
                if lhs != m1:
                    rep.fail("counit-multiplicativity", (a, b, c, "eps(ab1)eps(b2c)"))
                if lhs != m2:
                    rep.fail("counit-multiplicativity", (a, b, c, "eps(ab2)eps(b1c)"))
    # genuine bialgebra flag: Delta(1) = 1 (x) 1
    rep.genuine_bialgebra = d1 == L.tensor(one, one)
    return rep


def _extend(d1: dict, one: dict, L: _Lin, right: bool) -> dict:
    """``Delta(1) (x) 1`` (``right=True``) or ``1 (x) Delta(1)``."""
    out: dict = {}
    for (p, q), c in d1.items():
        for u, e in one.items():
            key = (p, q, u) if right else (u, p, q)
            L._add(out, key, c * e)
    return out


def check_antipode_structure(st: SparseStructure, keys: Sequence, name: str = "antipode") -> AxiomReport:
    """The three antipode identities and anti-multiplicativity on basis keys."""
    L = _Lin(st)
    rep = AxiomReport(name)
    one = st.unit
    d1 = L.delta(one)
    keys = list(keys)

    def eps_s(x: dict) -> dict:  # 1_1 eps(x 1_2)
        out: dict = {}
        for (p, q), c in d1.items():
            e = L.eps(L.mul(x, {q: 1}))
            if e:
                L._add(out, p, c * e)
        return out

    def eps_t(x: dict) -> dict:  # eps(1_1 x) 1_2
        out: dict = {}
        for (p, q), c in d1.items():
            e = L.eps(L.mul({p: 1}, x))
            if e:
                L._add(out, q, c * e)
        return out

    rep.count("antipode-unit")
    if L.S(one) != one:
        rep.fail("antipode-unit", ("S(1)",))
    for a in keys:
        d = L.dk(a)
        src: dict = {}
        tgt: dict = {}
        for (p, q), c in d.items():
            for k, e in L.mul(L.sk(p), {q: 1}).items():
                L._add(src, k, c * e)
            for k, e in L.mul({p: 1}, L.sk(q)).items():
                L._add(tgt, k, c * e)
        rep.count("antipode-source")
        if src != eps_s({a: 1}):
            rep.fail("antipode-source", (a,))
        rep.count("antipode-target")
        if tgt != eps_t({a: 1}):
            rep.fail("antipode-target", (a,))
        d2 = L.apply_leg(d, 0, L.dk)
        tri: dict = {}
        for (p, q, r), c in d2.items():
            for k, e in L.mul(L.mul(L.sk(p), {q: 1}), L.sk(r)).items():
                L._add(tri, k, c * e)
        rep.count("antipode-triple")
        if tri != L.sk(a):
            rep.fail("antipode-triple", (a,))
    for a in keys:
        for b in keys:
            rep.count("antipode-antimultiplicative")
            if L.S(L.mk(a, b)) != L.mul(L.sk(b), L.sk(a)):
                rep.fail("antipode-antimultiplicative", (a, b))
    return rep


class _FiniteStructure(SparseStructure):
    def __init__(self, w: WeakHopfAlgebra):
        self.w = w
        self.field = w.field
        self.unit = _sparse(w.algebra.unit)
        self.has_antipode = w.antipode is not None
        self._eps = w.counit.rows[0]
        self._S = [_sparse(col) for col in w.antipode.columns()] if w.antipode is not None else None

    def mul_keys(self, a, b):
        return dict(self.w.algebra.constants.get((a, b), {}))

    def delta_key(self, a):
        return self.w.delta_terms(a)

    def eps_key(self, a):
        return self._eps[a]

    def antipode_key(self, a):
        return self._S[a]


def check_weak_bialgebra(w: WeakHopfAlgebra) -> AxiomReport:
    rep = check_weak_bialgebra_structure(_FiniteStructure(w), range(w.dim), name=f"{w.name}: weak bialgebra")
    return rep


def check_antipode(w: WeakHopfAlgebra) -> AxiomReport:
    if w.antipode is None:
        raise MissingAntipodeError(f"{w.name} has no antipode")
    return check_antipode_structure(_FiniteStructure(w), range(w.dim), name=f"{w.name}: antipode")


def check_all(w: WeakHopfAlgebra) -> AxiomReport:
    from .algebra import validate_algebra

    alg = validate_algebra(w.algebra)
    rep = AxiomReport(f"{w.name}", list(alg.failures))
    rep.count("algebra", w.dim**3)
    rep = rep.merge(check_weak_bialgebra(w))
    if w.antipode is not None:
        rep = rep.merge(check_antipode(w))
    return rep


def check_morphism(f: Matrix, w1: WeakHopfAlgebra, w2: WeakHopfAlgebra) -> ValidationReport:
    """Unital algebra map, counital coalgebra map, intertwines antipodes."""
    rep = ValidationReport("morphism")
    if f.shape != (w2.dim, w1.dim):
        rep.failures.append(("shape", f.shape))
        return rep
    a1, a2 = w1.algebra, w2.algebra
    if f.apply(a1.unit) != a2.unit:
        rep.failures.append(("unit", "f(1) != 1"))
    imgs = f.columns()
    for i in range(w1.dim):
        for j in range(w1.dim):
            if f.apply(a1.mul_basis(i, j)) != a2.mul(imgs[i], imgs[j]):
                rep.failures.append(("multiplicative", (i, j)))
    if w2.comul @ f != kronecker(f, f) @ w1.comul:
        rep.failures.append(("comultiplicative", None))
    if w2.counit @ f != w1.counit:
        rep.failures.append(("counital", None))
    if w1.antipode is not None and w2.antipode is not None and f @ w1.antipode != w2.antipode @ f:
        rep.failures.append(("antipode", None))
    return rep


# ---------------------------------------------------------------------------
# groupoids and groups


@dataclass
class Groupoid:
    """Finite groupoid: arrows ``(source, target)`` and a partial composition.

    ``compose[(g, h)] = k`` means ``g o h = k`` and is defined exactly when
    ``source(g) == target(h)``.  The algebra product is ``g . h = g o h``
    or zero.
    """

    objects: int
    arrows: list  # (source, target)
    compose: dict
    labels: list | None = None

    def identity(self, x: int) -> int:
        for g, (s, t) in enumerate(self.arrows):
            if s == t == x and self.compose.get((g, g)) == g:
                return g
        raise NotAGroupoidError(f"object {x} has no identity arrow", (x,))

    def inverse(self, g: int) -> int:
        s, t = self.arrows[g]
        ids, idt = self.identity(s), self.identity(t)
        for h, (s2, t2) in enumerate(self.arrows):
            if s2 == t and t2 == s and self.compose.get((g, h)) == idt and self.compose.get((h, g)) == ids:
                return h
        raise NotAGroupoidError(f"arrow {g} has no inverse", (g,))

    def validate(self) -> None:
        n = len(self.arrows)
        for g, (s, t) in enumerate(self.arrows):
            if not (0 <= s < self.objects and 0 <= t < self.objects):
                raise NotAGroupoidError(f"arrow {g} has an endpoint out of range", (g,))
        for g in range(n):
            for h in range(n):
                defined = self.arrows[g][0] == self.arrows[h][1]
                k = self.compose.get((g, h))
                if defined and k is None:
                    raise NotAGroupoidError(f"composite of {g} and {h} is missing", (g, h))
                if not defined and k is not None:
                    raise NotAGroupoidError(f"composite of {g} and {h} should be undefined", (g, h))
                if k is not None and self.arrows[k] != (self.arrows[h][0], self.arrows[g][1]):
                    raise NotAGroupoidError(f"composite of {g} and {h} has wrong endpoints", (g, h))
        for g in range(n):
            for h in range(n):
                gh = self.compose.get((g, h))
                if gh is None:
                    continue
                for k in range(n):
                    hk = self.compose.get((h, k))
                    if hk is None:
                        continue
                    if self.compose.get((gh, k)) != self.compose.get((g, hk)):
                        raise NotAGroupoidError(f"composition is not associative at {(g, h, k)}", (g, h, k))
        for x in range(self.objects):
            e = self.identity(x)
            for g, (s, t) in enumerate(self.arrows):
                if s == x and self.compose.get((g, e)) != g:
                    raise NotAGroupoidError(f"identity at {x} fails on {g}", (g, e))
                if t == x and self.compose.get((e, g)) != g:
                    raise NotAGroupoidError(f"identity at {x} fails on {g}", (e, g))
        for g in range(n):
            self.inverse(g)


def group_groupoid(elements: Sequence, mult: Callable) -> Groupoid:
    """One-object groupoid from a finite group (identity must come first)."""
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    compose = {(i, j): index[mult(x, y)] for i, x in enumerate(elements) for j, y in enumerate(elements)}
    return Groupoid(1, [(0, 0)] * len(elements), compose, [str(x) for x in elements])


def pair_groupoid(n: int) -> Groupoid:
    """Arrow ``(i, j)`` (index ``i*n + j``) goes from ``j`` to ``i``; ``(i,j)(j,l) = (i,l)``."""
    arrows, compose, labels = [], {}, []
    for i in range(n):
        for j in range(n):
            arrows.append((j, i))
            labels.append(f"E{i + 1}{j + 1}")
    for i in range(n):
        for j in range(n):
            for l in range(n):
                compose[(i * n + j, j * n + l)] = i * n + l
    return Groupoid(n, arrows, compose, labels)


def disjoint_union(*gs: Groupoid) -> Groupoid:
    arrows, compose, labels = [], {}, []
    obj_off = arr_off = 0
    for k, g in enumerate(gs):
        arrows += [(s + obj_off, t + obj_off) for s, t in g.arrows]
        compose.update({(a + arr_off, b + arr_off): c + arr_off for (a, b), c in g.compose.items()})
        labels += [f"{l}" if k == 0 else f"{l}" + "'" * k for l in (g.labels or [f"g{i}" for i in range(len(g.arrows))])]
        obj_off += g.objects
        arr_off += len(g.arrows)
    return Groupoid(obj_off, arrows, compose, labels)


def build_groupoid_algebra(field: Field, g: Groupoid, name: str = "") -> WeakHopfAlgebra:
    """Groupoid algebra with ``Delta(g) = g (x) g``, ``eps(g) = 1``, ``S(g) = g^{-1}``."""
    g.validate()
    n = len(g.arrows)
    tuples = [(a, b, c, 1) for (a, b), c in g.compose.items()]
    unit = [0] * n
    for x in range(g.objects):
        unit[g.identity(x)] = 1
    alg = FiniteDimAlgebra(field, n, tuples, unit, g.labels, name=name)
    delta = [{(i, i): 1} for i in range(n)]
    S = [{g.inverse(i): 1} for i in range(n)]
    return WeakHopfAlgebra.from_terms(alg, delta, [1] * n, S, name=name)


def _perm_mul(p, q):
    # (p q)(x) = p(q(x))
    return tuple(p[x] for x in q)


GROUPS = {
    "S3": lambda: (sorted(permutations(range(3))), _perm_mul),
    "V4": lambda: ([(0, 0), (1, 0), (0, 1), (1, 1)], lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)),
    "D4": lambda: (_dihedral(4), _perm_mul),
}


def _dihedral(n: int) -> list:
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    elems = {tuple(range(n))}
    frontier = [tuple(range(n))]
    while frontier:
        nxt = []
        for x in frontier:
            for g in (rot, ref):
                y = _perm_mul(g, x)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(elems)


def group_by_name(name: str):
    """Elements (identity first) and multiplication for ``Cn``, ``S3``, ``V4``, ``D4``."""
    if name.startswith("C") and name[1:].isdigit():
        n = int(name[1:])
        if n < 1:
            raise AlgebraError("cyclic group order must be positive")
        return list(range(n)), lambda x, y: (x + y) % n
    if name in GROUPS:
        return GROUPS[name]()
    raise AlgebraError(f"unknown group {name!r}")


def group_algebra(field: Field, name: str) -> WeakHopfAlgebra:
    elems, mult = group_by_name(name)
    g = group_groupoid(elems, mult)
    if name.startswith("C"):
        g.labels = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, len(elems))]
    return build_groupoid_algebra(field, g, name=f"k{name}")


def pair_groupoid_algebra(field: Field, n: int) -> WeakHopfAlgebra:
    return build_groupoid_algebra(field, pair_groupoid(n), name=f"pair{n}")


# ---------------------------------------------------------------------------
# constructions


def direct_sum(w1: WeakHopfAlgebra, w2: WeakHopfAlgebra, name: str = "") -> WeakHopfAlgebra:
    name = name or f"({w1.name}+{w2.name})"
    alg = direct_sum_algebra(w1.algebra, w2.algebra, name=name)
    off = w1.dim
    delta = [dict(t) for t in w1._terms] + [{(p + off, q + off): c for (p, q), c in t.items()} for t in w2._terms]
    counit = w1.counit.rows[0] + w2.counit.rows[0]
    S = None
    if w1.antipode is not None and w2.antipode is not None:
        S = [_sparse(c) for c in w1.antipode.columns()] + [
            {j + off: c for j, c in _sparse(col).items()} for col in w2.antipode.columns()
        ]
    return WeakHopfAlgebra.from_terms(alg, delta, counit, S, name=name)


def tensor_product(w1: WeakHopfAlgebra, w2: WeakHopfAlgebra, name: str = "") -> WeakHopfAlgebra:
    name = name or f"({w1.name}*{w2.name})"
    f = w1.field
    alg = tensor_algebra(w1.algebra, w2.algebra, name=name)
    m = w2.dim
    delta = []
    for i in range(w1.dim):
        for j in range(m):
            t: dict = {}
            for (p, q), c in w1._terms[i].items():
                for (r, s), d in w2._terms[j].items():
                    key = (p * m + r, q * m + s)
                    t[key] = f.reduce(t.get(key, 0) + c * d)
            delta.append({k: v for k, v in t.items() if v})
    counit = [f.reduce(x * y) for x in w1.counit.rows[0] for y in w2.counit.rows[0]]
    S = None
    if w1.antipode is not None and w2.antipode is not None:
        S = kronecker(w1.antipode, w2.antipode)
    return WeakHopfAlgebra.from_terms(alg, delta, counit, S, name=name)


def matrix_weak_hopf(n: int, w: WeakHopfAlgebra) -> WeakHopfAlgebra:
    """``M_n(H) = M_n(k) (x) H`` with ``M_n(k)`` the pair groupoid algebra."""
    return tensor_product(pair_groupoid_algebra(w.field, n), w, name=f"M{n}({w.name})")


def dual(w: WeakHopfAlgebra, name: str = "") -> WeakHopfAlgebra:
    """The dual weak Hopf algebra on the dual basis ``f_0 .. f_{dim-1}``."""
    n = w.dim
    tuples = []
    for i, t in enumerate(w._terms):
        for (p, q), c in t.items():
            tuples.append((p, q, i, c))
    alg = FiniteDimAlgebra(w.field, n, tuples, list(w.counit.rows[0]), [f"f{i}" for i in range(n)], name=name or f"{w.name}*")
    delta = [dict() for _ in range(n)]
    for (i, j), d in w.algebra.constants.items():
        for k, c in d.items():
            delta[k][(i, j)] = c
    S = w.antipode.T if w.antipode is not None else None
    return WeakHopfAlgebra.from_terms(alg, delta, w.algebra.unit, S, name=name or f"{w.name}*")


def block_inclusion(w1: WeakHopfAlgebra, w2: WeakHopfAlgebra, first: bool = True) -> Matrix:
    """Inclusion of a summand into ``w1 (+) w2`` (a non-unital map)."""
    n1, n2 = w1.dim, w2.dim
    n = n1 + n2
    rows = [[0] * (n1 if first else n2) for _ in range(n)]
    off = 0 if first else n1
    for i in range(n1 if first else n2):
        rows[off + i][i] = 1
    return Matrix(w1.field, rows, n1 if first else n2)


def swap_summands(w: WeakHopfAlgebra, k: int) -> Matrix:
    """The automorphism of ``H (+) H`` exchanging the copies (``k = dim H``)."""
    rows = [[0] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        rows[i][i + k] = 1
        rows[i + k][i] = 1
    return Matrix(w.field, rows, 2 * k)


def mutate(w: WeakHopfAlgebra, part: str, index: tuple, delta_value=1) -> WeakHopfAlgebra:
    """Copy of ``w`` with one entry of Delta, epsilon or S shifted by ``delta_value``."""
    f = w.field

    def bump(m: Matrix) -> Matrix:
        rows = m.copy_rows()
        r, c = index
        rows[r][c] = f.reduce(rows[r][c] + delta_value)
        return Matrix.raw(f, rows, m.ncols)

    if part == "comul":
        return w.with_data(comul=bump(w.comul), name=f"{w.name}~D{index}")
    if part == "counit":
        return w.with_data(counit=bump(w.counit), name=f"{w.name}~e{index}")
    if part == "antipode":
        return w.with_data(antipode=bump(w.antipode), name=f"{w.name}~S{index}")
    raise ValueError(part)

"""Default test corpora: short exact sequences and small module families."""
from __future__ import annotations

import random
from typing import Sequence

from .algebra import FiniteDimAlgebra
from .linalg import Matrix, Subspace, block_diagonal, solve_vector
from .modules import (
    Module,
    ModuleMap,
    ShortExactSequence,
    are_isomorphic,
    direct_sum,
    hom_space,
    quotient,
    regular_module,
    spin,
    submodule,
)
from .wedderburn import (
    composition_multiplicities,
    indecomposable_projective,
    projective_cover,
    radical_of_module,
    simple_modules,
    socle_of_module,
)

DEFAULT_SEED = 20240601
RANDOM_SEQUENCES = 10


def _ses_from_sub(m: Module, sub: Subspace, label: str) -> ShortExactSequence:
    s, inc = submodule(m, sub)
    q, proj = quotient(m, sub)
    return ShortExactSequence(s, m, q, inc, proj, label)


def radical_sequences(a: FiniteDimAlgebra) -> list[ShortExactSequence]:
    """``0 -> J^{k+1}A -> J^kA -> J^kA/J^{k+1}A -> 0`` for the regular module."""
    out = []
    cur = regular_module(a)
    k = 0
    while cur.dim:
        rad = radical_of_module(cur)
        if rad.dim == 0:
            break
        out.append(_ses_from_sub(cur, rad, f"radical layer {k}"))
        cur, _ = submodule(cur, rad)
        k += 1
    return out


def socle_series(m: Module) -> list[Subspace]:
    """``0 = soc^0 < soc^1 < ... < soc^L = M``."""
    series = [Subspace.zero(m.field, m.dim)]
    while series[-1].dim < m.dim:
        q, proj = quotient(m, series[-1])
        lifted = [solve_vector(proj.matrix, v) for v in socle_of_module(q).basis]
        series.append(Subspace.span(m.field, m.dim, series[-1].basis + lifted))
    return series


def radical_series(m: Module) -> list[Subspace]:
    """``M = J^0M > J^1M > ... > 0`` as subspaces of ``M``."""
    series = [Subspace.full(m.field, m.dim)]
    while series[-1].dim:
        sub, inc = submodule(m, series[-1])
        series.append(Subspace.span(m.field, m.dim, [inc.matrix.apply(v) for v in radical_of_module(sub).basis]))
    return series


def socle_sequences(a: FiniteDimAlgebra) -> list[ShortExactSequence]:
    """``0 -> soc^k A -> soc^{k+1} A -> layer -> 0`` for the regular module."""
    A = regular_module(a)
    series = socle_series(A)
    out = []
    for k in range(1, len(series) - 1):
        big, _ = submodule(A, series[k + 1])
        small = Subspace.span(a.field, big.dim, [series[k + 1].coords(v) for v in series[k].basis])
        out.append(_ses_from_sub(big, small, f"socle layer {k}"))
    return out


def simple_extensions(a: FiniteDimAlgebra) -> list[ShortExactSequence]:
    """Non-split extensions ``0 -> S -> E -> T -> 0``, one per basis class of
    ``Ext^1(T, S)``, built as pushouts of ``0 -> Omega T -> P_T -> T -> 0``."""
    simples = simple_modules(a)
    out = []
    for t in simples:
        pc = projective_cover(t.module)
        P = pc.module
        K = pc.map.kernel()
        if K.dim == 0:
            continue
        omega, inc = submodule(P, K)
        for s in simples:
            homs = hom_space(omega, s.module)
            if not homs:
                continue
            restricted = [h @ inc.matrix for h in hom_space(P, s.module)]
            span = Subspace.span(a.field, s.dim * omega.dim, [h.flatten() for h in restricted])
            for phi in homs:
                if span.contains(phi.flatten()):
                    continue
                span = Subspace.span(a.field, s.dim * omega.dim, span.basis + [phi.flatten()])
                out.append(_pushout(s.module, P, omega, inc.matrix, phi, pc.map.matrix, t.module, f"ext S{t.index}->S{s.index}"))
    return out


def _pushout(S: Module, P: Module, omega: Module, inc: Matrix, phi: Matrix, pi: Matrix, T: Module, label: str) -> ShortExactSequence:
    f = S.field
    Ssum, _, _ = direct_sum(S, P)
    rel = []
    for x in range(omega.dim):
        e = [0] * omega.dim
        e[x] = 1
        rel.append(phi.apply(e) + [f.reduce(-c) for c in inc.apply(e)])
    E, proj = quotient(Ssum, Subspace.span(f, Ssum.dim, rel))
    first = proj.matrix @ Matrix.from_columns(f, [[1 if r == c else 0 for r in range(Ssum.dim)] for c in range(S.dim)], Ssum.dim)
    # E -> T: lift basis of E to S (+) P and apply pi on the P part
    lift = Matrix.from_columns(f, [solve_vector(proj.matrix, v) for v in Matrix.identity(f, E.dim).columns()], Ssum.dim)
    second = Matrix.zeros(f, T.dim, S.dim).hstack(pi) @ lift
    return ShortExactSequence(S, E, T, ModuleMap(S, E, first), ModuleMap(E, T, second), label)


def split_sequences(a: FiniteDimAlgebra) -> list[ShortExactSequence]:
    simples = simple_modules(a)
    out = []
    for i, s in enumerate(simples):
        for t in simples[i:]:
            m, incs, projs = direct_sum(s.module, t.module)
            out.append(ShortExactSequence(s.module, m, t.module, incs[0], projs[1], f"split S{s.index}+S{t.index}"))
    return out


def random_sequences(a: FiniteDimAlgebra, count: int = RANDOM_SEQUENCES, seed: int = DEFAULT_SEED) -> list[ShortExactSequence]:
    """``0 -> U -> M -> M/U -> 0`` with ``U`` spun from seeded random vectors."""
    rng = random.Random(seed)
    f = a.field
    pool = [regular_module(a)] + [indecomposable_projective(a, s.index) for s in simple_modules(a)]
    pool += [s.module for s in simple_modules(a)]
    out = []
    attempts = 0
    while len(out) < count and attempts < 20 * count:
        attempts += 1
        picks = [rng.choice(pool) for _ in range(rng.choice((1, 2)))]
        M = picks[0] if len(picks) == 1 else direct_sum(*picks)[0]
        if M.dim < 2:
            continue
        hi = f.characteristic if f.characteristic else 3
        vecs = [[f(rng.randrange(hi) - (hi // 2 if not f.characteristic else 0)) for _ in range(M.dim)] for _ in range(rng.choice((1, 1, 2)))]
        U = spin(M, vecs)
        if 0 < U.dim < M.dim:
            out.append(_ses_from_sub(M, U, f"random {len(out)}"))
    return out


def default_corpus(a: FiniteDimAlgebra, seed: int = DEFAULT_SEED, random_count: int = RANDOM_SEQUENCES) -> list[ShortExactSequence]:
    return radical_sequences(a) + socle_sequences(a) + simple_extensions(a) + split_sequences(a) + random_sequences(a, random_count, seed)


# ---------------------------------------------------------------------------
# small module families


def uniserial_quotients(a: FiniteDimAlgebra) -> list[Module]:
    """``P_i / J^k P_i`` for all ``i`` and ``k >= 1``, up to isomorphism."""
    out: list[Module] = []
    for s in simple_modules(a):
        P = indecomposable_projective(a, s.index)
        for k, sub in enumerate(radical_series(P)[1:], start=1):
            q, _ = quotient(P, sub, name=f"P{s.index}/J^{k}")
            if not any(are_isomorphic(q, o) for o in out if o.dim == q.dim):
                out.append(q)
    return out


def is_nakayama(a: FiniteDimAlgebra) -> bool:
    """Every indecomposable projective on both sides is uniserial."""
    for alg in (a, a.opposite()):
        for s in simple_modules(alg):
            P = indecomposable_projective(alg, s.index)
            cur = P
            while cur.dim:
                rad = radical_of_module(cur)
                top, _ = quotient(cur, rad)
                if sum(composition_multiplicities(top)) > 1:
                    return False
                cur, _ = submodule(cur, rad)
    return True


def modules_up_to_dim(a: FiniteDimAlgebra, max_dim: int) -> tuple[list[Module], bool]:
    """Direct sums of uniserial indecomposables with total dimension at most ``max_dim``.

    The flag says whether the list is complete up to isomorphism, which is
    the case for Nakayama algebras (all indecomposables are uniserial).
    """
    inds = [m for m in uniserial_quotients(a) if m.dim <= max_dim]
    out: list[Module] = []

    def rec(start: int, chosen: list, total: int):
        if chosen:
            mod = chosen[0] if len(chosen) == 1 else direct_sum(*chosen)[0]
            mod.name = "+".join(m.name for m in chosen)
            out.append(mod)
        for i in range(start, len(inds)):
            if total + inds[i].dim <= max_dim:
                rec(i, chosen + [inds[i]], total + inds[i].dim)

    rec(0, [], 0)
    return out, is_nakayama(a)


def block_module(mods: Sequence[Module]) -> Module:
    f = mods[0].field
    a = mods[0].algebra
    acts = [block_diagonal(f, [m.actions[i] for m in mods]) for i in range(a.dim)]
    return Module(a, acts, sum(m.dim for m in mods))

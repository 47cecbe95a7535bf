"""Acceptance suite: one test per criterion, each recording a pass/fail line.

Run on its own with ``pytest tests/test_acceptance.py -v`` (the lines are
echoed in the terminal summary) or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import sys
import time
from pathlib import Path

from weakhopf.cli import cmd_homology
from weakhopf.corpus import DEFAULT_SEED, default_corpus, modules_up_to_dim
from weakhopf.families import (
    build_ore_extension,
    check_family,
    replay_smash_derivations,
    winding_character,
)
from weakhopf.gallery import DSUM_EXAMPLES, QF_GALLERY, build_example, named_sigma
from weakhopf.homology import (
    REFUTED,
    VERIFIED,
    check_ext_adjunction,
    check_ext_duality,
    check_L1,
    check_R1,
    injective_dimension,
    verdict_by_blocks,
)
from weakhopf.modcat import (
    check_duality_exactness,
    check_unitors,
    compare_tensor_descriptions,
    delta_one_cut,
    left_dual,
    tensor_bar,
)
from weakhopf.modules import regular_module
from weakhopf.specfile import dump_spec
from weakhopf.weakhopf import check_antipode, check_weak_bialgebra, mutate
from weakhopf.wedderburn import block_decompose, simple_modules

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = []


def record(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[criterion {n}] {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def gallery():
    return [(name, build_example(name)) for name in QF_GALLERY]


# 1 ---------------------------------------------------------------------------


def criterion_qf_gallery():
    t0 = time.perf_counter()
    bad = []
    for name, w in gallery():
        assert w.dim <= 16, name
        for side in ("left", "right"):
            inj = injective_dimension(w.algebra, side)
            if inj.value.value != 0 or not inj.consistent:
                bad.append(f"{name} {side}={inj.value}")
    dt = time.perf_counter() - t0
    return not bad and dt < 10, f"{len(QF_GALLERY)} algebras, {dt:.2f}s" + (f", failures {bad}" if bad else "")


def test_criterion_1_quasi_frobenius_gallery():
    ok, detail = criterion_qf_gallery()
    record(1, "injective dimension 0 on both sides across the gallery", ok, detail)
    assert ok, detail


# 2 ---------------------------------------------------------------------------

MUTATIONS = 20


def mutation_set(seed: int = DEFAULT_SEED):
    rng = random.Random(seed)
    out = []
    names = QF_GALLERY
    while len(out) < MUTATIONS:
        name = rng.choice(names)
        w = build_example(name)
        part = ("comul", "counit", "antipode")[len(out) % 3]
        nrows = {"comul": w.dim * w.dim, "counit": 1, "antipode": w.dim}[part]
        idx = (rng.randrange(nrows), rng.randrange(w.dim))
        out.append((name, part, idx, mutate(w, part, idx, 1)))
    return out


def criterion_axioms():
    bad = []
    for name, w in gallery():
        for rep in (check_weak_bialgebra(w), check_antipode(w)):
            if rep.failures:
                bad.append(f"{name}: {rep.failed_axioms()}")
    missed = []
    for name, part, idx, m in mutation_set():
        caught = check_weak_bialgebra(m).failures or check_antipode(m).failures
        if not caught:
            missed.append(f"{name} {part}{idx}")
    ok = not bad and not missed
    return ok, f"{len(QF_GALLERY)} constructions clean, {MUTATIONS - len(missed)}/{MUTATIONS} mutations caught" + (
        f"; failing {bad} {missed}" if not ok else "")


def test_criterion_2_axiom_suite_and_mutation_fuzz():
    ok, detail = criterion_axioms()
    record(2, "axiom suite on the gallery and mutation fuzz", ok, detail)
    assert ok, detail


# 3 ---------------------------------------------------------------------------


def criterion_smash_replay():
    fam = build_example("smash-laurent:kk:swap:3")
    checks = check_family(fam)
    replay = replay_smash_derivations(fam)
    ok = checks.passed and replay.passed and fam.D == 3
    return ok, f"{sum(checks.checked.values())} axiom instances, {sum(replay.checked.values())} derivation chains"


def test_criterion_3_smash_replay():
    ok, detail = criterion_smash_replay()
    record(3, "smash product over k(+)k with swap, D=3", ok, detail)
    assert ok, detail


# 4 ---------------------------------------------------------------------------


def criterion_ore_replay():
    base = build_example("group:C2")
    sigma = named_sigma(base, "id")
    chi = winding_character(base, sigma)
    fam = build_ore_extension(base, sigma, 3)
    rep = check_family(fam)
    primitive = [k for k in ("t-coproduct", "t-counit", "t-antipode") if rep.checked.get(k)]
    ok = rep.passed and chi == base.counit.rows[0] and len(primitive) == 3
    return ok, f"chi = counit: {chi == base.counit.rows[0]}, {sum(rep.checked.values())} instances"


def test_criterion_4_ore_replay():
    ok, detail = criterion_ore_replay()
    record(4, "Ore extension of kC2 with sigma = id up to degree 3", ok, detail)
    assert ok, detail


# 5 ---------------------------------------------------------------------------


def criterion_monoidal():
    w = build_example("pair-groupoid:2")
    a = w.algebra
    S = simple_modules(a)[0].module
    tb = tensor_bar(w, S, S)
    cmp = compare_tensor_descriptions(w, S, S)
    rank_oracle = delta_one_cut(w, S, S).rank()
    dims_ok = tb.dim == 2 and rank_oracle == 2 and cmp.dim_balanced == 2 and cmp.passed
    mods, complete = modules_up_to_dim(a, 4)
    mods = mods + [regular_module(a)]
    unit_bad = [m.name for m in mods if not check_unitors(w, m).passed]
    zig_bad = [m.name for m in mods if not left_dual(w, m).passed]
    exact = check_duality_exactness(w, default_corpus(a))
    ok = dims_ok and complete and not unit_bad and not zig_bad and exact.passed
    detail = (f"dim S(x)S = {tb.dim}, rank Delta(1) = {rank_oracle}, balanced = {cmp.dim_balanced}; "
              f"{len(mods)} modules; {exact.checked} corpus sequences")
    return ok, detail


def test_criterion_5_monoidal_suite():
    ok, detail = criterion_monoidal()
    record(5, "monoidal structure on the pair groupoid algebra (n=2)", ok, detail)
    assert ok, detail


# 6 ---------------------------------------------------------------------------

TRIPLES = [(0, 0, 0), (0, 1, 0), (1, 0, 0), (0, 0, 1), (1, 1, 1), (0, 1, 1)]


def adjunction_corpus():
    out = []
    for name in ("group:C2:F2", "pair-groupoid:2"):
        w = build_example(name)
        mods = [simple_modules(w.algebra)[0].module, regular_module(w.algebra)]
        out.extend((name, w, mods[i], mods[j], mods[k]) for i, j, k in TRIPLES)
    return out


def criterion_adjunction():
    corpus = adjunction_corpus()
    bad = []
    for name, w, m, v, n in corpus:
        rep = check_ext_adjunction(w, m, v, n, upto=3)
        if rep.lhs != rep.rhs or not rep.passed:
            bad.append(f"{name}: {rep.lhs} vs {rep.rhs}")
    return len(corpus) == 12 and not bad, f"{len(corpus)} triples, i = 0..3" + (f"; {bad}" if bad else "")


def test_criterion_6_ext_adjunction():
    ok, detail = criterion_adjunction()
    record(6, "Ext adjunction over F2[C2] and the pair groupoid algebra", ok, detail)
    assert ok, detail


# 7 ---------------------------------------------------------------------------


def _is_sum_of_block_idempotents(bd, unit) -> bool:
    n = len(bd.idempotents)
    field = bd.blocks[0].field
    for mask in range(1, 1 << n):
        tot = [0] * len(unit)
        for i in range(n):
            if mask >> i & 1:
                tot = [field.reduce(x + y) for x, y in zip(tot, bd.idempotents[i])]
        if tot == list(unit):
            return True
    return False


def summand_units(w, parts):
    """Unit of each summand inside the direct sum, by block position."""
    out, off = [], 0
    for p in parts:
        sub = build_example(p, w.field)
        unit = [0] * w.dim
        unit[off:off + sub.dim] = sub.algebra.unit
        out.append(unit)
        off += sub.dim
    return out


def criterion_l1_r1_blocks():
    problems = []
    for name, w in gallery():
        for chk in (check_L1, check_R1):
            v = chk(w.algebra)
            if v.verdict != VERIFIED:
                problems.append(f"{name} {v.condition} {v.verdict}")
    a2 = build_example("path:A2")
    l1 = check_L1(a2)
    r1 = check_R1(a2)
    if l1.verdict != REFUTED or l1.witness is None or r1.verdict != REFUTED:
        problems.append("A2 not refuted with a witness")
    for name, parts in DSUM_EXAMPLES.items():
        w = build_example(name)
        for chk in (check_L1, check_R1):
            whole, blocks = verdict_by_blocks(w.algebra, chk)
            conj = VERIFIED if all(b.verdict == VERIFIED for b in blocks) else REFUTED
            if whole.verdict != conj:
                problems.append(f"{name}: whole {whole.verdict} vs blocks {conj}")
        bd = block_decompose(w.algebra)
        units = summand_units(w, parts)
        if not all(_is_sum_of_block_idempotents(bd, u) for u in units):
            problems.append(f"{name}: summands not recovered")
        if sum(bd.dims) != w.dim:
            problems.append(f"{name}: block dims {bd.dims}")
    ok = not problems
    return ok, f"A2 witness: {l1.witness.describe()}" if ok else "; ".join(problems)


def test_criterion_7_l1_r1_and_blocks():
    ok, detail = criterion_l1_r1_blocks()
    record(7, "(L1)/(R1) verdicts, A2 control and block conjunction", ok, detail)
    assert ok, detail


# 8 ---------------------------------------------------------------------------


def criterion_duality():
    bad, total = [], 0
    for name, w in gallery():
        a = w.algebra
        mods, _ = modules_up_to_dim(a, 4)
        total += len(mods)
        v = check_ext_duality(a, 0, modules=mods)
        if v.verdict != VERIFIED:
            bad.append(f"{name}: {v.witness}")
    return not bad, f"{len(QF_GALLERY)} algebras, {total} modules of dim <= 4" + (f"; {bad}" if bad else "")


def test_criterion_8_duality_functor():
    ok, detail = criterion_duality()
    record(8, "Hom(-,A) matches simples and squares to the identity", ok, detail)
    assert ok, detail


# 9 ---------------------------------------------------------------------------


def criterion_determinism(tmp: Path):
    outputs = []
    for name in ("pair-groupoid:2", "group:C2:F2", "dsum:pair-groupoid:2,group:C2@F2"):
        path = tmp / (name.replace(":", "_").replace(",", "_").replace("@", "_") + ".whs")
        path.write_text(dump_spec(build_example(name), provenance=f"example {name}"))
        runs = []
        for _ in range(2):
            rep = cmd_homology(str(path), l1=True, r1=True, qf=True, duality=True, adjunction=True, seed=DEFAULT_SEED)
            runs.append(rep.render("machine"))
        outputs.append(runs[0] == runs[1])
    return all(outputs), f"{len(outputs)} inputs, all flags"


def test_criterion_9_determinism(tmp_path):
    ok, detail = criterion_determinism(tmp_path)
    record(9, "byte-identical machine reports", ok, detail)
    assert ok, detail


def main() -> int:
    import tempfile

    with tempfile.TemporaryDirectory() as d:
        runs = [
            (1, "injective dimension 0 on both sides across the gallery", criterion_qf_gallery),
            (2, "axiom suite on the gallery and mutation fuzz", criterion_axioms),
            (3, "smash product over k(+)k with swap, D=3", criterion_smash_replay),
            (4, "Ore extension of kC2 with sigma = id up to degree 3", criterion_ore_replay),
            (5, "monoidal structure on the pair groupoid algebra (n=2)", criterion_monoidal),
            (6, "Ext adjunction over F2[C2] and the pair groupoid algebra", criterion_adjunction),
            (7, "(L1)/(R1) verdicts, A2 control and block conjunction", criterion_l1_r1_blocks),
            (8, "Hom(-,A) matches simples and squares to the identity", criterion_duality),
            (9, "byte-identical machine reports", lambda: criterion_determinism(Path(d))),
        ]
        results = []
        for n, title, fn in runs:
            ok, detail = fn()
            record(n, title, ok, detail)
            results.append(ok)
    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())

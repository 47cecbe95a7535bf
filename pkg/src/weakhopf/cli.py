"""Command line interface: ``weakhopf example|verify|homology|decompose``.

Exit codes: 0 all selected checks verified, 1 something refuted, 2 something
inconclusive at the degree bound, 3 input error.
"""
from __future__ import annotations

import argparse
import sys
import time

from .algebra import validate_algebra
from .corpus import DEFAULT_SEED, modules_up_to_dim
from .gallery import UnknownExampleError, build_example
from .homology import (
    DEFAULT_BOUND,
    ExtProfile,
    NotGorensteinError,
    NotWeakHopfError,
    Verdict,
    check_ext_adjunction,
    check_ext_duality,
    check_L1,
    check_R1,
    combine,
    ext_profile,
    quasi_frobenius_verdicts,
)
from .linalg import format_scalar
from .modules import regular_module
from .report import (
    FAIL,
    PASS,
    REFUTED,
    VERIFIED,
    CheckResult,
    Table,
    VerificationReport,
)
from .specfile import SpecDocument, SpecError, dump_spec, load_spec
from .weakhopf import check_all, check_antipode, check_weak_bialgebra
from .wedderburn import block_decompose, simple_modules

VERIFY_CHECKS = ("algebra", "bialgebra", "antipode", "counital", "family")


class InputError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _input_error(exc: Exception) -> InputError:
    return InputError(getattr(exc, "code", "input-error"), str(exc))


def _load(path: str) -> SpecDocument:
    try:
        return load_spec(path)
    except OSError as e:
        raise InputError("io-error", f"{path}: {e.strerror or e}") from None
    except SpecError as e:
        raise _input_error(e) from None


def _timed(fn):
    t = time.perf_counter()
    res = fn()
    return res, time.perf_counter() - t


def _witness(failures) -> str | None:
    if not failures:
        return None
    axiom, where = failures[0]
    return f"{axiom} {where}"


# ---------------------------------------------------------------------------
# example


def cmd_example(name: str) -> str:
    """The spec file text for a named example."""
    try:
        obj = build_example(name)
    except UnknownExampleError as e:
        raise InputError(e.code, str(e)) from None
    return dump_spec(obj, provenance=f"example {name}")


# ---------------------------------------------------------------------------
# verify


def cmd_verify(path: str, require_antipode: bool = False, checks=None) -> VerificationReport:
    report = VerificationReport("verify", path)
    try:
        doc = _load(path)
        if require_antipode:
            try:
                doc.require("antipode")
            except SpecError as e:
                raise _input_error(e) from None
    except InputError as e:
        report.error = (e.code, str(e))
        return report
    selected = tuple(checks) if checks else VERIFY_CHECKS
    a, w, fam = doc.algebra, doc.weak_hopf, doc.family
    report.input = doc.name or path
    report.config = [("field", str(a.field)), ("dim", str(a.dim))]

    if "algebra" in selected:
        rep, dt = _timed(lambda: validate_algebra(a))
        c = CheckResult("algebra", PASS if rep.passed else FAIL, witness=_witness(rep.failures), seconds=dt)
        report.checks.append(c.add("triples", a.dim**3))
    if w is not None and "bialgebra" in selected:
        rep, dt = _timed(lambda: check_weak_bialgebra(w))
        c = CheckResult("weak-bialgebra", PASS if rep.passed else FAIL, witness=_witness(rep.failures), seconds=dt)
        c.add("genuine-bialgebra", "yes" if rep.genuine_bialgebra else "no")
        report.checks.append(c)
    if w is not None and w.antipode is not None and "antipode" in selected:
        rep, dt = _timed(lambda: check_antipode(w))
        report.checks.append(CheckResult("antipode", PASS if rep.passed else FAIL, witness=_witness(rep.failures), seconds=dt))
    if w is not None and "counital" in selected:
        t = time.perf_counter()
        try:
            cd = w.counital_data()
            c = CheckResult("counital", PASS)
            c.add("dim-H_s", cd.H_s.dim).add("dim-H_t", cd.H_t.dim)
        except Exception as e:  # a broken coalgebra can make the counital maps degenerate
            c = CheckResult("counital", FAIL, witness=f"{type(e).__name__}: {e}")
        c.seconds = time.perf_counter() - t
        report.checks.append(c)
    if fam is not None and "family" in selected:
        from .families import SMASH, check_family, replay_smash_derivations

        rep, dt = _timed(lambda: check_family(fam))
        c = CheckResult("family", PASS if rep.passed else FAIL, witness=_witness(rep.failures), seconds=dt)
        c.add("kind", fam.kind).add("degree", fam.D)
        if fam.chi is not None:
            c.add("winding-character", " ".join(format_scalar(x) for x in fam.chi))
        report.checks.append(c)
        if fam.kind == SMASH:
            rep, dt = _timed(lambda: replay_smash_derivations(fam))
            report.checks.append(CheckResult("family-replay", PASS if rep.passed else FAIL, witness=_witness(rep.failures), seconds=dt))
    return report


# ---------------------------------------------------------------------------
# homology


def _profile_table(p: ExtProfile) -> Table:
    header = ["simple"] + [f"Ext{i}" for i in range(p.bound + 1)] + ["truncated"]
    rows = [[str(j)] + [str(x) for x in row] + ["1" if tr else "0"] for j, (row, tr) in enumerate(zip(p.rows, p.truncated))]
    return Table(f"profile {p.side}", header, rows)


def _from_verdict(v: Verdict, keys=()) -> CheckResult:
    c = CheckResult(v.condition, v.verdict)
    for k in keys:
        if k in v.evidence:
            val = v.evidence[k]
            c.add(k.replace("_", "-"), ("yes" if val else "no") if isinstance(val, bool) else val)
    if v.witness is not None:
        w = v.witness
        c.witness = w.describe() if hasattr(w, "describe") else str(w)
    return c


def cmd_homology(path: str, l1: bool = False, r1: bool = False, qf: bool = False, duality: bool = False,
                 adjunction: bool = False, bound: int = DEFAULT_BOUND, seed: int = DEFAULT_SEED) -> VerificationReport:
    report = VerificationReport("homology", path, [("bound", str(bound)), ("seed", str(seed))])
    if not any((l1, r1, qf, duality, adjunction)):
        l1 = r1 = qf = True
    try:
        doc = _load(path)
        if doc.family is not None:
            raise InputError("not-finite-dimensional", "homology needs a finite-dimensional algebra, not a family")
        report.input = doc.name or path
        a, w = doc.algebra, doc.weak_hopf
        if w is not None:
            rep = check_all(w)
            if not rep.passed:
                raise _input_error(NotWeakHopfError(f"refusing to certify: weak Hopf axioms fail ({', '.join(rep.failed_axioms())})"))
        try:
            _run_homology(report, a, w, l1, r1, qf, duality, adjunction, bound, seed)
        except Exception as e:
            if hasattr(e, "code"):
                raise _input_error(e) from None
            raise
    except InputError as e:
        report.error = (e.code, str(e))
        report.tables.clear()
        report.checks.clear()
    return report


def _run_homology(report, a, w, l1, r1, qf, duality, adjunction, bound, seed):
    report.tables.append(_profile_table(ext_profile(a, "left", bound)))
    report.tables.append(_profile_table(ext_profile(a, "right", bound)))
    if qf:
        (vq, vg), dt = _timed(lambda: quasi_frobenius_verdicts(a, bound))
        for v in (vq, vg):
            c = _from_verdict(v, ("injdim_left", "injdim_right", "consistent"))
            c.seconds = dt
            report.checks.append(c)
    for flag, checker in ((l1, check_L1), (r1, check_R1)):
        if not flag:
            continue
        t = time.perf_counter()
        v = checker(a, bound=bound, seed=seed)
        c = _from_verdict(v, ("corpus_size",))
        blocks = block_decompose(a).blocks
        if len(blocks) > 1:
            parts = [checker(B, bound=bound, seed=seed).verdict for B in blocks]
            c.add("block-verdicts", " ".join(parts))
            c.add("block-conjunction-agrees", "yes" if combine(parts) == v.verdict else "no")
        else:
            c.add("block-verdicts", v.verdict)
        c.seconds = time.perf_counter() - t
        report.checks.append(c)
    if duality:
        t = time.perf_counter()
        try:
            mods, _ = modules_up_to_dim(a, 4)
            v = check_ext_duality(a, 0, mods, bound=bound)
            c = _from_verdict(v)
            c.add("simple-map", " ".join(str(x) for x in v.evidence["simple_map"]))
            c.add("modules", len(mods))
        except NotGorensteinError as e:
            c = CheckResult("Ext-duality-d0", REFUTED, witness=str(e))
        c.seconds = time.perf_counter() - t
        report.checks.append(c)
    if adjunction:
        t = time.perf_counter()
        if w is None or w.antipode is None:
            raise InputError("missing-section", "the adjunction check needs a coalgebra and an antipode")
        simples = [s.module for s in simple_modules(a)]
        vs = simples + [regular_module(a)]
        upto = min(bound, 3)
        bad, count = None, 0
        for m in simples:
            for v_ in vs:
                for n in simples:
                    r = check_ext_adjunction(w, m, v_, n, upto)
                    count += 1
                    if not r.passed and bad is None:
                        bad = f"lhs {r.lhs} rhs {r.rhs} degree-zero-map {r.degree_zero_map}"
        c = CheckResult("Ext-adjunction", VERIFIED if bad is None else REFUTED, witness=bad)
        c.add("triples", count).add("degrees", f"0..{upto}")
        c.seconds = time.perf_counter() - t
        report.checks.append(c)


# ---------------------------------------------------------------------------
# decompose


def cmd_decompose(path: str) -> VerificationReport:
    report = VerificationReport("decompose", path)
    try:
        doc = _load(path)
        report.input = doc.name or path
        a = doc.algebra
        try:
            bd, dt = _timed(lambda: block_decompose(a))
        except Exception as e:
            if hasattr(e, "code"):
                raise _input_error(e) from None
            raise
    except InputError as e:
        report.error = (e.code, str(e))
        return report
    rows = [[str(k), str(B.dim), " ".join(format_scalar(x) for x in e)] for k, (e, B) in enumerate(zip(bd.idempotents, bd.blocks))]
    report.tables.append(Table("blocks", ["block", "dim", "idempotent"], rows))
    c = CheckResult("decomposition", PASS, seconds=dt)
    c.add("blocks", len(bd.blocks)).add("dims", " ".join(str(d) for d in bd.dims))
    report.checks.append(c)
    return report


# ---------------------------------------------------------------------------
# entry point


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the input-error code, not argparse's 2 (which means inconclusive here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"error [usage]: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weakhopf", description="Exact computations with finite-dimensional weak Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ex = sub.add_parser("example", help="print the spec file of a named example")
    ex.add_argument("name")
    ex.add_argument("-o", "--output", help="write to a file instead of standard output")

    def common(sp):
        sp.add_argument("file")
        sp.add_argument("--format", choices=("human", "machine"), default="human")

    ve = sub.add_parser("verify", help="check the algebra, weak bialgebra and antipode axioms")
    common(ve)
    ve.add_argument("--require-antipode", action="store_true")
    ve.add_argument("--checks", help=f"comma separated subset of {','.join(VERIFY_CHECKS)}")

    ho = sub.add_parser("homology", help="homological verdicts (default: --qf --l1 --r1)")
    common(ho)
    for flag in ("l1", "r1", "qf", "duality", "adjunction"):
        ho.add_argument(f"--{flag}", action="store_true")
    ho.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    ho.add_argument("--seed", type=int, default=DEFAULT_SEED)

    de = sub.add_parser("decompose", help="central primitive idempotents and block dimensions")
    common(de)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "example":
        try:
            text = cmd_example(args.name)
        except InputError as e:
            print(f"error [{e.code}]: {e}", file=sys.stderr)
            return 3
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    if args.command == "verify":
        checks = None
        if args.checks:
            checks = [c.strip() for c in args.checks.split(",") if c.strip()]
            unknown = sorted(set(checks) - set(VERIFY_CHECKS))
            if unknown:
                print(f"error [usage]: unknown checks {', '.join(unknown)}", file=sys.stderr)
                return 3
        report = cmd_verify(args.file, args.require_antipode, checks)
    elif args.command == "homology":
        if args.bound < 0:
            print("error [usage]: --bound must be non-negative", file=sys.stderr)
            return 3
        report = cmd_homology(args.file, args.l1, args.r1, args.qf, args.duality, args.adjunction, args.bound, args.seed)
    else:
        report = cmd_decompose(args.file)
    sys.stdout.write(report.render(args.format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""End-to-end runs of the command line interface."""
import subprocess
import sys

import pytest

from weakhopf.cli import cmd_decompose, cmd_homology, cmd_verify, main
from weakhopf.gallery import build_example
from weakhopf.linalg import QQ, Matrix
from weakhopf.specfile import dump_spec
from weakhopf.weakhopf import WeakHopfAlgebra


def write_example(tmp_path, name, obj=None):
    path = tmp_path / (name.replace(":", "_").replace(",", "_").replace("@", "_") + ".whs")
    path.write_text(dump_spec(obj if obj is not None else build_example(name), provenance=name))
    return str(path)


def machine(report) -> str:
    return report.render("machine")


def test_example_to_stdout(capsys):
    assert main(["example", "pair-groupoid:2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("weakhopf-spec 1") and "dim 4" in out


def test_example_to_file(tmp_path):
    target = tmp_path / "c2.whs"
    assert main(["example", "group:C2:F2", "-o", str(target)]) == 0
    assert "dim 2" in target.read_text()


def test_unknown_example_exit_code(capsys):
    assert main(["example", "group:Q8"]) == 3
    assert "unknown-example" in capsys.readouterr().err


@pytest.mark.parametrize("name", ["group:S3", "kk", "union:pair-groupoid:2,group:C2@F2", "smash-laurent:kk:swap:2"])
def test_verify_gallery(tmp_path, name):
    rep = cmd_verify(write_example(tmp_path, name))
    assert rep.exit_code == 0, machine(rep)


def test_verify_perturbed_counit(tmp_path):
    w = build_example("pair-groupoid:2")
    bad = w.with_data(counit=Matrix(QQ, [[1, 0, 1, 1]]))
    rep = cmd_verify(write_example(tmp_path, "bad", bad))
    assert rep.exit_code == 1
    failed = [c for c in rep.checks if c.failed]
    assert failed and failed[0].witness


def test_require_antipode_on_algebra_only(tmp_path):
    path = write_example(tmp_path, "path:A2")
    assert main(["verify", path, "--require-antipode", "--format", "machine"]) == 3
    rep = cmd_verify(path, require_antipode=True)
    assert rep.error[0] == "missing-section"
    assert "[error]\ncode missing-section" in machine(rep)


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "broken.whs"
    p.write_text("weakhopf-spec 1\ndim x\n")
    assert main(["verify", str(p), "--format", "machine"]) == 3
    assert "code parse-error" in capsys.readouterr().out


def test_missing_file_exit_code(tmp_path):
    assert main(["decompose", str(tmp_path / "nope.whs")]) == 3


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["homology"])
    assert exc.value.code == 3


@pytest.mark.parametrize("name", ["group:D4:F2", "pair-groupoid:3", "dsum:group:C2,group:S3@F3"])
def test_homology_qf_gallery(tmp_path, name):
    rep = cmd_homology(write_example(tmp_path, name), qf=True)
    assert rep.exit_code == 0
    text = machine(rep)
    assert "evidence injdim-left 0" in text and "evidence injdim-right 0" in text


def test_homology_a2_refuted_with_ext1_witness(tmp_path):
    rep = cmd_homology(write_example(tmp_path, "path:A2"), qf=True)
    assert rep.exit_code == 1
    qf = next(c for c in rep.checks if c.name == "quasi-Frobenius")
    assert qf.status == "refuted" and "Ext^1" in qf.witness


def test_homology_a2_l1_witness(tmp_path):
    rep = cmd_homology(write_example(tmp_path, "path:A2"), l1=True)
    l1 = next(c for c in rep.checks if c.name == "L1")
    assert l1.status == "refuted" and l1.witness


@pytest.mark.parametrize("name", ["dsum:pair-groupoid:2,group:C2@F2", "kk"])
def test_homology_dsum_block_conjunction(tmp_path, name):
    rep = cmd_homology(write_example(tmp_path, name), l1=True, r1=True)
    assert rep.exit_code == 0
    for c in rep.checks:
        assert ("block-conjunction-agrees", "yes") in c.evidence


def test_homology_refuses_broken_coalgebra(tmp_path):
    a2 = build_example("path:A2")
    fake = WeakHopfAlgebra.from_terms(a2, [{(i, i): 1} for i in range(3)], [1, 1, 1], Matrix.identity(QQ, 3))
    rep = cmd_homology(write_example(tmp_path, "fake", fake), qf=True)
    assert rep.exit_code == 3 and rep.error[0] == "not-weak-hopf"


def test_homology_rejects_family(tmp_path):
    rep = cmd_homology(write_example(tmp_path, "smash-laurent:kk:swap:2"))
    assert rep.exit_code == 3


def test_homology_duality_on_a2_is_refuted(tmp_path):
    rep = cmd_homology(write_example(tmp_path, "path:A2"), duality=True)
    assert rep.exit_code == 1


def test_homology_adjunction(tmp_path):
    rep = cmd_homology(write_example(tmp_path, "group:C2:F2"), adjunction=True)
    assert rep.exit_code == 0, machine(rep)


def test_machine_reports_are_deterministic(tmp_path):
    path = write_example(tmp_path, "union:pair-groupoid:2,group:C2@F2")
    runs = [machine(cmd_homology(path, l1=True, r1=True, qf=True, duality=True, seed=11)) for _ in range(2)]
    assert runs[0] == runs[1]
    assert "seconds" not in runs[0]


@pytest.mark.parametrize("name,blocks", [
    ("pair-groupoid:3", 1),
    ("union:pair-groupoid:2,group:C2,pair-groupoid:3@F2", 3),
    ("dsum:pair-groupoid:2,group:C2@F2", 2),
    ("dsum:(dsum:pair-groupoid:2,group:C2),pair-groupoid:3@F2", 3),
])
def test_decompose(tmp_path, name, blocks):
    rep = cmd_decompose(write_example(tmp_path, name))
    assert rep.exit_code == 0
    c = rep.checks[0]
    assert ("blocks", str(blocks)) in c.evidence


def test_console_script_module_entry(tmp_path):
    path = write_example(tmp_path, "group:C2:F2")
    proc = subprocess.run([sys.executable, "-m", "weakhopf", "decompose", path, "--format", "machine"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("weakhopf-report 1")


def test_human_format_has_summary(tmp_path, capsys):
    path = write_example(tmp_path, "group:C2")
    assert main(["verify", path]) == 0
    assert "result: verified (exit 0)" in capsys.readouterr().out

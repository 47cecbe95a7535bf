import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakhopf.algebra import upper_triangular_algebra
from weakhopf.gallery import QF_GALLERY, build_example
from weakhopf.linalg import QQ
from weakhopf.specfile import (
    MissingSectionError,
    SpecParseError,
    dump_spec,
    load_spec,
    parse_spec,
    same_data,
)


@pytest.mark.parametrize("name", QF_GALLERY + ["path:A2", "smash-laurent:kk:swap:3", "ore-skew:group:C2:id:2"])
def test_round_trip(name):
    obj = build_example(name)
    text = dump_spec(obj, provenance=f"example {name}")
    doc = parse_spec(text)
    assert same_data(obj, doc.subject)
    assert dump_spec(doc.subject, provenance=f"example {name}") == text


def test_pair_groupoid_spec_is_four_dimensional():
    doc = parse_spec(dump_spec(build_example("pair-groupoid:2")))
    assert doc.algebra.dim == 4 and doc.weak_hopf.antipode is not None


def test_c2_over_f2_spec():
    text = dump_spec(build_example("group:C2:F2"))
    assert "field Fp 2" in text
    assert parse_spec(text).algebra.dim == 2


def test_algebra_only_file(tmp_path):
    p = tmp_path / "a2.whs"
    p.write_text(dump_spec(upper_triangular_algebra(QQ)))
    doc = load_spec(str(p))
    assert doc.weak_hopf is None
    with pytest.raises(MissingSectionError) as exc:
        doc.require("antipode")
    assert exc.value.code == "missing-section"


def test_parse_error_reports_line():
    text = dump_spec(build_example("group:C2")).replace("dim 2", "dim two")
    with pytest.raises(SpecParseError) as exc:
        parse_spec(text)
    assert exc.value.line is not None


def test_wrong_header():
    with pytest.raises(SpecParseError):
        parse_spec("not a spec\n")


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(QF_GALLERY), st.text(alphabet="abcdefgh xyz-", max_size=20))
def test_provenance_does_not_change_data(name, prov):
    obj = build_example(name)
    assert same_data(parse_spec(dump_spec(obj, provenance=prov)).subject, obj)

from weakhopf.algebra import upper_triangular_algebra
from weakhopf.corpus import (
    default_corpus,
    is_nakayama,
    modules_up_to_dim,
    radical_sequences,
    random_sequences,
    simple_extensions,
    socle_sequences,
    split_sequences,
    uniserial_quotients,
)
from weakhopf.gallery import build_example
from weakhopf.linalg import QQ


def test_every_corpus_sequence_is_exact():
    for name in ("group:C2:F2", "pair-groupoid:2", "group:S3:F3"):
        a = build_example(name).algebra
        for seq in default_corpus(a):
            assert seq.is_exact(), (name, seq.label)


def test_a2_corpus_contains_the_nonsplit_extension():
    a = upper_triangular_algebra(QQ)
    exts = simple_extensions(a)
    assert len(exts) == 1
    assert exts[0].middle.dim == 2


def test_semisimple_has_no_extensions():
    assert simple_extensions(build_example("pair-groupoid:2").algebra) == []


def test_radical_and_socle_layers_f2c2():
    a = build_example("group:C2:F2").algebra
    rad = radical_sequences(a)
    soc = socle_sequences(a)
    assert rad and soc
    assert all(s.middle.dim == 2 for s in rad[:1])


def test_split_sequences_labels():
    a = build_example("kk").algebra
    labels = [s.label for s in split_sequences(a)]
    assert labels == ["split S0+S0", "split S0+S1", "split S1+S1"]


def test_random_sequences_are_seeded():
    a = build_example("group:C4:F2").algebra
    one = random_sequences(a, 4, seed=7)
    two = random_sequences(a, 4, seed=7)
    assert [s.f.matrix for s in one] == [s.f.matrix for s in two]
    assert all(s.is_exact() for s in one)


def test_uniserial_modules_of_f2c4():
    a = build_example("group:C4:F2").algebra
    assert is_nakayama(a)
    assert sorted(m.dim for m in uniserial_quotients(a)) == [1, 2, 3, 4]


def test_modules_up_to_dim_complete_for_nakayama():
    a = build_example("group:C2:F2").algebra
    mods, complete = modules_up_to_dim(a, 4)
    assert complete
    # sums of S and P with total dim <= 4: S, P, 2S, S+P, 3S, 2P, 2S+P, 4S
    assert sorted(m.dim for m in mods) == [1, 2, 2, 3, 3, 4, 4, 4]


def test_non_nakayama_is_flagged_incomplete():
    a = build_example("group:V4:F2").algebra
    assert not is_nakayama(a)
    assert modules_up_to_dim(a, 4)[1] is False

"""The shipped corpus: files in sync with builders, frozen tables."""

import pytest

from skeincat.corpus import (
    CORPUS_NAMES,
    MOVE_PAIRS,
    build_diagram,
    corpus_path,
    iter_corpus,
    load_diagram,
    write_corpus,
)
from skeincat.diagram import parse_diagram, serialize_diagram
from skeincat.homology import HomologyGroup, equal_tables, homology
from skeincat.states import state_complex, verify_d2

Z1 = HomologyGroup(1, ())

# the figure-eight is amphichiral, so this table equals its own mirror
# dual: ranks flip (i,j) -> (-i,-j) and torsion rides two i-steps up
FIG8_TABLE = {
    (-4, -10, (), ()): HomologyGroup(1, ()),
    (-4, -6, (), ()): HomologyGroup(0, (2,)),
    (-2, -2, (), ()): Z1,
    (0, -2, (), ()): Z1,
    (0, 2, (), ()): Z1,
    (2, 2, (), ()): Z1,
    (2, 6, (), ()): HomologyGroup(0, (2,)),
    (4, 10, (), ()): Z1,
}


def test_every_file_matches_its_builder():
    for name in CORPUS_NAMES:
        assert load_diagram(name) == build_diagram(name), name


def test_serialization_round_trip():
    for name in CORPUS_NAMES:
        d = build_diagram(name)
        assert parse_diagram(serialize_diagram(d)) == d, name


def test_write_corpus_is_reproducible(tmp_path):
    for path in write_corpus(tmp_path):
        name = path.stem
        assert path.read_text() == corpus_path(name).read_text(), name


def test_trefoil_file_shape():
    d = load_diagram("trefoil")
    assert d.n_crossings == 3
    assert len(d.segments) == 6


def test_unknown_name_rejected():
    with pytest.raises(ValueError):
        build_diagram("borromean")
    with pytest.raises(ValueError):
        corpus_path("borromean")


def test_d_squared_zero_everywhere():
    for name, d in iter_corpus():
        assert verify_d2(state_complex(d)) == [], name


def test_move_pairs_have_equal_tables():
    for a, b in MOVE_PAIRS:
        assert equal_tables(homology(load_diagram(a)),
                            homology(load_diagram(b))), (a, b)


def test_kinked_unknot_tables():
    neg = homology(load_diagram("unknot_kink_neg"))
    assert set(neg.entries) == {(1, 5, (), ()), (1, 1, (), ())}
    pos = homology(load_diagram("unknot_kink_pos"))
    assert set(pos.entries) == {(-1, -1, (), ()), (-1, -5, (), ())}


def test_core_has_two_strata_entries():
    t = homology(load_diagram("core"))
    assert t.entries == {
        (0, 0, (("core", 1),), ()): Z1,
        (0, 0, (("core", -1),), ()): Z1,
    }


def test_figure_eight_frozen_table():
    t = homology(load_diagram("fig8"))
    assert t.entries == FIG8_TABLE

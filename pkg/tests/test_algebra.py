"""Gluing operations: side-by-side tensor, shared-point gluing, closure, cut."""

from itertools import product

import pytest

from skeincat.algebra import close, cut, reduced_tensor, tensor, twist
from skeincat.bracket import BasisElement, bracket
from skeincat.diagram import Segment, TangleDiagram, resolve
from skeincat.errors import (
    MissingSharedPoint,
    NoMarkedPoints,
    NonRealizable,
    SizeMismatch,
    SurfaceMismatch,
    UnknownSegment,
)
from skeincat.homology import HomologyGroup, homology
from skeincat.states import state_complex, verify_d2
from skeincat.surfaces import DISK, MarkedSurface, arc_class, rotate_arc_class
from skeincat.words import generate_from_word

from helpers import (
    DISK0,
    braid_closure_disk,
    one_crossing_tangle,
    sigma1_closure_annulus,
)

UNKNOT = TangleDiagram(DISK0, free_loops=((),))
EMPTY = TangleDiagram(DISK0)


def single_arc():
    return TangleDiagram(
        MarkedSurface(DISK, 2), (), (Segment("u", (("b", 0), ("b", 1))),))


def test_tensor_structure():
    big = tensor(one_crossing_tangle(+1), one_crossing_tangle(-1))
    assert big.surface == MarkedSurface(DISK, 8)
    assert big.crossings == ("l.c", "r.c")
    assert len(big.segments) == 8
    # right factor's boundary points sit after the left factor's
    assert big.segment("r.e0").ends[0] == ("b", 4)


def test_tensor_crossing_order_left_first():
    big = tensor(braid_closure_disk((-1, -1)), one_crossing_tangle(+1))
    assert big.crossings == ("l.c0", "l.c1", "r.c")
    assert tensor(UNKNOT, UNKNOT).free_loops == ((), ())


def test_tensor_requires_disks():
    with pytest.raises(SurfaceMismatch):
        tensor(sigma1_closure_annulus(), one_crossing_tangle(+1))
    with pytest.raises(SurfaceMismatch):
        tensor(one_crossing_tangle(+1), sigma1_closure_annulus())


def test_tensor_smoothings_are_disjoint_unions():
    t1, t2 = one_crossing_tangle(+1), one_crossing_tangle(-1)
    big = tensor(t1, t2)
    n1 = t1.surface.marked_points
    for m1, m2 in product((1, -1), repeat=2):
        s1 = resolve(t1, (m1,))
        s2 = resolve(t2, (m2,))
        s = resolve(big, (m1, m2))
        shifted = tuple((a + n1, b + n1) for a, b in s2.arcs)
        assert s.arcs == arc_class(s1.arcs + shifted)
        assert len(s.loops) == len(s1.loops) + len(s2.loops)


def test_tensor_associative_up_to_relabeling():
    a, b, c = one_crossing_tangle(+1), single_arc(), one_crossing_tangle(-1)
    left = homology(tensor(tensor(a, b), c))
    right = homology(tensor(a, tensor(b, c)))
    assert left.entries == right.entries


def test_tensor_with_empty_factor_keeps_table():
    d = one_crossing_tangle(+1)
    assert homology(tensor(d, EMPTY)).entries == homology(d).entries
    assert homology(tensor(EMPTY, d)).entries == homology(d).entries


def test_tensor_of_unknots_table():
    t = homology(tensor(UNKNOT, UNKNOT))
    assert t.entries == {
        (0, 4, (), ()): HomologyGroup(1),
        (0, 0, (), ()): HomologyGroup(2),
        (0, -4, (), ()): HomologyGroup(1),
    }


def test_tensor_bracket_multiplies():
    pairs = [
        (one_crossing_tangle(+1), single_arc()),
        (UNKNOT, one_crossing_tangle(-1)),
    ]
    for t1, t2 in pairs:
        v1, v2 = bracket(t1), bracket(t2)
        n1 = t1.surface.marked_points
        expect = {}
        for b1, c1 in v1.coeffs.items():
            for b2, c2 in v2.coeffs.items():
                arcs = arc_class(
                    b1.arcs + tuple((a + n1, b + n1) for a, b in b2.arcs))
                key = BasisElement(tuple(sorted(b1.loops + b2.loops)), arcs)
                expect[key] = c1 * c2
        assert bracket(tensor(t1, t2)).coeffs == expect


def test_twist_rotates_boundary():
    d = one_crossing_tangle(+1)
    t = twist(d)
    assert t.segment("e0").ends[0] == ("b", 1)
    assert t.segment("e3").ends[1] == ("b", 0)
    back = d
    for _ in range(4):
        back = twist(back)
    assert back == d


def test_twist_rotates_table_strata():
    d = one_crossing_tangle(+1)
    n = d.surface.marked_points
    base = homology(d)
    expect = {(i, j, s, rotate_arc_class(b, n)): g
              for (i, j, s, b), g in base.entries.items()}
    assert homology(twist(d)).entries == expect


def test_twist_needs_points():
    with pytest.raises(NoMarkedPoints):
        twist(UNKNOT)
    with pytest.raises(NoMarkedPoints):
        twist(sigma1_closure_annulus())


def test_reduced_tensor_of_arcs_is_an_arc():
    t = reduced_tensor(single_arc(), single_arc())
    assert t.surface == MarkedSurface(DISK, 2)
    assert len(t.segments) == 1
    assert t.segments[0].ends in ((("b", 0), ("b", 1)), (("b", 1), ("b", 0)))
    assert homology(t).entries == homology(single_arc()).entries


def test_reduced_tensor_defaults():
    t1 = cut(braid_closure_disk((-1, -1, -1)), "l0")
    arc = single_arc()
    assert reduced_tensor(t1, arc) == reduced_tensor(t1, arc, 1, 0)
    # an identity strand glued onto either endpoint changes nothing
    a = homology(reduced_tensor(t1, arc, 1, 0)).entries
    b = homology(reduced_tensor(t1, arc, 0, 1)).entries
    assert a == b == homology(t1).entries


def test_reduced_tensor_needs_shared_points():
    closed = braid_closure_disk((-1, -1))
    arc = single_arc()
    with pytest.raises(MissingSharedPoint):
        reduced_tensor(closed, arc)
    with pytest.raises(MissingSharedPoint):
        reduced_tensor(arc, closed)
    with pytest.raises(MissingSharedPoint):
        reduced_tensor(arc, arc, 5, 0)
    with pytest.raises(MissingSharedPoint):
        reduced_tensor(arc, arc, 0, -1)
    with pytest.raises(SurfaceMismatch):
        reduced_tensor(sigma1_closure_annulus(), arc)


def test_reduced_tensor_of_cut_trefoils():
    t1 = cut(braid_closure_disk((-1, -1, -1)), "l0")
    g = reduced_tensor(t1, t1)
    assert g.surface.marked_points == 2
    assert g.n_crossings == 6
    assert not verify_d2(state_complex(g))


def test_two_gluings_same_table():
    t = cut(braid_closure_disk((-1, -1, -1)), "l0")
    h = cut(braid_closure_disk((-1, -1)), "l0")
    a = homology(close(reduced_tensor(t, h, 1, 0), ((0, 1),))).entries
    b = homology(close(reduced_tensor(t, h, 0, 1), ((0, 1),))).entries
    assert a == b


def test_close_one_crossing_makes_kinked_unknot():
    plus = homology(close(one_crossing_tangle(+1), ((0, 3), (1, 2))))
    assert plus.entries == homology(UNKNOT).shifted(-1, -3).entries
    minus = homology(close(one_crossing_tangle(-1), ((0, 3), (1, 2))))
    assert minus.entries == homology(UNKNOT).shifted(1, 3).entries


def test_close_matches_trace_closure():
    open_braid = generate_from_word("x1-,x1-,x1-", 2)
    closed = close(open_braid, ((0, 3), (1, 2)))
    fixture = braid_closure_disk((-1, -1, -1))
    assert homology(closed).entries == homology(fixture).entries


def test_close_produces_free_loops():
    c = close(single_arc(), ((0, 1),))
    assert c.segments == ()
    assert c.free_loops == ((),)
    assert homology(c).entries == homology(UNKNOT).entries
    assert close(EMPTY, ()) == EMPTY


def test_close_validates_matching():
    d = one_crossing_tangle(+1)
    with pytest.raises(SizeMismatch):
        close(d, ((0, 1),))
    with pytest.raises(SizeMismatch):
        close(d, ((0, 1), (2, 2)))
    with pytest.raises(SizeMismatch):
        close(d, ((0, 1), (2, 5)))
    with pytest.raises(NonRealizable):
        close(d, ((0, 2), (1, 3)))
    with pytest.raises(SurfaceMismatch):
        close(sigma1_closure_annulus(), ())


def test_cut_then_close_restores_table():
    for d in (UNKNOT, braid_closure_disk((-1, -1)),
              braid_closure_disk((-1, -1, -1))):
        base = homology(d).entries
        where = d.segments[0].id if d.segments else 0
        t = cut(d, where)
        assert t.surface.marked_points == 2
        assert homology(close(t, ((0, 1),))).entries == base


def test_cut_segments_coincide_on_hopf():
    d = braid_closure_disk((-1, -1))
    tables = [homology(cut(d, s.id)).entries for s in d.segments]
    assert all(t == tables[0] for t in tables[1:])


def test_cut_free_loop():
    t = cut(UNKNOT, 0)
    assert t.surface.marked_points == 2
    assert t.free_loops == ()
    assert len(t.segments) == 1
    assert homology(close(t, ((0, 1),))).entries == homology(UNKNOT).entries


def test_cut_validates_target():
    d = braid_closure_disk((-1, -1))
    with pytest.raises(UnknownSegment):
        cut(d, "nope")
    with pytest.raises(UnknownSegment):
        cut(d, 0)
    with pytest.raises(SizeMismatch):
        cut(one_crossing_tangle(+1), "e0")
    with pytest.raises(SurfaceMismatch):
        cut(sigma1_closure_annulus(), "l")

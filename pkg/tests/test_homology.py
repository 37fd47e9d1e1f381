"""Homology tables over Z, Q, and prime fields, checked on hand-solved
diagrams and by structural identities (universal coefficients, mirror
duality, Euler characteristics)."""

import json
import random

import pytest

from helpers import (
    DISK0,
    braid_closure_disk,
    kinked_unknot,
    one_crossing_tangle,
    sigma1_closure_annulus,
    torus_cross,
)
from skeincat.diagram import TangleDiagram, mirror, parse_diagram
from skeincat.errors import NotAComplex
from skeincat.homology import (
    HomologyGroup,
    HomologyTable,
    euler_by_stratum,
    euler_characteristic,
    homology,
    parse_coeff,
    table_from_obj,
)
from skeincat.laurent import LaurentPoly
from skeincat.states import state_complex
from skeincat.surfaces import ANNULUS, CORE, MarkedSurface, psi_from_json, psi_neg
from skeincat.words import generate_from_word, random_annulus_braid, random_disk_word

Z = HomologyGroup(1)

UNKNOT = TangleDiagram(DISK0, free_loops=((),))


def table_of(entries, coeff="z"):
    return HomologyTable(coeff, dict(entries))


def test_parse_coeff():
    assert parse_coeff("z") == ("z", None)
    assert parse_coeff("q") == ("q", None)
    assert parse_coeff("p:2") == ("p", 2)
    assert parse_coeff("p:13") == ("p", 13)
    for bad in ("p:4", "p:1", "p:x", "f2", "", "p:-3"):
        with pytest.raises(ValueError):
            parse_coeff(bad)


def test_group_text():
    assert HomologyGroup(0).text() == "0"
    assert HomologyGroup(1).text() == "Z"
    assert HomologyGroup(2, (2, 4)).text() == "Z^2 + Z/2 + Z/4"
    assert HomologyGroup(3).text("q") == "Q^3"
    assert HomologyGroup(1, ()).text("p", 7) == "F7"
    assert not HomologyGroup(0)
    assert HomologyGroup(0, (2,))


def test_unknot_table():
    t = homology(UNKNOT)
    assert t.entries == {
        (0, 2, (), ()): Z,
        (0, -2, (), ()): Z,
    }
    assert t.group(0, 2) == Z
    assert not t.group(1, 1)
    assert t.total_rank() == 2


def test_kinked_unknot_is_shifted_unknot():
    t = homology(kinked_unknot())
    assert t.entries == {
        (1, 5, (), ()): Z,
        (1, 1, (), ()): Z,
    }
    assert t.entries == homology(UNKNOT).shifted(1, 3).entries


def test_one_crossing_tangle_splits_by_arcs():
    # no circles anywhere, so every state is alone in its (j, b) stratum
    t = homology(one_crossing_tangle(-1))
    assert t.entries == {
        (1, 1, (), ((0, 3), (1, 2))): Z,
        (-1, -1, (), ((0, 1), (2, 3))): Z,
    }
    tm = homology(mirror(one_crossing_tangle(-1)))
    assert tm.entries == {
        (1, 1, (), ((0, 1), (2, 3))): Z,
        (-1, -1, (), ((0, 3), (1, 2))): Z,
    }


def test_hopf_closure_table():
    t = homology(braid_closure_disk((-1, -1)))
    assert t.entries == {
        (2, 6, (), ()): Z,
        (2, 2, (), ()): Z,
        (-2, -2, (), ()): Z,
        (-2, -6, (), ()): Z,
    }


TREFOIL_TABLE = {
    (3, 7, (), ()): Z,
    (3, 3, (), ()): Z,
    (-1, -1, (), ()): Z,
    (-3, -9, (), ()): Z,
    (-3, -5, (), ()): HomologyGroup(0, (2,)),
}


def test_trefoil_table():
    t = homology(braid_closure_disk((-1, -1, -1)))
    assert t.entries == TREFOIL_TABLE


def test_trefoil_mirror_table():
    t = homology(mirror(braid_closure_disk((-1, -1, -1))))
    assert t.entries == {
        (-3, -7, (), ()): Z,
        (-3, -3, (), ()): Z,
        (1, 1, (), ()): Z,
        (3, 9, (), ()): Z,
        (1, 5, (), ()): HomologyGroup(0, (2,)),
    }


def test_trefoil_mod_2():
    # UCT: the Z/2 at (-3,-5) contributes to F2 dimensions at i=-3 and i=-1
    t = homology(braid_closure_disk((-1, -1, -1)), "p:2")
    assert t.group(-3, -5) == HomologyGroup(1)
    assert t.group(-1, -5) == HomologyGroup(1)
    assert t.total_rank() == 6
    t3 = homology(braid_closure_disk((-1, -1, -1)), "p:3")
    assert t3.total_rank() == 4


def test_core_circle_strata():
    d = TangleDiagram(MarkedSurface(ANNULUS), free_loops=(1,))
    t = homology(d)
    assert t.entries == {
        (0, 0, ((CORE, 1),), ()): Z,
        (0, 0, ((CORE, -1),), ()): Z,
    }


def test_sigma1_annulus_strata():
    # + smoothing gives two core circles whose opposite labelings share the
    # trivial psi stratum with the turnback smoothing, where a rank dies
    t = homology(sigma1_closure_annulus())
    assert t.entries == {
        (1, 1, ((CORE, 2),), ()): Z,
        (1, 1, ((CORE, -2),), ()): Z,
        (1, 1, (), ()): Z,
        (-1, -3, (), ()): Z,
    }


def test_torus_cross_table():
    # each smoothing is a single essential curve, of slope (1,-1) or (1,1),
    # so the four states sit in four distinct strata and nothing cancels
    t = homology(torus_cross())
    assert t.entries == {
        (1, 1, (((1, -1), 1),), ()): Z,
        (1, 1, (((1, -1), -1),), ()): Z,
        (-1, -1, (((1, 1), 1),), ()): Z,
        (-1, -1, (((1, 1), -1),), ()): Z,
    }


def _mirror_key(key):
    i, j, s, b = key
    return (-i, -j, psi_neg(s), b)


def test_mirror_duality_over_q():
    rng = random.Random(11)
    words = [random_disk_word(rng) for _ in range(8)]
    diagrams = [generate_from_word(w, n, close=c) for w, n, c in words]
    diagrams += [braid_closure_disk((-1, 1, -1)), sigma1_closure_annulus(), torus_cross()]
    for d in diagrams:
        t = homology(d, "q")
        tm = homology(mirror(d), "q")
        assert {_mirror_key(k): g for k, g in t.entries.items()} == tm.entries


def torsion_count(g, p):
    return sum(1 for f in g.torsion if f % p == 0)


def test_universal_coefficients_random():
    rng = random.Random(23)
    diagrams = [braid_closure_disk((-1, -1, -1))]
    for _ in range(8):
        w, n, c = random_disk_word(rng, max_crossings=5)
        diagrams.append(generate_from_word(w, n, close=c))
    for _ in range(3):
        w, n = random_annulus_braid(rng, max_crossings=4)
        diagrams.append(generate_from_word(w, n, ANNULUS, close="trace"))
    for d in diagrams:
        tz = homology(d)
        for p in (2, 3):
            tp = homology(d, f"p:{p}")
            keys = set(tz.entries) | set(tp.entries)
            for (i, j, s, b) in keys:
                want = (tz.group(i, j, s, b).free_rank
                        + torsion_count(tz.group(i, j, s, b), p)
                        + torsion_count(tz.group(i - 2, j, s, b), p))
                assert tp.group(i, j, s, b).free_rank == want, (i, j, s, b, p)


def test_q_ranks_match_z_free_ranks():
    rng = random.Random(5)
    for _ in range(6):
        w, n, c = random_disk_word(rng, max_crossings=5)
        d = generate_from_word(w, n, close=c)
        tz = homology(d)
        tq = homology(d, "q")
        assert tq.entries == {
            k: HomologyGroup(g.free_rank)
            for k, g in tz.entries.items() if g.free_rank
        }


def test_not_a_complex():
    cx = state_complex(braid_closure_disk((-1, -1)))
    # the j=2 stratum runs over i = 2, 0, -2, so this entry composes
    cx.strata[(2, (), ())].boundary[2][0][0] += 1
    with pytest.raises(NotAComplex):
        homology(cx)


def test_euler_unknot_and_kink():
    circle = LaurentPoly({2: -1, -2: -1})
    assert euler_characteristic(UNKNOT) == circle
    # one extra kink multiplies by -A^3
    assert euler_characteristic(kinked_unknot()) == circle * LaurentPoly({3: -1})


def test_euler_trefoil_frozen():
    d = braid_closure_disk((-1, -1, -1))
    want = LaurentPoly({7: 1, 3: 1, -1: 1, -9: -1})
    assert euler_characteristic(d) == want
    assert euler_characteristic(homology(d, "q")) == want


def test_euler_chain_level_matches_homology_level():
    rng = random.Random(7)
    diagrams = [sigma1_closure_annulus(), torus_cross(), UNKNOT]
    for _ in range(6):
        w, n, c = random_disk_word(rng, max_crossings=5)
        diagrams.append(generate_from_word(w, n, close=c))
    for d in diagrams:
        cx = state_complex(d)
        assert euler_by_stratum(cx) == euler_by_stratum(homology(cx, "q"))


def test_table_json_round_trip():
    for d in (braid_closure_disk((-1, -1, -1)), sigma1_closure_annulus(),
              torus_cross(), one_crossing_tangle(+1)):
        t = homology(d)
        obj = json.loads(t.to_json())
        assert table_from_obj(obj, t.coeff) == t
        # canonical order: by stratum (j, s, b), then by i
        keys = [(e["i"], e["j"], psi_from_json(e["s"]),
                 tuple(tuple(p) for p in e["b"])) for e in obj["entries"]]
        assert keys == t.keys_sorted()
        assert set(obj) == {"entries"}
        assert set(obj["entries"][0]) == {"i", "j", "s", "b", "free_rank", "torsion"}


def test_table_shift_and_pretty():
    t = homology(braid_closure_disk((-1, -1, -1)))
    shifted = t.shifted(2, 6)
    assert shifted.group(5, 13) == Z
    assert shifted.total_rank() == t.total_rank()
    text = t.pretty()
    assert "Z/2" in text
    assert "-9" in text
    assert homology(braid_closure_disk((-1, -1, -1)), "q").pretty().count("Q") == 4

"""Hand-built diagrams and independent oracles shared across test modules."""

from skeincat.surfaces import ANNULUS, DISK, TORUS, MarkedSurface
from skeincat.diagram import Segment, TangleDiagram

DISK0 = MarkedSurface(DISK)
ANN = MarkedSurface(ANNULUS)
TOR = MarkedSurface(TORUS)


def kinked_unknot():
    # one crossing, through strand on ports 0,1 and small loop on 2,3
    return TangleDiagram(
        DISK0,
        ("c",),
        (
            Segment("a", (("c", "c", 1), ("c", "c", 0))),
            Segment("o", (("c", "c", 2), ("c", "c", 3))),
        ),
    )


def one_crossing_tangle(sign=+1):
    # 2-in 2-out tangle on the 4-marked disk; bottom points 0,1 and top
    # points 2 (right), 3 (left)
    ports = (0, 1, 2, 3) if sign > 0 else (1, 2, 3, 0)
    sw, se, ne, nw = ports
    return TangleDiagram(
        MarkedSurface(DISK, 4),
        ("c",),
        (
            Segment("e0", (("b", 0), ("c", "c", sw))),
            Segment("e1", (("b", 1), ("c", "c", se))),
            Segment("e2", (("c", "c", ne), ("b", 2))),
            Segment("e3", (("c", "c", nw), ("b", 3))),
        ),
    )


def braid_closure_disk(signs):
    # trace closure of a 2-strand braid word, drawn on the bare disk
    n = len(signs)
    cids = [f"c{k}" for k in range(n)]
    segs = []
    for k in range(n):
        nxt = (k + 1) % n
        here, there = cids[k], cids[nxt]
        # for sign +1 ports are (sw, se, ne, nw) = (0, 1, 2, 3)
        nw_h = 3 if signs[k] > 0 else 0
        ne_h = 2 if signs[k] > 0 else 3
        sw_t = 0 if signs[nxt] > 0 else 1
        se_t = 1 if signs[nxt] > 0 else 2
        segs.append(Segment(f"l{k}", (("c", here, nw_h), ("c", there, sw_t))))
        segs.append(Segment(f"r{k}", (("c", here, ne_h), ("c", there, se_t))))
    return TangleDiagram(DISK0, tuple(cids), tuple(segs))


def sigma1_closure_annulus():
    # trace closure of one negative 2-braid generator in the annulus;
    # both closure strands cross the radial cut once
    return TangleDiagram(
        ANN,
        ("c",),
        (
            Segment("l", (("c", "c", 0), ("c", "c", 1)), 1),
            Segment("r", (("c", "c", 3), ("c", "c", 2)), 1),
        ),
    )


def torus_cross():
    return TangleDiagram(
        TOR,
        ("v",),
        (
            Segment("s1", (("c", "v", 0), ("c", "v", 2)), (1, 0)),
            Segment("s2", (("c", "v", 1), ("c", "v", 3)), (0, 1)),
        ),
    )


def oracle_resolution(d, markers):
    """Partition the smoothed diagram into curves without walking it.

    Returns (set of boundary pairs, multiset of circle segment-id
    frozensets) for comparison against :func:`skeincat.diagram.resolve`.
    """
    mk = dict(zip(d.crossings, markers))
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    def slot(end):
        return end if end[0] == "b" else ("c", end[1], end[2])

    for s in d.segments:
        union(slot(s.ends[0]), slot(s.ends[1]))
    for cid in d.crossings:
        pairs = ((0, 1), (2, 3)) if mk[cid] > 0 else ((1, 2), (3, 0))
        for a, b in pairs:
            union(("c", cid, a), ("c", cid, b))

    groups = {}
    for s in d.segments:
        groups.setdefault(find(slot(s.ends[0])), set()).add(s.id)
    points = {}
    for p in range(d.surface.marked_points):
        for s in d.segments:
            for e in s.ends:
                if e == ("b", p):
                    points.setdefault(find(e), []).append(p)

    arcs = set()
    circles = []
    for root, segs in groups.items():
        pts = points.get(root, [])
        if pts:
            assert len(pts) == 2
            arcs.add((min(pts), max(pts)))
        else:
            circles.append(frozenset(segs))
    return arcs, sorted(circles, key=sorted)


def loop_profile(d, markers):
    """Loop count and class multiset of one smoothing, for comparisons."""
    from skeincat.diagram import resolve

    sm = resolve(d, markers)
    return sm.arcs, sorted((repr(l.cls) for l in sm.loops))


def all_marker_profiles(d):
    from itertools import product

    out = []
    for mk in product((1, -1), repeat=d.n_crossings):
        out.append(loop_profile(d, mk))
    return out

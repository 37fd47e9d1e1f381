"""Gluing operations on disk tangles.

Tangles in a disk compose in two ways: side by side, concatenating
boundary points (:func:`tensor`), and along a shared marked point that
the gluing erases (:func:`reduced_tensor`).  Closing all boundary
points off with a non-crossing matching (:func:`close`) and cutting a
closed strand back open (:func:`cut`) translate between links and
tangles; :func:`twist` rotates the boundary labelling by one step.

All operations are purely combinatorial rewrites of the diagram data.
The tensor keeps the left factor's crossings first in the crossing
order, so the sign rule of the differential on the glued diagram is
the usual sign rule for a tensor product of complexes.
"""

from __future__ import annotations

from .diagram import Segment, TangleDiagram, _fresh_sid
from .errors import (
    MissingSharedPoint,
    NoMarkedPoints,
    NonRealizable,
    SizeMismatch,
    SurfaceMismatch,
    UnknownSegment,
)
from .surfaces import (
    DISK,
    MarkedSurface,
    arc_class,
    cut_add,
    cut_neg,
    cut_zero,
    is_noncrossing,
)


def _need_disk(d, what):
    if d.surface.kind != DISK:
        raise SurfaceMismatch(f"{what} needs a disk tangle, got the {d.surface.kind}")


def _part(d, prefix, shift):
    # one tensor factor with ids prefixed and boundary points shifted
    ren = {c: prefix + c for c in d.crossings}

    def move(e):
        if e[0] == "c":
            return ("c", ren[e[1]], e[2])
        return ("b", e[1] + shift)

    segs = tuple(
        Segment(prefix + s.id, (move(s.ends[0]), move(s.ends[1])), s.cut)
        for s in d.segments
    )
    return tuple(ren[c] for c in d.crossings), segs


def tensor(t1, t2):
    """Side-by-side union of two disk tangles.

    The boundary points of ``t1`` keep their labels, those of ``t2``
    are shifted past them, so the result has the points of ``t1``
    followed by the points of ``t2`` in counterclockwise order.  Ids
    are prefixed with ``l.`` and ``r.`` to keep the factors apart, and
    the crossing order lists ``t1`` first.  Smoothings of the result
    are exactly the disjoint unions of smoothings of the factors.
    """
    _need_disk(t1, "tensor")
    _need_disk(t2, "tensor")
    n1 = t1.surface.marked_points
    c1, s1 = _part(t1, "l.", 0)
    c2, s2 = _part(t2, "r.", n1)
    return TangleDiagram(
        MarkedSurface(DISK, n1 + t2.surface.marked_points),
        c1 + c2,
        s1 + s2,
        t1.free_loops + t2.free_loops,
    )


def twist(d):
    """Rotate the boundary labelling: point i becomes point i+1.

    Applying it ``marked_points`` times is the identity.  Raises
    :class:`NoMarkedPoints` when there is nothing to rotate.
    """
    n = d.surface.marked_points
    if not n:
        raise NoMarkedPoints("twist rotates boundary points, found none")

    def bump(e):
        if e[0] == "b":
            return ("b", (e[1] + 1) % n)
        return e

    segments = tuple(
        Segment(s.id, (bump(s.ends[0]), bump(s.ends[1])), s.cut) for s in d.segments
    )
    return TangleDiagram(d.surface, d.crossings, segments, d.free_loops)


def reduced_tensor(t1, t2, p1=None, p2=None):
    """Glue two disk tangles along one identified marked point.

    Point ``p1`` of ``t1`` and point ``p2`` of ``t2`` are matched up
    and then erased: the two strands ending there fuse into a single
    strand running from one tangle into the other.  Defaults are the
    last point of ``t1`` and the first point of ``t2``.  Both factors
    are rotated with :func:`twist` until the designated points sit
    next to each other, so different choices of ``p1``, ``p2`` give
    diagrams that differ only by boundary rotation.
    """
    _need_disk(t1, "reduced tensor")
    _need_disk(t2, "reduced tensor")
    n1 = t1.surface.marked_points
    n2 = t2.surface.marked_points
    if not n1:
        raise MissingSharedPoint("left factor has no marked points to glue at")
    if not n2:
        raise MissingSharedPoint("right factor has no marked points to glue at")
    if p1 is None:
        p1 = n1 - 1
    if p2 is None:
        p2 = 0
    if not isinstance(p1, int) or isinstance(p1, bool) or not 0 <= p1 < n1:
        raise MissingSharedPoint(f"point {p1!r} is not on the left boundary")
    if not isinstance(p2, int) or isinstance(p2, bool) or not 0 <= p2 < n2:
        raise MissingSharedPoint(f"point {p2!r} is not on the right boundary")
    for _ in range((n1 - 1 - p1) % n1):
        t1 = twist(t1)
    for _ in range((-p2) % n2):
        t2 = twist(t2)
    big = tensor(t1, t2)
    # the identified pair now sits at adjacent points n1-1 and n1
    return _erase_adjacent_pair(big, n1 - 1, n1)


def _erase_adjacent_pair(d, pa, pb):
    kind = d.surface.kind
    sa = sb = None
    for s in d.segments:
        for eidx in (0, 1):
            if s.ends[eidx] == ("b", pa):
                sa = (s, eidx)
            elif s.ends[eidx] == ("b", pb):
                sb = (s, eidx)
    (seg_a, ea), (seg_b, eb) = sa, sb
    # read seg_a into pa, then seg_b away from pb
    wa = seg_a.cut if ea == 1 else cut_neg(kind, seg_a.cut)
    wb = seg_b.cut if eb == 0 else cut_neg(kind, seg_b.cut)
    fused = Segment(
        seg_a.id,
        (seg_a.ends[1 - ea], seg_b.ends[1 - eb]),
        cut_add(kind, wa, wb),
    )

    def renum(e):
        if e[0] == "b" and e[1] > pb:
            return ("b", e[1] - 2)
        return e

    segments = []
    for s in d.segments:
        if s.id == seg_b.id:
            continue
        if s.id == seg_a.id:
            s = fused
        segments.append(Segment(s.id, (renum(s.ends[0]), renum(s.ends[1])), s.cut))
    return TangleDiagram(
        MarkedSurface(DISK, d.surface.marked_points - 2),
        d.crossings,
        tuple(segments),
        d.free_loops,
    )


def close(d, arcs):
    """Cap off every boundary point of a disk tangle along a matching.

    ``arcs`` must be a non-crossing perfect matching of the marked
    points; each arc joins the two strands ending at its endpoints,
    fusing them into one.  Strand chains that close up entirely become
    free loops.  The crossing order is unchanged, so the closed
    diagram's homology is computed with the same sign conventions.
    """
    _need_disk(d, "closure")
    n = d.surface.marked_points
    try:
        arcs = arc_class(arcs)
    except ValueError as e:
        raise SizeMismatch(str(e)) from None
    pts = sorted(q for a in arcs for q in a)
    if pts != list(range(n)):
        raise SizeMismatch(
            f"closure arcs touch points {pts}, need each of 0..{n - 1} once")
    if arcs and not is_noncrossing(arcs):
        raise NonRealizable(f"closure arcs {arcs} cross")

    kind = d.surface.kind
    segs = {s.id: s for s in d.segments}
    bnd = {}
    for s in d.segments:
        for k, e in enumerate(s.ends):
            if e[0] == "b":
                bnd[e[1]] = (s.id, k)
    jump = {}
    for a, b in arcs:
        jump[a] = b
        jump[b] = a

    def chase(sid, enter):
        # hop across closure arcs until an end away from the boundary
        total = cut_zero(kind)
        chain = []
        first = (sid, enter)
        while True:
            seg = segs[sid]
            chain.append(sid)
            w = seg.cut if enter == 0 else cut_neg(kind, seg.cut)
            total = cut_add(kind, total, w)
            out = seg.ends[1 - enter]
            if out[0] != "b":
                return out, total, chain
            sid, enter = bnd[jump[out[1]]]
            if (sid, enter) == first:
                return None, total, chain

    touched = [s for s in d.segments if s.ends[0][0] == "b" or s.ends[1][0] == "b"]
    touched_ids = {s.id for s in touched}
    consumed = set()
    fused = {}
    for s in touched:
        for eidx in (0, 1):
            if s.ends[eidx][0] == "b" or s.id in consumed:
                continue
            out, total, chain = chase(s.id, eidx)
            rep = min(chain)
            fused[rep] = Segment(rep, (s.ends[eidx], out), total)
            consumed.update(chain)

    new_free = []
    for s in touched:
        if s.id in consumed:
            continue
        _, total, chain = chase(s.id, 0)
        consumed.update(chain)
        new_free.append(total)

    segments = []
    for s in d.segments:
        if s.id not in touched_ids:
            segments.append(s)
        elif s.id in fused:
            segments.append(fused[s.id])
    return TangleDiagram(
        MarkedSurface(DISK, 0),
        d.crossings,
        tuple(segments),
        d.free_loops + tuple(new_free),
    )


def cut(d, where):
    """Cut one closed strand open, leaving a tangle with two endpoints.

    ``where`` names a segment id or a free-loop index of a closed disk
    diagram.  The named strand is severed at an interior point and the
    two new ends are attached to fresh boundary points 0 and 1.
    Closing the result back up with the single arc (0, 1) rebuilds a
    diagram with the same homology table.
    """
    _need_disk(d, "cut")
    if d.surface.marked_points:
        raise SizeMismatch("cut expects a closed diagram with no boundary points")
    kind = d.surface.kind
    surface = MarkedSurface(DISK, 2)
    if isinstance(where, int) and not isinstance(where, bool):
        if not 0 <= where < len(d.free_loops):
            raise UnknownSegment(f"free loop {where}")
        w = d.free_loops[where]
        segments = d.segments + (
            Segment(_fresh_sid(d, "e1"), (("b", 0), ("b", 1)), w),
        )
        loops = d.free_loops[:where] + d.free_loops[where + 1:]
    else:
        old = d.segment(where)
        rest = tuple(s for s in d.segments if s.id != where)
        segments = rest + (
            Segment(_fresh_sid(d, where + "a"), (old.ends[0], ("b", 0)), old.cut),
            Segment(_fresh_sid(d, where + "b"), (("b", 1), old.ends[1]),
                    cut_zero(kind)),
        )
        loops = d.free_loops
    return TangleDiagram(surface, d.crossings, segments, loops)

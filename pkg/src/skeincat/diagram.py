"""Tangle diagrams on marked surfaces and their smoothings.

A diagram is a combinatorial 4-valent graph.  Crossings are named
vertices with ports 0..3 in counterclockwise order; the strand through
ports 0 and 2 passes over the strand through ports 1 and 3.  Segments
are edges joining crossing ports and marked boundary points, and every
segment carries the cut word of the path it traces across the surface,
so homotopy classes of smoothed curves can be read off without any
geometry.  Closed curves that meet no crossing are stored separately as
free loops, each reduced to its cut word.

Replacing a crossing by a planar splice removes the vertex: marker +1
joins ports 0-1 and 2-3, marker -1 joins ports 1-2 and 3-0.  Splicing
every crossing turns the diagram into a crossingless curve system, its
smoothing, which :func:`resolve` returns as a boundary arc matching
plus a list of classified loops.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    NonRealizable,
    SchemaError,
    UnknownCrossing,
    UnknownSegment,
    ValidationError,
)
from .surfaces import (
    ANNULUS,
    DISK,
    MarkedSurface,
    arc_class,
    classify_loop,
    cut_add,
    cut_neg,
    cut_ok,
    cut_zero,
    is_noncrossing,
)

_PLUS_PAIRS = ((0, 1), (2, 3))
_MINUS_PAIRS = ((1, 2), (3, 0))


def splice_pairs(sign):
    """The two port pairs joined when a crossing is spliced with ``sign``."""
    return _PLUS_PAIRS if sign > 0 else _MINUS_PAIRS


def _splice_partner(sign):
    out = {}
    for a, b in splice_pairs(sign):
        out[a] = b
        out[b] = a
    return out


@dataclass(frozen=True)
class Segment:
    """An edge of the diagram.

    ``ends`` holds two attachment points, each ``("c", crossing_id,
    port)`` or ``("b", boundary_point)``.  ``cut`` is the cut word of
    the edge read from ``ends[0]`` to ``ends[1]``.
    """

    id: str
    ends: tuple
    cut: object = None


def _norm_cut(kind, w):
    if w is None:
        return cut_zero(kind)
    if isinstance(w, list):
        w = tuple(w)
    return w


def _norm_end(e):
    if isinstance(e, list):
        e = tuple(e)
    return e


def _end_ok(e):
    if not isinstance(e, tuple):
        return False
    if len(e) == 3 and e[0] == "c":
        return isinstance(e[1], str) and e[2] in (0, 1, 2, 3)
    if len(e) == 2 and e[0] == "b":
        return isinstance(e[1], int) and not isinstance(e[1], bool) and e[1] >= 0
    return False


@dataclass(frozen=True)
class TangleDiagram:
    """A framed unoriented tangle diagram on a marked surface.

    The order of ``crossings`` fixes the sign convention of the
    differential downstream; it carries no geometric meaning.
    ``free_loops`` lists the cut words of crossingless closed curves.
    """

    surface: MarkedSurface
    crossings: tuple = ()
    segments: tuple = ()
    free_loops: tuple = ()

    def __post_init__(self):
        kind = self.surface.kind
        object.__setattr__(self, "crossings", tuple(self.crossings))
        segs = []
        for s in self.segments:
            ends = tuple(_norm_end(e) for e in s.ends)
            segs.append(Segment(s.id, ends, _norm_cut(kind, s.cut)))
        object.__setattr__(self, "segments", tuple(segs))
        object.__setattr__(
            self, "free_loops", tuple(_norm_cut(kind, w) for w in self.free_loops)
        )
        self._validate()

    def _validate(self):
        kind = self.surface.kind
        seen = set()
        for i, cid in enumerate(self.crossings):
            if not isinstance(cid, str) or not cid:
                raise ValidationError("crossing id must be a non-empty string",
                                      path=f"crossings[{i}].id")
            if cid in seen:
                raise ValidationError(f"duplicate crossing id {cid!r}",
                                      path=f"crossings[{i}].id")
            seen.add(cid)
        cids = seen

        ports = {}
        points = {}
        sids = set()
        for k, s in enumerate(self.segments):
            path = f"segments[{k}]"
            if not isinstance(s.id, str) or not s.id:
                raise ValidationError("segment id must be a non-empty string",
                                      path=path + ".id")
            if s.id in sids:
                raise ValidationError(f"duplicate segment id {s.id!r}", path=path + ".id")
            sids.add(s.id)
            if len(s.ends) != 2:
                raise ValidationError("a segment has exactly two ends", path=path + ".ends")
            if not cut_ok(kind, s.cut):
                raise ValidationError(f"malformed cut word {s.cut!r} for the {kind}",
                                      path=path + ".cut")
            for e_i, e in enumerate(s.ends):
                epath = f"{path}.ends[{e_i}]"
                if not _end_ok(e):
                    raise ValidationError(f"malformed end {e!r}", path=epath)
                if e[0] == "c":
                    if e[1] not in cids:
                        raise ValidationError(f"unknown crossing id {e[1]!r}", path=epath)
                    key = (e[1], e[2])
                    if key in ports:
                        raise ValidationError(
                            f"port {e[2]} of crossing {e[1]!r} attached twice", path=epath)
                    ports[key] = (s.id, e_i)
                else:
                    if e[1] >= self.surface.marked_points:
                        raise ValidationError(
                            f"boundary point {e[1]} out of range", path=epath)
                    if e[1] in points:
                        raise ValidationError(
                            f"boundary point {e[1]} attached twice", path=epath)
                    points[e[1]] = (s.id, e_i)

        for cid in self.crossings:
            for p in range(4):
                if (cid, p) not in ports:
                    raise ValidationError(
                        f"port {p} of crossing {cid!r} is unattached", path="segments")
        for p in range(self.surface.marked_points):
            if p not in points:
                raise ValidationError(f"boundary point {p} is unattached", path="segments")

        for i, w in enumerate(self.free_loops):
            if not cut_ok(kind, w):
                raise ValidationError(f"malformed cut word {w!r} for the {kind}",
                                      path=f"free_loops[{i}]")
            classify_loop(self.surface, w)

    @property
    def n_crossings(self):
        return len(self.crossings)

    def crossing_index(self, cid):
        try:
            return self.crossings.index(cid)
        except ValueError:
            raise UnknownCrossing(cid) from None

    def segment(self, sid):
        for s in self.segments:
            if s.id == sid:
                return s
        raise UnknownSegment(sid)


@lru_cache(maxsize=None)
def _attach_maps(d):
    # (crossing id, port) -> (segment id, end index), and likewise for
    # boundary points; both total by validation.
    port_end = {}
    bnd_end = {}
    for s in d.segments:
        for k, e in enumerate(s.ends):
            if e[0] == "c":
                port_end[(e[1], e[2])] = (s.id, k)
            else:
                bnd_end[e[1]] = (s.id, k)
    return port_end, bnd_end


@lru_cache(maxsize=None)
def _seg_map(d):
    return {s.id: s for s in d.segments}


def marker_tuple(d, markers):
    """Normalise markers to a tuple aligned with ``d.crossings``."""
    if isinstance(markers, dict):
        missing = [c for c in d.crossings if c not in markers]
        if missing:
            raise ValidationError(f"markers missing for crossings {missing}")
        if len(markers) != d.n_crossings:
            extra = [c for c in markers if c not in d.crossings]
            raise UnknownCrossing(str(extra))
        markers = tuple(markers[c] for c in d.crossings)
    else:
        markers = tuple(markers)
        if len(markers) != d.n_crossings:
            raise ValidationError(
                f"expected {d.n_crossings} markers, got {len(markers)}")
    for m in markers:
        if m not in (1, -1) or isinstance(m, bool):
            raise ValidationError(f"markers must be +1 or -1, got {m!r}")
    return markers


@dataclass(frozen=True)
class LoopInfo:
    """One closed curve of a smoothing.

    ``key`` identifies the loop stably across marker changes: ``("f",
    i)`` for the diagram's i-th free loop, ``("s", min_segment_id)``
    for a loop traced through segments.  ``segs`` is the set of segment
    ids traversed and ``cls`` the curve class from
    :func:`skeincat.surfaces.classify_loop`.
    """

    key: tuple
    segs: frozenset
    cls: object


def loop_id(l):
    """Identity of a loop that is stable across marker changes.

    Free loops are identified by their index, traced loops by the exact
    set of segments they run through.
    """
    return l.key if l.key[0] == "f" else l.segs


@dataclass(frozen=True)
class Smoothing:
    """A crossingless curve system: boundary arcs plus classified loops.

    ``arcs`` is the canonical matching of marked points, ``loops`` is
    sorted by loop key.
    """

    arcs: tuple
    loops: tuple

    @property
    def n_contractible(self):
        return sum(1 for l in self.loops if l.cls is None)

    def essential(self):
        return tuple(l for l in self.loops if l.cls is not None)


def resolve(d, markers):
    """Smoothing obtained by splicing each crossing per its marker.

    ``markers`` maps crossing ids to +1/-1, or lists signs in crossing
    order.  Raises :class:`NonRealizable` when the resulting curve data
    cannot come from embedded curves (crossed boundary arcs, impossible
    winding).
    """
    return _resolve(d, marker_tuple(d, markers))


@lru_cache(maxsize=None)
def _resolve(d, mk):
    partner = {}
    for cid, m in zip(d.crossings, mk):
        for a, b in _splice_partner(m).items():
            partner[(cid, a)] = (cid, b)
    port_end, bnd_end = _attach_maps(d)
    segs = _seg_map(d)

    def oriented(seg, enter):
        w = seg.cut
        return w if enter == 0 else cut_neg(d.surface.kind, w)

    visited = set()

    def walk(sid, enter):
        # Follow the smoothed curve starting into segment ``sid`` at end
        # ``enter`` until it exits at the boundary or closes up.  Returns
        # (terminal end or None, accumulated cut word, segment ids seen).
        kind = d.surface.kind
        total = cut_zero(kind)
        seen = set()
        start = (sid, enter)
        while True:
            seg = segs[sid]
            seen.add(sid)
            w = oriented(seg, enter)
            total = cut_add(kind, total, w)
            out = seg.ends[1 - enter]
            if out[0] == "b":
                return out, total, seen
            hop = partner[(out[1], out[2])]
            sid, enter = port_end[hop]
            if (sid, enter) == start:
                return None, total, seen

    arcs = []
    done_points = set()
    for p in range(d.surface.marked_points):
        if p in done_points:
            continue
        sid, eidx = bnd_end[p]
        out, _, seen = walk(sid, eidx)
        q = out[1]
        arcs.append((p, q))
        done_points.update((p, q))
        visited |= seen

    loops = []
    for s in d.segments:
        if s.id in visited:
            continue
        _, w, seen = walk(s.id, 0)
        visited |= seen
        cls = classify_loop(d.surface, w)
        loops.append(LoopInfo(("s", min(seen)), frozenset(seen), cls))
    for i, w in enumerate(d.free_loops):
        loops.append(LoopInfo(("f", i), frozenset(), classify_loop(d.surface, w)))

    arcs = arc_class(arcs)
    if arcs and not is_noncrossing(arcs):
        raise NonRealizable(f"boundary arcs {arcs} cross")
    loops.sort(key=lambda l: l.key)
    return Smoothing(arcs, tuple(loops))


# ---------------------------------------------------------------------------
# surgery: splicing one crossing away


@dataclass(frozen=True)
class SpliceMeta:
    """Bookkeeping for :func:`splice_crossing_meta`.

    ``merged`` maps each surviving fused segment id to the ids it
    swallowed; ``new_free`` maps each appended free-loop index to the
    segment ids that closed up into it.
    """

    crossing: str
    sign: int
    merged: tuple
    new_free: tuple


def splice_crossing(d, cid, sign):
    """The diagram with crossing ``cid`` replaced by its ``sign`` splice."""
    return splice_crossing_meta(d, cid, sign)[0]


def splice_crossing_meta(d, cid, sign):
    if cid not in d.crossings:
        raise UnknownCrossing(cid)
    kind = d.surface.kind
    partner = _splice_partner(sign)
    port_end, _ = _attach_maps(d)
    segs = _seg_map(d)

    def at_cid(e):
        return e[0] == "c" and e[1] == cid

    touched = [s for s in d.segments if at_cid(s.ends[0]) or at_cid(s.ends[1])]
    touched_ids = {s.id for s in touched}

    def oriented(seg, enter):
        return seg.cut if enter == 0 else cut_neg(kind, seg.cut)

    consumed = set()
    merged = {}

    def chase(sid, enter):
        # Cross the spliced crossing as often as needed; stop at the
        # first end not attached to it.
        total = cut_zero(kind)
        chain = []
        first = (sid, enter)
        while True:
            seg = segs[sid]
            chain.append(sid)
            total = cut_add(kind, total, oriented(seg, enter))
            out = seg.ends[1 - enter]
            if not at_cid(out):
                return out, total, chain
            nxt = port_end[(cid, partner[out[2]])]
            if nxt == first:
                return None, total, chain
            sid, enter = nxt

    # chains anchored away from the crossing become single segments
    for s in touched:
        for eidx in (0, 1):
            if at_cid(s.ends[eidx]) or s.id in consumed:
                continue
            out, total, chain = chase(s.id, eidx)
            rep = min(chain)
            merged[rep] = (Segment(rep, (s.ends[eidx], out), total), frozenset(chain))
            consumed.update(chain)

    # whatever remains closes up into free loops
    new_free = []
    for s in touched:
        if s.id in consumed:
            continue
        _, total, chain = chase(s.id, 0)
        consumed.update(chain)
        new_free.append((total, frozenset(chain)))

    new_segments = []
    for s in d.segments:
        if s.id not in touched_ids:
            new_segments.append(s)
        elif s.id in merged:
            new_segments.append(merged[s.id][0])

    base = len(d.free_loops)
    nd = TangleDiagram(
        d.surface,
        tuple(c for c in d.crossings if c != cid),
        tuple(new_segments),
        d.free_loops + tuple(w for w, _ in new_free),
    )
    meta = SpliceMeta(
        cid,
        sign,
        tuple((rep, ids) for rep, (_, ids) in sorted(merged.items())),
        tuple((base + k, ids) for k, (_, ids) in enumerate(new_free)),
    )
    return nd, meta


def reorder_crossings(d, order):
    """Same diagram with the crossing sequence permuted to ``order``."""
    order = tuple(order)
    for c in order:
        if c not in d.crossings:
            raise UnknownCrossing(c)
    if len(order) != d.n_crossings or len(set(order)) != len(order):
        raise ValidationError("crossing order must be a permutation")
    return TangleDiagram(d.surface, order, d.segments, d.free_loops)


def skein_triple(d, cid):
    """``(d_p, d_0, d_inf)``: ``cid`` moved first, then spliced + and -.

    The crossing order of the two splices is the order of ``d_p`` with
    ``cid`` dropped, which is what the long exact sequence machinery
    expects.
    """
    dp = reorder_crossings(d, (cid,) + tuple(c for c in d.crossings if c != cid))
    return dp, splice_crossing(dp, cid, +1), splice_crossing(dp, cid, -1)


# ---------------------------------------------------------------------------
# framing kinks


def _fresh_crossing_id(d):
    n = 1
    while f"k{n}" in d.crossings:
        n += 1
    return f"k{n}"


def _fresh_sid(d, base):
    sids = {s.id for s in d.segments}
    cand = base
    while cand in sids:
        cand += "x"
    return cand


def _kink(d, where, sign):
    kind = d.surface.kind
    cid = _fresh_crossing_id(d)
    # the small loop sits on ports 2,3 for a negative kink and 1,2 for a
    # positive one; the through strand uses the remaining two ports
    if sign < 0:
        in_port, out_port, loop = 0, 1, (2, 3)
    else:
        in_port, out_port, loop = 0, 3, (1, 2)

    if isinstance(where, int) and not isinstance(where, bool):
        if not 0 <= where < len(d.free_loops):
            raise UnknownSegment(f"free loop {where}")
        w = d.free_loops[where]
        through = Segment(
            _fresh_sid(d, cid + "a"),
            (("c", cid, out_port), ("c", cid, in_port)),
            w,
        )
        segments = d.segments + (
            through,
            Segment(_fresh_sid(d, cid + "o"),
                    (("c", cid, loop[0]), ("c", cid, loop[1])), cut_zero(kind)),
        )
        loops = d.free_loops[:where] + d.free_loops[where + 1:]
    else:
        old = d.segment(where)
        rest = tuple(s for s in d.segments if s.id != where)
        segments = rest + (
            Segment(_fresh_sid(d, where + "a"),
                    (old.ends[0], ("c", cid, in_port)), old.cut),
            Segment(_fresh_sid(d, where + "b"),
                    (("c", cid, out_port), old.ends[1]), cut_zero(kind)),
            Segment(_fresh_sid(d, where + "o"),
                    (("c", cid, loop[0]), ("c", cid, loop[1])), cut_zero(kind)),
        )
        loops = d.free_loops
    return TangleDiagram(d.surface, d.crossings + (cid,), segments, loops)


def add_negative_kink(d, where):
    """Insert a small kink whose + splice detaches a contractible circle.

    ``where`` names a segment id or a free-loop index.  The new crossing
    is appended last in the crossing order.  The stratified homology of
    the result is that of ``d`` shifted by (1, 3) in (i, j).
    """
    return _kink(d, where, -1)


def add_positive_kink(d, where):
    """Mirror kink; shifts the homology table by (-1, -3) in (i, j)."""
    return _kink(d, where, +1)


def mirror(d):
    """Swap every over-strand for the under-strand.

    Implemented by rotating each crossing's ports one step, which
    exchanges the roles of the two splices.
    """
    def flip(e):
        if e[0] == "c":
            return ("c", e[1], (e[2] + 1) % 4)
        return e

    segments = tuple(
        Segment(s.id, (flip(s.ends[0]), flip(s.ends[1])), s.cut) for s in d.segments
    )
    return TangleDiagram(d.surface, d.crossings, segments, d.free_loops)


def diagram_components(d):
    """Connected strands of the underlying curves.

    Strands pass through crossings (port 0 continues at 2, port 1 at
    3).  Returns a tuple of frozensets of segment ids, ordered by
    smallest member, followed by one singleton ``("f", i)`` set per
    free loop.
    """
    port_end, _ = _attach_maps(d)
    parent = {s.id: s.id for s in d.segments}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for cid in d.crossings:
        for a, b in ((0, 2), (1, 3)):
            union(port_end[(cid, a)][0], port_end[(cid, b)][0])

    groups = {}
    for s in d.segments:
        groups.setdefault(find(s.id), set()).add(s.id)
    comps = sorted((frozenset(g) for g in groups.values()), key=min)
    comps += [frozenset({("f", i)}) for i in range(len(d.free_loops))]
    return tuple(comps)


# ---------------------------------------------------------------------------
# JSON wire format


def _fail(msg, path):
    raise SchemaError(f"{path}: {msg}" if path else msg)


def _want_dict(obj, allowed, required, path):
    if not isinstance(obj, dict):
        _fail("expected an object", path)
    for k in obj:
        if k not in allowed:
            _fail(f"unknown field {k!r}", path)
    for k in required:
        if k not in obj:
            _fail(f"missing field {k!r}", path)


def _want_int(x, path):
    if not isinstance(x, int) or isinstance(x, bool):
        _fail("expected an integer", path)
    return x


def _cut_from_json(kind, w, path):
    if kind == DISK:
        if w != []:
            _fail("disk cut words are empty lists", path)
        return ()
    if kind == ANNULUS:
        return _want_int(w, path)
    if not isinstance(w, list) or len(w) != 2:
        _fail("torus cut words are pairs", path)
    return (_want_int(w[0], path + "[0]"), _want_int(w[1], path + "[1]"))


def _cut_to_json(kind, w):
    if kind == DISK:
        return []
    if kind == ANNULUS:
        return w
    return [w[0], w[1]]


def _end_from_json(e, path):
    if not isinstance(e, list) or not e or e[0] not in ("c", "b"):
        _fail('expected ["c", id, port] or ["b", point]', path)
    if e[0] == "c":
        if len(e) != 3 or not isinstance(e[1], str):
            _fail('expected ["c", id, port]', path)
        port = _want_int(e[2], path + "[2]")
        if port not in (0, 1, 2, 3):
            _fail("port out of range", path + "[2]")
        return ("c", e[1], port)
    if len(e) != 2:
        _fail('expected ["b", point]', path)
    pt = _want_int(e[1], path + "[1]")
    if pt < 0:
        _fail("boundary point out of range", path + "[1]")
    return ("b", pt)


def diagram_from_obj(obj):
    """Build a diagram from decoded JSON, checking the schema strictly."""
    _want_dict(obj, {"surface", "crossings", "segments", "free_loops"},
               {"surface"}, "")
    sobj = obj["surface"]
    _want_dict(sobj, {"kind", "marked_points"}, {"kind"}, "surface")
    if not isinstance(sobj["kind"], str):
        _fail("expected a string", "surface.kind")
    mp = 0
    if "marked_points" in sobj:
        mp = _want_int(sobj["marked_points"], "surface.marked_points")
    surface = MarkedSurface(sobj["kind"], mp)
    kind = surface.kind

    crossings = []
    raw = obj.get("crossings", [])
    if not isinstance(raw, list):
        _fail("expected a list", "crossings")
    for i, c in enumerate(raw):
        _want_dict(c, {"id"}, {"id"}, f"crossings[{i}]")
        if not isinstance(c["id"], str):
            _fail("expected a string", f"crossings[{i}].id")
        crossings.append(c["id"])

    segments = []
    raw = obj.get("segments", [])
    if not isinstance(raw, list):
        _fail("expected a list", "segments")
    for i, s in enumerate(raw):
        path = f"segments[{i}]"
        _want_dict(s, {"id", "ends", "cut"}, {"id", "ends"}, path)
        if not isinstance(s["id"], str):
            _fail("expected a string", path + ".id")
        if not isinstance(s["ends"], list) or len(s["ends"]) != 2:
            _fail("expected a pair of ends", path + ".ends")
        ends = tuple(
            _end_from_json(e, f"{path}.ends[{k}]") for k, e in enumerate(s["ends"])
        )
        cut = cut_zero(kind)
        if "cut" in s:
            cut = _cut_from_json(kind, s["cut"], path + ".cut")
        segments.append(Segment(s["id"], ends, cut))

    loops = []
    raw = obj.get("free_loops", [])
    if not isinstance(raw, list):
        _fail("expected a list", "free_loops")
    for i, w in enumerate(raw):
        loops.append(_cut_from_json(kind, w, f"free_loops[{i}]"))

    return TangleDiagram(surface, tuple(crossings), tuple(segments), tuple(loops))


def parse_diagram(src):
    """Decode a diagram from a JSON string (or an already decoded dict)."""
    if isinstance(src, (bytes, bytearray)):
        src = src.decode("utf-8")
    if isinstance(src, str):
        try:
            src = json.loads(src)
        except json.JSONDecodeError as e:
            raise SchemaError(f"invalid JSON: {e}") from None
    return diagram_from_obj(src)


def diagram_to_obj(d):
    kind = d.surface.kind
    segs = []
    for s in d.segments:
        item = {
            "id": s.id,
            "ends": [list(e) for e in s.ends],
        }
        if kind != DISK:
            item["cut"] = _cut_to_json(kind, s.cut)
        segs.append(item)
    return {
        "surface": {"kind": kind, "marked_points": d.surface.marked_points},
        "crossings": [{"id": c} for c in d.crossings],
        "segments": segs,
        "free_loops": [_cut_to_json(kind, w) for w in d.free_loops],
    }


def serialize_diagram(d, indent=None):
    """Encode a diagram as JSON; inverse of :func:`parse_diagram`."""
    return json.dumps(diagram_to_obj(d), indent=indent)

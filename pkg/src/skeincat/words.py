"""Building diagrams from generator words.

A word describes a tangle read bottom to top, starting from a row of
strands.  ``xI+`` and ``xI-`` cross strands I and I+1 (the + generator
carries the incoming left strand over to the right), ``cupI`` inserts a
local minimum at position I, ``capI`` joins strands I and I+1 in a
local maximum.  Positions are 1-based against the running strand count.

Open words live on the disk: the initial strands attach to marked
points 0..m-1 (left to right along the bottom) and the final strands to
m..m+m'-1 (right to left along the top, so points stay counterclockwise
around the boundary).  A word can instead be closed: the trace closure
joins the p-th top strand back to the p-th bottom strand, wrapping
around the annulus core when the diagram lives there, and the plat
closure caps adjacent pairs at the bottom and top.
"""

from __future__ import annotations

import re

from .errors import IllTypedWord, SurfaceMismatch
from .diagram import Segment, TangleDiagram
from .surfaces import ANNULUS, DISK, MarkedSurface, cut_add, cut_neg, cut_zero

_X = re.compile(r"^x([0-9]+)([+-])$")
_CUPCAP = re.compile(r"^(cup|cap)([0-9]+)$")

TRACE = "trace"
PLAT = "plat"


def parse_word(text):
    """Parse ``"x1+,cup2,cap1"`` into a tuple of op tuples."""
    if not isinstance(text, str):
        return _check_ops(text)
    ops = []
    stripped = text.strip()
    if not stripped:
        return ()
    for raw in stripped.split(","):
        t = raw.strip()
        m = _X.match(t)
        if m:
            pos = int(m.group(1))
            ops.append(("x", pos, 1 if m.group(2) == "+" else -1))
        else:
            m = _CUPCAP.match(t)
            if not m:
                raise IllTypedWord(f"unrecognised token {t!r}")
            pos = int(m.group(2))
            ops.append((m.group(1), pos))
        if pos < 1:
            raise IllTypedWord(f"positions are 1-based, got {t!r}")
    return tuple(ops)


def _check_ops(ops):
    out = []
    for op in ops:
        op = tuple(op)
        if op[0] == "x" and len(op) == 3 and op[2] in (1, -1) and op[1] >= 1:
            out.append(op)
        elif op[0] in ("cup", "cap") and len(op) == 2 and op[1] >= 1:
            out.append(op)
        else:
            raise IllTypedWord(f"malformed op {op!r}")
    return tuple(out)


def word_text(ops):
    """Inverse of :func:`parse_word`."""
    bits = []
    for op in ops:
        if op[0] == "x":
            bits.append(f"x{op[1]}{'+' if op[2] > 0 else '-'}")
        else:
            bits.append(f"{op[0]}{op[1]}")
    return ",".join(bits)


def generate_from_word(word, strands, kind=DISK, close=None):
    """Build the tangle diagram a word describes.

    ``close`` is ``None`` for an open disk tangle, ``"trace"`` or
    ``"plat"`` for a closed diagram.  Raises :class:`IllTypedWord` when
    an op falls outside the running strand count or the closure does
    not type-check.
    """
    ops = parse_word(word)
    if kind not in (DISK, ANNULUS):
        raise SurfaceMismatch(f"words build diagrams on the disk or annulus, not {kind}")
    if close not in (None, TRACE, PLAT):
        raise IllTypedWord(f"unknown closure {close!r}")
    if not isinstance(strands, int) or strands < 0:
        raise IllTypedWord("strand count must be a non-negative integer")
    zero = cut_zero(kind)

    wires = []
    cur = []
    if close is None:
        cur = [("b", p) for p in range(strands)]
    elif close == TRACE:
        cur = [("v", f"a{p}", 0) for p in range(strands)]
    else:
        if strands % 2:
            raise IllTypedWord("plat closures need an even strand count")
        for i in range(0, strands, 2):
            cur.append(("v", f"p{i}", 0))
            cur.append(("v", f"p{i}", 1))

    cids = []
    ucount = 0
    for n, op in enumerate(ops):
        k = len(cur)
        pos = op[1]
        if op[0] == "x":
            if not 1 <= pos <= k - 1:
                raise IllTypedWord(
                    f"op {n}: crossing at {pos} needs strands {pos},{pos + 1} "
                    f"but only {k} are live")
            cid = f"x{len(cids) + 1}"
            cids.append(cid)
            sw, se, ne, nw = (0, 1, 2, 3) if op[2] > 0 else (1, 2, 3, 0)
            wires.append((cur[pos - 1], ("c", cid, sw), zero))
            wires.append((cur[pos], ("c", cid, se), zero))
            cur[pos - 1] = ("c", cid, nw)
            cur[pos] = ("c", cid, ne)
        elif op[0] == "cup":
            if not 1 <= pos <= k + 1:
                raise IllTypedWord(f"op {n}: cup at {pos} out of range")
            ucount += 1
            node = f"u{ucount}"
            cur.insert(pos - 1, ("v", node, 0))
            cur.insert(pos, ("v", node, 1))
        else:
            if not 1 <= pos <= k - 1:
                raise IllTypedWord(f"op {n}: cap at {pos} out of range")
            ucount += 1
            node = f"u{ucount}"
            wires.append((cur[pos - 1], ("v", node, 0), zero))
            wires.append((cur[pos], ("v", node, 1), zero))
            del cur[pos - 1:pos + 1]

    if close is None:
        m2 = len(cur)
        total = strands + m2
        if kind == ANNULUS and total:
            raise IllTypedWord("annulus diagrams carry no marked points; close the word")
        for p, slot in enumerate(cur):
            wires.append((slot, ("b", strands + m2 - 1 - p), zero))
    elif close == TRACE:
        if len(cur) != strands:
            raise IllTypedWord(
                f"trace closure needs the word to preserve the strand count "
                f"({strands} in, {len(cur)} out)")
        around = 1 if kind == ANNULUS else zero
        for p, slot in enumerate(cur):
            wires.append((slot, ("v", f"a{p}", 1), around))
        total = 0
    else:
        if len(cur) % 2:
            raise IllTypedWord("plat closure needs an even number of top strands")
        for i in range(0, len(cur), 2):
            ucount += 1
            node = f"u{ucount}"
            wires.append((cur[i], ("v", node, 0), zero))
            wires.append((cur[i + 1], ("v", node, 1), zero))
        total = 0

    return _fuse(kind, total, cids, wires)


def _fuse(kind, n_points, cids, wires):
    # Contract the virtual 2-valent nodes out of the wire graph, leaving
    # honest segments between crossings and boundary points.
    adj = {}
    for idx, (a, b, _) in enumerate(wires):
        for slot in (a, b):
            assert slot not in adj, slot
        adj[a] = idx
        adj[b] = idx

    def step(slot):
        idx = adj[slot]
        a, b, w = wires[idx]
        if slot == a:
            return idx, b, w
        return idx, a, cut_neg(kind, w)

    used = set()
    segs = []
    starts = [("b", p) for p in range(n_points)]
    starts += [("c", c, p) for c in cids for p in range(4)]
    visited = set()
    for s0 in starts:
        if s0 in visited:
            continue
        visited.add(s0)
        cut = cut_zero(kind)
        slot = s0
        while True:
            idx, nxt, w = step(slot)
            used.add(idx)
            cut = cut_add(kind, cut, w)
            if nxt[0] != "v":
                break
            slot = (nxt[0], nxt[1], 1 - nxt[2])
        visited.add(nxt)
        segs.append(Segment(f"e{len(segs) + 1}", (s0, nxt), cut))

    loops = []
    for idx, (a, b, w) in enumerate(wires):
        if idx in used:
            continue
        used.add(idx)
        cut = w
        slot = (b[0], b[1], 1 - b[2])
        while slot != a:
            j, nxt, w2 = step(slot)
            used.add(j)
            cut = cut_add(kind, cut, w2)
            slot = (nxt[0], nxt[1], 1 - nxt[2])
        loops.append(cut)

    return TangleDiagram(
        MarkedSurface(kind, n_points), tuple(cids), tuple(segs), tuple(loops))


# ---------------------------------------------------------------------------
# seeded random words


def random_disk_word(rng, max_crossings=8, max_states=4096):
    """A random disk word: returns ``(word_text, strands, close)``.

    Mixes braid trace closures, open tangles with turnbacks, and plat
    closures; the crossing count never exceeds ``max_crossings``.  Draws
    whose diagram would carry more than ``max_states`` states are
    redrawn, which keeps the tail of the size distribution bounded
    without biasing the op mix (states pile up when a word stacks many
    disjoint circles).
    """
    from .states import state_count

    while True:
        word, strands, close = _draw_disk_word(rng, max_crossings)
        d = generate_from_word(word, strands, close=close)
        if state_count(d) <= max_states:
            return word, strands, close


def _draw_disk_word(rng, max_crossings):
    style = rng.random()
    target = rng.randint(1, max_crossings)
    if style < 0.45:
        n = rng.randint(2, 3)
        ops = [("x", rng.randint(1, n - 1), rng.choice((1, -1)))
               for _ in range(target)]
        return word_text(ops), n, TRACE
    if style < 0.8:
        n = rng.randint(1, 3)
        k = n
        ops = []
        placed = 0
        while placed < target:
            choices = []
            if k >= 2:
                choices += ["x"] * 4
                choices += ["cap"]
            if k <= 4:
                choices += ["cup"]
            pick = rng.choice(choices)
            if pick == "x":
                ops.append(("x", rng.randint(1, k - 1), rng.choice((1, -1))))
                placed += 1
            elif pick == "cup":
                ops.append(("cup", rng.randint(1, k + 1)))
                k += 2
            else:
                ops.append(("cap", rng.randint(1, k - 1)))
                k -= 2
        return word_text(ops), n, None
    n = 2 * rng.randint(1, 2)
    ops = [("x", rng.randint(1, n - 1), rng.choice((1, -1)))
           for _ in range(target)]
    return word_text(ops), n, PLAT


def random_annulus_braid(rng, max_crossings=6):
    """A random annular braid closure: returns ``(word_text, strands)``."""
    n = rng.randint(2, 3)
    ops = [("x", rng.randint(1, n - 1), rng.choice((1, -1)))
           for _ in range(rng.randint(1, max_crossings))]
    return word_text(ops), n

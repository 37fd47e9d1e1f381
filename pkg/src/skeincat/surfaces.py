"""Marked surfaces, classes of embedded loops, and boundary arc matchings.

Three surfaces are supported: the disk with an even number of marked
boundary points, the annulus, and the torus (both without marked
points).  Homotopy data travels as "cut words": net signed intersection
numbers with a fixed cut system.  The disk needs none (its word is the
empty tuple), the annulus uses one radial arc (an integer), the torus
the two standard curves (a pair of integers).  For an *embedded* loop
this data decides contractibility and, after normalisation, the
unoriented curve class, which is everything the gradings downstream
need.

Boundary connectivity of a smoothed tangle is recorded as a perfect
matching of the marked points.  Matchings of realizable smoothings are
non-crossing, so on the disk the matching is a complete homotopy
invariant of the arc system.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NonRealizable, ValidationError

DISK = "disk"
ANNULUS = "annulus"
TORUS = "torus"
KINDS = (DISK, ANNULUS, TORUS)

#: The unique essential curve class on the annulus.
CORE = "core"


@dataclass(frozen=True)
class MarkedSurface:
    """A surface together with the number of marked boundary points."""

    kind: str
    marked_points: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown surface kind {self.kind!r}", path="surface.kind")
        if self.marked_points < 0 or self.marked_points % 2:
            raise ValidationError(
                "marked point count must be a non-negative even integer",
                path="surface.marked_points",
            )
        if self.kind != DISK and self.marked_points:
            raise ValidationError(
                f"the {self.kind} carries no marked points", path="surface.marked_points"
            )


# ---------------------------------------------------------------------------
# cut words


def cut_zero(kind):
    if kind == DISK:
        return ()
    if kind == ANNULUS:
        return 0
    return (0, 0)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def cut_ok(kind, w):
    """Is ``w`` a well-formed cut word for the given surface kind?"""
    if kind == DISK:
        return w == ()
    if kind == ANNULUS:
        return _is_int(w)
    return isinstance(w, tuple) and len(w) == 2 and all(_is_int(c) for c in w)


def cut_add(kind, a, b):
    if kind == DISK:
        return ()
    if kind == ANNULUS:
        return a + b
    return (a[0] + b[0], a[1] + b[1])


def cut_neg(kind, w):
    if kind == DISK:
        return ()
    if kind == ANNULUS:
        return -w
    return (-w[0], -w[1])


# ---------------------------------------------------------------------------
# loop classification


def classify_loop(surface, w):
    """Curve class of an embedded closed loop with cut word ``w``.

    Returns ``None`` for a contractible loop, otherwise the canonical
    unoriented class: :data:`CORE` on the annulus, a primitive pair
    ``(p, q)`` with ``p > 0`` or ``(0, 1)`` on the torus.  Words that no
    embedded loop can produce (winding beyond 1 on the annulus, an
    imprimitive pair on the torus) raise :class:`NonRealizable`; they
    only arise from corrupt input data.
    """
    if not cut_ok(surface.kind, w):
        raise ValueError(f"malformed cut word {w!r} for {surface.kind}")
    if surface.kind == DISK:
        return None
    if surface.kind == ANNULUS:
        if w == 0:
            return None
        if abs(w) > 1:
            raise NonRealizable(f"no embedded annulus loop has winding {w}")
        return CORE
    a, b = w
    if a == 0 and b == 0:
        return None
    if gcd(abs(a), abs(b)) != 1:
        raise NonRealizable(f"no embedded torus loop has class {w}")
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return (a, b)


# ---------------------------------------------------------------------------
# signed multisets of curve classes (the essential-loop grading)

# A vector is stored canonically as a sorted tuple of (class, coefficient)
# pairs with every coefficient non-zero.


def psi_vector(pairs):
    """Canonicalise an iterable of (class, coefficient) contributions."""
    acc = {}
    for cls, c in pairs:
        acc[cls] = acc.get(cls, 0) + c
    return tuple(sorted((g, c) for g, c in acc.items() if c))


def psi_add(s1, s2):
    return psi_vector(list(s1) + list(s2))


def psi_neg(s):
    return tuple((g, -c) for g, c in s)


def fold_abs(s):
    """Replace every coefficient by its absolute value."""
    return tuple((g, abs(c)) for g, c in s)


def psi_to_json(s):
    return [[list(g) if isinstance(g, tuple) else g, c] for g, c in s]


def psi_from_json(obj):
    pairs = []
    for g, c in obj:
        pairs.append((tuple(g) if isinstance(g, list) else g, c))
    return psi_vector(pairs)


# ---------------------------------------------------------------------------
# arc matchings on the marked points


def arc_class(pairs):
    """Canonicalise a perfect matching given as endpoint pairs.

    Pairs are normalised to ``(min, max)`` and sorted.  Raises
    ``ValueError`` when an endpoint repeats.
    """
    norm = tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))
    seen = set()
    for a, b in norm:
        if a == b or a in seen or b in seen:
            raise ValueError(f"not a matching: {pairs!r}")
        seen.update((a, b))
    return norm

def is_noncrossing(pairs):
    """No two pairs interleave in the cyclic order of the points."""
    for i, (a, b) in enumerate(pairs):
        for c, d in pairs[i + 1 :]:
            if a < c < b < d or c < a < d < b:
                return False
    return True


def enumerate_arc_classes(k):
    """All non-crossing perfect matchings of ``2k`` cyclically ordered points.

    Returned sorted lexicographically; there are Catalan(k) of them.
    """
    if k < 0:
        raise ValueError("negative pair count")

    def rec(lo, hi):
        if lo >= hi:
            yield ()
            return
        for m in range(lo + 1, hi, 2):
            for left in rec(lo + 1, m):
                for right in rec(m + 1, hi):
                    yield ((lo, m),) + left + right

    out = [tuple(sorted(match)) for match in rec(0, 2 * k)]
    out.sort()
    return out


def rotate_arc_class(b, n_points):
    """Shift every endpoint by one position counterclockwise, mod ``n_points``."""
    if b and n_points < 2 * len(b):
        raise ValueError("matching does not fit on the point set")
    return arc_class(((a + 1) % n_points, (c + 1) % n_points) for a, c in b)

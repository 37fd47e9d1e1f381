"""Product formulas for unions of disk tangles.

The chain complex of a side-by-side union is the tensor product of the
factor complexes, so its homology is determined by the factor tables:
a product summand in each combined degree plus a torsion correction
one homological step above it.  The differential lowers i by 2, so
that step is an i-shift of +2; the shift of 1 the classical indexing
would suggest lands in strata of the wrong parity, which are empty.
The same arithmetic predicts the table of two 1-tangles glued at a
shared endpoint, whose complex is a tensor product as well.
"""

from __future__ import annotations

from math import gcd

from .homology import HomologyGroup, HomologyTable
from .surfaces import arc_class, psi_add


def _prime_powers(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def invariant_factors(cyclics):
    """Normalise a multiset of cyclic orders to the divisibility chain.

    ``[8, 12]`` becomes ``(4, 24)``; trivial factors are dropped.
    """
    slots = {}
    for f in cyclics:
        for p, e in _prime_powers(f):
            slots.setdefault(p, []).append(e)
    n = max((len(v) for v in slots.values()), default=0)
    out = [1] * n
    for p, es in slots.items():
        es.sort(reverse=True)
        for k, e in enumerate(es):
            out[n - 1 - k] *= p ** e
    return tuple(f for f in out if f > 1)


def tensor_group(g1, g2):
    """Tensor product of two finitely generated abelian groups."""
    cyclics = list(g1.torsion) * g2.free_rank + list(g2.torsion) * g1.free_rank
    for a in g1.torsion:
        for b in g2.torsion:
            cyclics.append(gcd(a, b))
    return HomologyGroup(g1.free_rank * g2.free_rank, invariant_factors(cyclics))


def tor_group(g1, g2):
    """Torsion product; free parts contribute nothing."""
    cyclics = [gcd(a, b) for a in g1.torsion for b in g2.torsion]
    return HomologyGroup(0, invariant_factors(cyclics))


def _merge(entries, key, g):
    if not g:
        return
    old = entries.get(key)
    if old is not None:
        g = HomologyGroup(old.free_rank + g.free_rank,
                          invariant_factors(old.torsion + g.torsion))
    entries[key] = g


def _predict(tA, tB, combine):
    if tA.coeff != tB.coeff:
        raise ValueError(
            f"coefficient mismatch: {tA.coeff} versus {tB.coeff}")
    entries = {}
    for k1, g1 in tA.entries.items():
        for k2, g2 in tB.entries.items():
            i, j, s, b = combine(k1, k2)
            _merge(entries, (i, j, s, b), tensor_group(g1, g2))
            _merge(entries, (i + 2, j, s, b), tor_group(g1, g2))
    return HomologyTable(tA.coeff, entries)


def kunneth_predict(tA, tB, points_a=0):
    """Predicted table of a side-by-side union from the factor tables.

    Free parts multiply at (i1+i2, j1+j2); torsion interactions add a
    correction two i-steps above.  ``points_a`` is the marked point
    count of the left factor, needed to shift the right factor's
    boundary matchings past it; it can stay 0 whenever either factor
    is closed.
    """

    def combine(k1, k2):
        i1, j1, s1, b1 = k1
        i2, j2, s2, b2 = k2
        b = arc_class(b1 + tuple((a + points_a, c + points_a) for a, c in b2))
        return i1 + i2, j1 + j2, psi_add(s1, s2), b

    return _predict(tA, tB, combine)


def kunneth_predict_glued(tA, tB):
    """Prediction for two 1-tangles glued at one shared endpoint.

    Both inputs must be tables of disk tangles with boundary points
    {0, 1}; the glued diagram has the same two points, so every entry
    sits on the single arc (0, 1) and only (i, j) arithmetic remains.
    """
    arc = ((0, 1),)
    for t in (tA, tB):
        for (_, _, s, b) in t.entries:
            if b != arc or s:
                raise ValueError(
                    "glued prediction needs tables of 1-tangles on the disk")

    def combine(k1, k2):
        return k1[0] + k2[0], k1[1] + k2[1], (), arc

    return _predict(tA, tB, combine)

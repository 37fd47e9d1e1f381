"""States, gradings, and the stratified chain complex of a diagram.

A state is a smoothing marker (+1 or -1) at every crossing together
with a label (+1 or -1) on every closed loop of the resulting
smoothing.  Four gradings are attached: the marker sum i, the quantum
grading j = i + twice the signed count of contractible labels, the
vector s of labelled essential curve classes, and the boundary matching
b.  Only i moves under the differential, so the chain complex splits
into strata indexed by (j, s, b).

The differential sends a state to the states reachable by trading one
+ marker for a -, relabelled so that j, s and b survive: labels are
carried over on every loop the flip does not touch, the loops it does
touch absorb whatever labels keep the gradings fixed.  Each transition
counts with sign (-1)^t, t the number of - markers at later crossings,
and lowers i by exactly 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

from .diagram import loop_id, resolve
from .surfaces import psi_vector


class State(NamedTuple):
    """Markers aligned with ``d.crossings``, labels with the sorted loops."""

    markers: tuple
    labels: tuple


class Grading(NamedTuple):
    i: int
    j: int
    s: tuple
    b: tuple

    @property
    def stratum(self):
        return (self.j, self.s, self.b)


def grade(d, state):
    sm = resolve(d, state.markers)
    i = sum(state.markers)
    contractible = 0
    essential = []
    for loop, label in zip(sm.loops, state.labels):
        if loop.cls is None:
            contractible += label
        else:
            essential.append((loop.cls, label))
    return Grading(i, i + 2 * contractible, psi_vector(essential), sm.arcs)


def enumerate_states(d):
    """All states of the diagram, markers varying outermost."""
    for markers in product((1, -1), repeat=d.n_crossings):
        n_loops = len(resolve(d, markers).loops)
        for labels in product((1, -1), repeat=n_loops):
            yield State(markers, labels)


def state_count(d):
    """Total number of states, without materialising them."""
    return sum(2 ** len(resolve(d, mk).loops)
               for mk in product((1, -1), repeat=d.n_crossings))


def incident_states(d, state, v):
    """States reached from ``state`` by flipping the + marker at ``v``.

    Empty when ``v`` already carries a - marker.  Labels transfer along
    loops untouched by the flip; the remaining loops take every
    labelling that preserves j, s and b.
    """
    idx = d.crossing_index(v)
    if state.markers[idx] != 1:
        return []
    g = grade(d, state)
    flipped = state.markers[:idx] + (-1,) + state.markers[idx + 1:]
    sm2 = resolve(d, flipped)
    carried = {}
    for loop, label in zip(resolve(d, state.markers).loops, state.labels):
        carried[loop_id(loop)] = label
    base = [carried.get(loop_id(l)) for l in sm2.loops]
    free = [k for k, lab in enumerate(base) if lab is None]
    out = []
    for assign in product((1, -1), repeat=len(free)):
        labels = list(base)
        for k, lab in zip(free, assign):
            labels[k] = lab
        cand = State(flipped, tuple(labels))
        g2 = grade(d, cand)
        if g2.j == g.j and g2.s == g.s and g2.b == g.b:
            out.append(cand)
    return out


def transition_sign(d, state, v):
    """(-1)^t with t the count of - markers after ``v`` in crossing order."""
    idx = d.crossing_index(v)
    t = sum(1 for m in state.markers[idx + 1:] if m == -1)
    return -1 if t % 2 else 1


def differential_of(d, state):
    """The boundary of a state as a list of (coefficient, state) pairs."""
    out = []
    for v in d.crossings:
        sign = transition_sign(d, state, v)
        for nxt in incident_states(d, state, v):
            out.append((sign, nxt))
    return out


@dataclass
class Stratum:
    """One (j, s, b) summand of the chain complex.

    ``basis[i]`` lists states sorted lexicographically; ``boundary[i]``
    is the matrix of d: C_i -> C_{i-2} with one column per basis state
    of C_i and one row per basis state of C_{i-2}.
    """

    key: tuple
    basis: dict = field(default_factory=dict)
    boundary: dict = field(default_factory=dict)

    def dim(self, i):
        return len(self.basis.get(i, ()))

    def degrees(self):
        return sorted(self.basis)

    def matrix(self, i):
        return self.boundary.get(i, [[] for _ in range(self.dim(i - 2))])


@dataclass
class StratifiedComplex:
    diagram: object
    strata: dict

    def stratum_keys(self):
        return sorted(self.strata)

    def total_dim(self):
        return sum(st.dim(i) for st in self.strata.values() for i in st.basis)


def state_complex(d):
    """Assemble the full stratified complex of a diagram."""
    strata = {}
    for s in enumerate_states(d):
        g = grade(d, s)
        st = strata.setdefault(g.stratum, Stratum(g.stratum))
        st.basis.setdefault(g.i, []).append(s)

    for st in strata.values():
        for i in st.basis:
            st.basis[i].sort()

    for st in strata.values():
        for i, states in st.basis.items():
            below = st.basis.get(i - 2, [])
            if not below:
                st.boundary[i] = []
                continue
            pos = {s: r for r, s in enumerate(below)}
            mat = [[0] * len(states) for _ in below]
            for c, s in enumerate(states):
                for coeff, nxt in differential_of(d, s):
                    mat[pos[nxt]][c] += coeff
            st.boundary[i] = mat
    return StratifiedComplex(d, strata)


def _sparse_cols(mat):
    cols = {}
    for r, row in enumerate(mat):
        for c, v in enumerate(row):
            if v:
                cols.setdefault(c, []).append((r, v))
    return cols


def verify_d2(cx):
    """Check d o d = 0 in every stratum; returns the failing strata."""
    bad = []
    for key, st in cx.strata.items():
        for i in st.basis:
            a = st.boundary.get(i)
            b = st.boundary.get(i - 2)
            if not a or not b or not st.dim(i - 4):
                continue
            acols = _sparse_cols(a)
            bcols = _sparse_cols(b)
            for ents in acols.values():
                acc = {}
                for k, v in ents:
                    for r, w in bcols.get(k, ()):
                        acc[r] = acc.get(r, 0) + v * w
                if any(acc.values()):
                    bad.append((key, i))
                    break
    return bad

"""Homology of the stratified complex, over Z, Q, or a prime field.

Within one (j, s, b) stratum the differential runs C_i -> C_{i-2}, so
each degree is handled independently: the free rank of H_i is
dim C_i - rank d_i - rank d_{i+2}, the torsion is read off the Smith
normal form of the incoming matrix.  Tables keep only the non-zero
groups, keyed by the full grading (i, j, s, b).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NotAComplex
from .laurent import LaurentPoly
from .snf import rank_int, rank_mod_p, smith_normal_form
from .states import StratifiedComplex, state_complex, verify_d2
from .surfaces import psi_from_json, psi_to_json


def parse_coeff(spec):
    """Normalise a coefficient spec: ``z``, ``q``, or ``p:<prime>``."""
    if spec in ("z", "Z"):
        return ("z", None)
    if spec in ("q", "Q"):
        return ("q", None)
    if isinstance(spec, str) and spec.startswith("p:"):
        try:
            p = int(spec[2:])
        except ValueError:
            raise ValueError(f"bad prime in coefficient spec {spec!r}") from None
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        return ("p", p)
    raise ValueError(f"unknown coefficient spec {spec!r}")


def coeff_text(mode, p):
    return f"p:{p}" if mode == "p" else mode


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group, free rank plus torsion chain."""

    free_rank: int
    torsion: tuple = ()

    def __bool__(self):
        return bool(self.free_rank or self.torsion)

    def text(self, mode="z", p=None):
        if mode == "q":
            return f"Q^{self.free_rank}" if self.free_rank != 1 else "Q"
        if mode == "p":
            return f"F{p}^{self.free_rank}" if self.free_rank != 1 else f"F{p}"
        bits = []
        if self.free_rank == 1:
            bits.append("Z")
        elif self.free_rank:
            bits.append(f"Z^{self.free_rank}")
        bits.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(bits) if bits else "0"


def _s_text(s):
    if not s:
        return "."
    bits = []
    for cls, c in s:
        name = cls if isinstance(cls, str) else "(" + ",".join(map(str, cls)) + ")"
        bits.append(f"{name}:{c:+d}")
    return " ".join(bits)


def _b_text(b):
    if not b:
        return "."
    return " ".join(f"{a}-{c}" for a, c in b)


def table_sort_key(key):
    i, j, s, b = key
    return (j, s, b, i)


@dataclass(frozen=True)
class HomologyTable:
    """Non-zero homology groups keyed by (i, j, s, b)."""

    coeff: str
    entries: dict = field(default_factory=dict)

    def keys_sorted(self):
        return sorted(self.entries, key=table_sort_key)

    def group(self, i, j, s=(), b=()):
        return self.entries.get((i, j, s, b), HomologyGroup(0))

    def shifted(self, di, dj):
        return HomologyTable(
            self.coeff,
            {(i + di, j + dj, s, b): g for (i, j, s, b), g in self.entries.items()},
        )

    def total_rank(self):
        return sum(g.free_rank for g in self.entries.values())

    def to_obj(self):
        out = []
        for key in self.keys_sorted():
            i, j, s, b = key
            g = self.entries[key]
            out.append({
                "i": i,
                "j": j,
                "s": psi_to_json(s),
                "b": [list(p) for p in b],
                "free_rank": g.free_rank,
                "torsion": list(g.torsion),
            })
        return {"entries": out}

    def to_json(self, indent=None):
        return json.dumps(self.to_obj(), indent=indent)

    def pretty(self):
        mode, p = parse_coeff(self.coeff)
        rows = [("i", "j", "s", "b", "H")]
        for key in self.keys_sorted():
            i, j, s, b = key
            rows.append((str(i), str(j), _s_text(s), _b_text(b),
                         self.entries[key].text(mode, p)))
        widths = [max(len(r[k]) for r in rows) for k in range(5)]
        lines = []
        for r in rows:
            lines.append("  ".join(str(x).rjust(w) if k < 2 else str(x).ljust(w)
                                   for k, (x, w) in enumerate(zip(r, widths))).rstrip())
        return "\n".join(lines)


def table_from_obj(obj, coeff="z"):
    entries = {}
    for e in obj["entries"]:
        s = psi_from_json(e["s"])
        b = tuple(tuple(p) for p in e["b"])
        g = HomologyGroup(e["free_rank"], tuple(e["torsion"]))
        entries[(e["i"], e["j"], s, b)] = g
    return HomologyTable(coeff, entries)


def homology(x, coeff="z"):
    """Homology table of a diagram or a prebuilt stratified complex."""
    mode, p = parse_coeff(coeff)
    cx = x if isinstance(x, StratifiedComplex) else state_complex(x)
    if verify_d2(cx):
        raise NotAComplex("differential does not square to zero")
    entries = {}
    for (j, s, b), st in cx.strata.items():
        for i in st.degrees():
            n = st.dim(i)
            d_out = st.boundary[i]
            d_in = st.boundary.get(i + 2)
            n_in = st.dim(i + 2)
            if mode == "p":
                r_out = rank_mod_p(d_out, p, st.dim(i - 2), n)
                r_in = rank_mod_p(d_in, p, n, n_in) if n_in else 0
                g = HomologyGroup(n - r_out - r_in)
            else:
                r_out = rank_int(d_out, st.dim(i - 2), n)
                tors = ()
                r_in = 0
                if n_in:
                    snf = smith_normal_form(d_in, n, n_in)
                    r_in = snf.rank
                    if mode == "z":
                        tors = snf.invariant_factors
                g = HomologyGroup(n - r_out - r_in, tors)
            if g:
                entries[(i, j, s, b)] = g
    return HomologyTable(coeff_text(mode, p), entries)


def _chi_sign(i, j):
    return 1 if ((j - i) // 2) % 2 == 0 else -1


def shift_table(t, di, dj):
    """Translate every entry of a table by (di, dj); strata untouched."""
    return t.shifted(di, dj)


def equal_tables(t1, t2):
    """Exact equality: same coefficient ring, same groups everywhere."""
    return t1.coeff == t2.coeff and t1.entries == t2.entries


def euler_by_stratum(x):
    """Graded Euler characteristic per (s, b), as a Laurent polynomial.

    Each state or homology class at (i, j) contributes
    (-1)^((j-i)/2) A^j.  Works on a complex (chain level) or a table
    (homology level); over a field the two agree stratum by stratum.
    """
    acc = {}
    if isinstance(x, HomologyTable):
        for (i, j, s, b), g in x.entries.items():
            key = (s, b)
            acc[key] = acc.get(key, LaurentPoly.zero()) + LaurentPoly.monomial(
                j, _chi_sign(i, j) * g.free_rank)
    else:
        cx = x if isinstance(x, StratifiedComplex) else state_complex(x)
        for (j, s, b), st in cx.strata.items():
            key = (s, b)
            for i, states in st.basis.items():
                acc[key] = acc.get(key, LaurentPoly.zero()) + LaurentPoly.monomial(
                    j, _chi_sign(i, j) * len(states))
    return {k: v for k, v in acc.items() if v}


def euler_characteristic(x):
    """Total graded Euler characteristic, summed over all strata."""
    total = LaurentPoly.zero()
    for v in euler_by_stratum(x).values():
        total = total + v
    return total

"""Named verification suites over diagrams.

Each suite takes a list of ``(name, diagram)`` pairs and produces a
:class:`VerificationReport` holding one :class:`CheckResult` per
check.  Suites are pure and deterministic for a fixed seed; when
several diagrams are given the per-diagram work is farmed out to a
thread pool bounded by the ``SKEINCAT_THREADS`` environment variable,
and results are reported in input order regardless of scheduling.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import cut, reduced_tensor, tensor, twist
from .bracket import euler_vs_bracket
from .diagram import add_negative_kink, add_positive_kink, reorder_crossings
from .exactness import les_rank_check, ses_check
from .homology import (
    equal_tables,
    euler_by_stratum,
    homology,
    shift_table,
)
from .kunneth import kunneth_predict, kunneth_predict_glued
from .laurent import LaurentPoly
from .states import state_complex, verify_d2
from .surfaces import ANNULUS, DISK, fold_abs, rotate_arc_class

SUITES = ("d2", "r1", "rmoves", "euler", "ses", "les", "kunneth", "prop1",
          "twist", "cutpoint", "ordering")

# names consumed by the corpus-mode rmoves and kunneth suites
CORPUS_MOVE_PAIRS = (
    ("r2_pair_a", "r2_pair_b"),
    ("r3_pair_a", "r3_pair_b"),
    ("ann_r2", "core2"),
)

TOR_SHIFT_NOTE = (
    "Tor summands are placed two i-steps above the tensor summands: one "
    "homological step for a degree -2 differential. The one-step reading "
    "lands in strata of the wrong parity, which are empty; the trefoil "
    "pair computation pins the chosen shift."
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    locus: str = ""
    message: str = ""

    def __post_init__(self):
        if not self.ok and not self.locus:
            raise ValueError("failing checks must name a locus")


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: tuple
    seconds: float
    notes: tuple = ()

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return tuple(c for c in self.checks if not c.ok)

    def pretty(self):
        lines = [f"suite {self.suite}: "
                 f"{'PASS' if self.passed else 'FAIL'} "
                 f"({len(self.checks)} checks, {self.seconds:.2f}s)"]
        for c in self.checks:
            if c.ok:
                tail = f"  ({c.message})" if c.message else ""
                lines.append(f"  ok   {c.name}{tail}")
            else:
                lines.append(f"  FAIL {c.name} @ {c.locus}: {c.message}")
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)

    def to_obj(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "seconds": self.seconds,
            "checks": [
                {"name": c.name, "ok": c.ok, "locus": c.locus,
                 "message": c.message}
                for c in self.checks
            ],
            "notes": list(self.notes),
        }


def thread_count():
    """Worker bound from ``SKEINCAT_THREADS``; defaults to the CPU count."""
    env = os.environ.get("SKEINCAT_THREADS")
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            n = 0
        if n < 1:
            raise ValueError("SKEINCAT_THREADS must be an integer >= 1")
        return n
    return min(8, os.cpu_count() or 1)


def _map_ordered(fn, items):
    n = thread_count()
    if n == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


def _flat(results):
    out = []
    for r in results:
        out.extend(r if isinstance(r, list) else [r])
    return out


def _suite_d2(items, seed, from_corpus):
    def one(pair):
        name, d = pair
        bad = verify_d2(state_complex(d))
        if bad:
            return CheckResult(f"d2 {name}", False, f"{name} strata {bad}",
                               "d o d != 0")
        return CheckResult(f"d2 {name}", True)

    return _flat(_map_ordered(one, items)), ()


def _kink_site(d):
    if d.segments:
        return d.segments[0].id
    if d.free_loops:
        return 0
    return None


def _suite_r1(items, seed, from_corpus):
    def one(pair):
        name, d = pair
        where = _kink_site(d)
        if where is None:
            return CheckResult(f"r1 {name}", True, message="empty diagram, skipped")
        base = homology(d)
        out = []
        neg = homology(add_negative_kink(d, where))
        out.append(CheckResult(
            f"r1 {name} negative kink", equal_tables(neg, shift_table(base, 1, 3)),
            name, "table does not shift by (1, 3)"))
        pos = homology(add_positive_kink(d, where))
        out.append(CheckResult(
            f"r1 {name} positive kink", equal_tables(pos, shift_table(base, -1, -3)),
            name, "table does not shift by (-1, -3)"))
        return out

    return _flat(_map_ordered(one, items)), ()


def _suite_rmoves(items, seed, from_corpus):
    by_name = dict(items)
    if from_corpus:
        pairs = [(a, b) for a, b in CORPUS_MOVE_PAIRS
                 if a in by_name and b in by_name]
        if not pairs:
            raise ValueError("no curated move pairs among the inputs")
    elif len(items) == 2:
        pairs = [(items[0][0], items[1][0])]
    else:
        raise ValueError("rmoves compares exactly two diagrams, or --corpus")

    def one(pair):
        a, b = pair
        ok = equal_tables(homology(by_name[a]), homology(by_name[b]))
        return CheckResult(f"move pair {a} ~ {b}", ok, f"{a} vs {b}",
                           "tables differ across the move")

    return _flat(_map_ordered(one, pairs)), ()


def _suite_euler(items, seed, from_corpus):
    zero = LaurentPoly.zero()

    def one(pair):
        name, d = pair
        cx = state_complex(d)
        chain = euler_by_stratum(cx)
        hom = euler_by_stratum(homology(cx))
        out = []
        bad = [k for k in set(chain) | set(hom)
               if chain.get(k, zero) != hom.get(k, zero)]
        out.append(CheckResult(
            f"euler chain=homology {name}", not bad,
            f"{name} strata {sorted(bad, key=repr)}" if bad else "",
            "chain- and homology-level Euler characteristics differ"))
        if d.surface.kind in (DISK, ANNULUS):
            rep = euler_vs_bracket(d)
            out.append(CheckResult(
                f"euler bracket {name}", rep.ok,
                f"{name} {rep.mismatches[:3]}" if not rep.ok else "",
                "skein coordinates disagree with Euler characteristics"))
        else:
            out.append(CheckResult(f"euler bracket {name}", True,
                                   message="no bracket on this surface, skipped"))
        return out

    return _flat(_map_ordered(one, items)), ()


def _per_crossing(items, checker, label):
    def one(pair):
        name, d = pair
        if not d.crossings:
            return CheckResult(f"{label} {name}", True,
                               message="no crossings, skipped")
        out = []
        for v in d.crossings:
            rep = checker(d, v)
            msg = "; ".join(f"{loc}: {m}" for loc, m in rep.failures[:2])
            out.append(CheckResult(f"{label} {name} at {v}", rep.ok,
                                   f"{name}@{v}", msg or "exactness failure"))
        return out

    return _flat(_map_ordered(one, items))


def _suite_ses(items, seed, from_corpus):
    return _per_crossing(items, ses_check, "ses"), ()


def _suite_les(items, seed, from_corpus):
    return _per_crossing(items, les_rank_check, "les"), ()


def _suite_kunneth(items, seed, from_corpus):
    by_name = dict(items)
    checks = []

    def split_check(label, d1, d2):
        want = kunneth_predict(homology(d1), homology(d2),
                               d1.surface.marked_points)
        got = homology(tensor(d1, d2))
        return CheckResult(f"kunneth {label}", equal_tables(want, got), label,
                           "split-union table differs from the prediction")

    if from_corpus:
        if "unknot" in by_name and "trefoil" in by_name:
            checks.append(split_check("unknot x trefoil", by_name["unknot"],
                                      by_name["trefoil"]))
        if "trefoil" in by_name:
            checks.append(split_check("trefoil x trefoil", by_name["trefoil"],
                                      by_name["trefoil"]))
            opened = cut(by_name["trefoil"], by_name["trefoil"].segments[0].id)
            want = kunneth_predict_glued(homology(opened), homology(opened))
            got = homology(reduced_tensor(opened, opened))
            checks.append(CheckResult(
                "kunneth glued trefoil", equal_tables(want, got),
                "cut trefoil x1 cut trefoil",
                "glued table differs from the prediction"))
        if not checks:
            raise ValueError("corpus kunneth needs the unknot and trefoil entries")
    elif len(items) == 2:
        checks.append(split_check(f"{items[0][0]} x {items[1][0]}",
                                  items[0][1], items[1][1]))
    else:
        raise ValueError("kunneth compares exactly two diagrams, or --corpus")

    return checks, (TOR_SHIFT_NOTE,)


def _suite_prop1(items, seed, from_corpus):
    ann = [(n, d) for n, d in items if d.surface.kind == ANNULUS]

    def one(pair):
        name, d = pair
        t = homology(d)
        bad = []
        for (i, j, s, b), g in t.entries.items():
            other = t.entries.get((i, j, fold_abs(s), b))
            if other != g:
                bad.append((i, j, s, b))
        return CheckResult(f"fold {name}", not bad,
                           f"{name} {sorted(bad)[:3]}" if bad else "",
                           "stratum differs from its folded partner")

    notes = () if ann else ("no annulus diagrams among the inputs",)
    return _flat(_map_ordered(one, ann)), notes


def _suite_twist(items, seed, from_corpus):
    pointed = [(n, d) for n, d in items
               if d.surface.kind == DISK and d.surface.marked_points]

    def one(pair):
        name, d = pair
        n = d.surface.marked_points
        base = homology(d)
        tw = homology(twist(d))
        want = {(i, j, s, rotate_arc_class(b, n)): g
                for (i, j, s, b), g in base.entries.items()}
        out = [CheckResult(
            f"twist rotates strata {name}", tw.entries == want, name,
            "twisted table is not the rotated table")]
        full = d
        for _ in range(n):
            full = twist(full)
        out.append(CheckResult(
            f"twist period {name}", full == d, name,
            "full revolution does not return the diagram"))
        return out

    notes = () if pointed else ("no marked disk diagrams among the inputs",)
    return _flat(_map_ordered(one, pointed)), notes


def _suite_cutpoint(items, seed, from_corpus):
    closed = [(n, d) for n, d in items
              if d.surface.kind == DISK and not d.surface.marked_points]

    def one(pair):
        name, d = pair
        sites = [s.id for s in d.segments] + list(range(len(d.free_loops)))
        if not sites:
            return CheckResult(f"cutpoint {name}", True,
                               message="empty diagram, skipped")
        tables = [(w, homology(cut(d, w))) for w in sites]
        base = tables[0][1]
        bad = [w for w, t in tables[1:] if not equal_tables(t, base)]
        return CheckResult(
            f"cutpoint {name}", not bad,
            f"{name} at {bad[:3]}" if bad else "",
            "cut tables differ across cut points",
            ) if bad else CheckResult(
            f"cutpoint {name}", True,
            message=f"{len(sites)} cut points coincide")

    notes = () if closed else ("no closed disk diagrams among the inputs",)
    return _flat(_map_ordered(one, closed)), notes


def _suite_ordering(items, seed, from_corpus):
    def one(pair):
        name, d = pair
        if d.n_crossings < 2:
            return CheckResult(f"ordering {name}", True,
                               message="fewer than two crossings, skipped")
        rng = random.Random(f"{seed}:{name}")
        base = homology(d)
        for k in range(5):
            order = list(d.crossings)
            rng.shuffle(order)
            if not equal_tables(homology(reorder_crossings(d, tuple(order))),
                                base):
                return CheckResult(f"ordering {name}", False,
                                   f"{name} order {order}",
                                   "table changed under crossing reordering")
        return CheckResult(f"ordering {name}", True)

    return _flat(_map_ordered(one, items)), ()


_RUNNERS = {
    "d2": _suite_d2,
    "r1": _suite_r1,
    "rmoves": _suite_rmoves,
    "euler": _suite_euler,
    "ses": _suite_ses,
    "les": _suite_les,
    "kunneth": _suite_kunneth,
    "prop1": _suite_prop1,
    "twist": _suite_twist,
    "cutpoint": _suite_cutpoint,
    "ordering": _suite_ordering,
}


def run_suite(suite, items, seed=0, from_corpus=False):
    """Run one named suite over ``(name, diagram)`` pairs."""
    try:
        fn = _RUNNERS[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from "
                         f"{', '.join(SUITES)}") from None
    t0 = time.perf_counter()
    checks, notes = fn(tuple(items), seed, from_corpus)
    return VerificationReport(suite, tuple(checks),
                              time.perf_counter() - t0, tuple(notes))

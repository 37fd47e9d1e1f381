"""Command line front end: compute, verify, construct, generate.

Exit codes: 0 success, 1 a verification suite failed, 2 malformed
input or usage (bad JSON shape, bad word, bad flags), 3 a well-formed
diagram violating an invariant or an operation precondition, 4
combinatorial data no embedded curve system realizes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .algebra import close, cut, reduced_tensor, tensor, twist
from .bracket import bracket
from .corpus import iter_corpus
from .diagram import parse_diagram, serialize_diagram
from .errors import (
    IllTypedWord,
    NonRealizable,
    SchemaError,
    SkeincatError,
)
from .homology import homology, parse_coeff, table_sort_key
from .states import state_complex, state_count
from .surfaces import ANNULUS, DISK, psi_to_json
from .verify import SUITES, run_suite
from .words import PLAT, TRACE, generate_from_word, random_annulus_braid, random_disk_word

EXIT_VERIFY_FAIL = 1
EXIT_SCHEMA = 2
EXIT_VALIDATION = 3
EXIT_NONREALIZABLE = 4

_CLOSURES = {"none": None, "trace": TRACE, "plat": PLAT}


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(path):
    return parse_diagram(_read_text(path))


def _name_of(path):
    return "stdin" if path == "-" else Path(path).stem


def _emit(text, out):
    if out and out != "-":
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_diagram(d, out):
    _emit(serialize_diagram(d, indent=2) + "\n", out)


def cmd_homology(args):
    parse_coeff(args.coeff)
    t = homology(_load(args.path), args.coeff)
    if args.json:
        print(t.to_json(indent=2))
    else:
        print(t.pretty())
    return 0


def cmd_verify(args):
    if args.corpus:
        items = list(iter_corpus())
    else:
        if not args.paths:
            raise ValueError("verify needs diagram paths or --corpus")
        items = [(_name_of(p), _load(p)) for p in args.paths]
    rep = run_suite(args.suite, items, seed=args.seed, from_corpus=args.corpus)
    if args.json:
        print(json.dumps(rep.to_obj(), indent=2))
    else:
        print(rep.pretty())
    return 0 if rep.passed else EXIT_VERIFY_FAIL


def cmd_gen(args):
    kind = ANNULUS if args.surface == "annulus" else DISK
    if args.word is not None:
        if args.strands is None:
            raise ValueError("--word needs --strands")
        closure = args.close
        if closure is None and kind == ANNULUS:
            closure = "trace"
        d = generate_from_word(args.word, args.strands, kind,
                               _CLOSURES[closure or "none"])
    else:
        rng = random.Random(args.seed)
        if kind == ANNULUS:
            word, strands = random_annulus_braid(rng, max_crossings=args.random)
            d = generate_from_word(word, strands, ANNULUS, TRACE)
        else:
            word, strands, closure = random_disk_word(rng, max_crossings=args.random)
            d = generate_from_word(word, strands, DISK, closure)
    _emit_diagram(d, args.out)
    return 0


def cmd_info(args):
    d = _load(args.path)
    cx = state_complex(d)
    strata = sorted(cx.strata.items(), key=lambda kv: table_sort_key((0,) + kv[0]))
    if args.json:
        obj = {
            "surface": {"kind": d.surface.kind,
                        "marked_points": d.surface.marked_points},
            "crossings": d.n_crossings,
            "segments": len(d.segments),
            "free_loops": len(d.free_loops),
            "states": state_count(d),
            "strata": [
                {"j": j, "s": psi_to_json(s), "b": [list(p) for p in b],
                 "dims": [[i, st.dim(i)] for i in st.degrees()]}
                for (j, s, b), st in strata
            ],
        }
        print(json.dumps(obj, indent=2))
        return 0
    pts = f", {d.surface.marked_points} marked points" if d.surface.marked_points else ""
    print(f"surface: {d.surface.kind}{pts}")
    print(f"crossings: {d.n_crossings}")
    print(f"segments: {len(d.segments)}")
    print(f"free loops: {len(d.free_loops)}")
    print(f"states: {state_count(d)}")
    print(f"strata: {len(cx.strata)}")
    for (j, s, b), st in strata:
        dims = " ".join(f"i={i}:{st.dim(i)}" for i in st.degrees())
        print(f"  j={j} s=[{_s_brief(s)}] b=[{_b_brief(b)}]  {dims}")
    return 0


def _s_brief(s):
    return " ".join(f"{cls}:{c:+d}" for cls, c in s)


def _b_brief(b):
    return " ".join(f"{a}-{c}" for a, c in b)


def cmd_tensor(args):
    _emit_diagram(tensor(_load(args.left), _load(args.right)), args.out)
    return 0


def cmd_rtensor(args):
    d = reduced_tensor(_load(args.left), _load(args.right), args.p1, args.p2)
    _emit_diagram(d, args.out)
    return 0


def cmd_twist(args):
    d = _load(args.path)
    for _ in range(args.times):
        d = twist(d)
    _emit_diagram(d, args.out)
    return 0


def _parse_arcs(text):
    if not text.strip():
        return ()
    pairs = []
    for bit in text.split(","):
        a, _, c = bit.partition("-")
        try:
            pairs.append((int(a), int(c)))
        except ValueError:
            raise ValueError(f"bad arc {bit!r}; expected like 0-3,1-2") from None
    return tuple(pairs)


def cmd_close(args):
    d = close(_load(args.path), _parse_arcs(args.arcs))
    _emit_diagram(d, args.out)
    return 0


def cmd_cut(args):
    where = int(args.at) if args.at.lstrip("-").isdigit() else args.at
    _emit_diagram(cut(_load(args.path), where), args.out)
    return 0


def cmd_bracket(args):
    v = bracket(_load(args.path))
    if args.json:
        print(json.dumps(v.to_obj(), indent=2))
    else:
        print(v.pretty())
    return 0


def _build_parser():
    p = argparse.ArgumentParser(
        prog="skeincat",
        description="Stratified homology and bracket coordinates of tangle diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        q = sub.add_parser(name, help=help_)
        q.set_defaults(fn=fn)
        return q

    q = add("homology", cmd_homology, "compute the homology table of a diagram")
    q.add_argument("path", help="diagram JSON file, or - for stdin")
    q.add_argument("--coeff", default="z", help="z, q, or p:<prime>")
    q.add_argument("--json", action="store_true", help="machine-readable output")

    q = add("verify", cmd_verify, "run a verification suite")
    q.add_argument("suite", choices=SUITES)
    q.add_argument("paths", nargs="*", help="diagram JSON files")
    q.add_argument("--corpus", action="store_true", help="run on the shipped corpus")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--json", action="store_true")

    q = add("gen", cmd_gen, "generate a diagram from a word or at random")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", help="comma-separated ops, e.g. x1+,cup2,cap1")
    g.add_argument("--random", type=int, metavar="N", help="random word, at most N crossings")
    q.add_argument("--strands", type=int, help="initial strand count for --word")
    q.add_argument("--close", choices=("none", "trace", "plat"),
                   help="closure; annulus words default to trace")
    q.add_argument("--surface", choices=("disk", "annulus"), default="disk")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("-o", "--out", help="output file (default stdout)")

    q = add("info", cmd_info, "print counts and per-stratum dimensions")
    q.add_argument("path")
    q.add_argument("--json", action="store_true")

    q = add("tensor", cmd_tensor, "side-by-side union of two disk tangles")
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("-o", "--out")

    q = add("rtensor", cmd_rtensor, "glue two disk tangles at a shared point")
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("--p1", type=int, help="gluing point on the left factor")
    q.add_argument("--p2", type=int, help="gluing point on the right factor")
    q.add_argument("-o", "--out")

    q = add("twist", cmd_twist, "rotate the boundary marking by one point")
    q.add_argument("path")
    q.add_argument("--times", type=int, default=1)
    q.add_argument("-o", "--out")

    q = add("close", cmd_close, "close a tangle with a boundary matching")
    q.add_argument("path")
    q.add_argument("--arcs", required=True, help="matching like 0-3,1-2")
    q.add_argument("-o", "--out")

    q = add("cut", cmd_cut, "cut a closed diagram open along a strand")
    q.add_argument("path")
    q.add_argument("--at", required=True,
                   help="segment id, or a free-loop index if all digits")
    q.add_argument("-o", "--out")

    q = add("bracket", cmd_bracket, "skein-module coordinates of a diagram")
    q.add_argument("path")
    q.add_argument("--json", action="store_true")

    return p


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (SchemaError, IllTypedWord) as e:
        print(f"skeincat: {e}", file=sys.stderr)
        return EXIT_SCHEMA
    except NonRealizable as e:
        print(f"skeincat: {e}", file=sys.stderr)
        return EXIT_NONREALIZABLE
    except SkeincatError as e:
        print(f"skeincat: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as e:
        print(f"skeincat: {e}", file=sys.stderr)
        return EXIT_SCHEMA
    except OSError as e:
        print(f"skeincat: {e}", file=sys.stderr)
        return EXIT_SCHEMA


if __name__ == "__main__":
    raise SystemExit(main())

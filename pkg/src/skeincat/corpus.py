"""The shipped example diagrams.

Each entry is produced by a builder here and frozen as JSON under
``skeincat/corpus/``; command line tools consume the files, tests
consume the builders, and a regression test keeps the two in sync.
The Reidemeister pairs are hand-curated: move detection is out of
scope, so diagrams related by a single move are stored explicitly and
the verifier checks their tables agree.
"""

from __future__ import annotations

from pathlib import Path

from .diagram import Segment, TangleDiagram, parse_diagram, serialize_diagram
from .surfaces import ANNULUS, DISK, TORUS, MarkedSurface
from .words import TRACE, generate_from_word


def _word(text, strands, kind=DISK, close=None):
    return lambda: generate_from_word(text, strands, kind, close)


def _unknot():
    return TangleDiagram(MarkedSurface(DISK), free_loops=((),))


def _torus_11():
    return TangleDiagram(MarkedSurface(TORUS), free_loops=((1, 1),))


def _torus_cross():
    # a (1,0) strand over a (0,1) strand
    return TangleDiagram(
        MarkedSurface(TORUS),
        ("v",),
        (
            Segment("s1", (("c", "v", 0), ("c", "v", 2)), (1, 0)),
            Segment("s2", (("c", "v", 1), ("c", "v", 3)), (0, 1)),
        ),
    )


BUILDERS = {
    "unknot": _unknot,
    "unknot_kink_neg": _word("x1-", 2, close=TRACE),
    "unknot_kink_pos": _word("x1+", 2, close=TRACE),
    "twotangle": _word("x1+", 2),
    "hopf": _word("x1-,x1-", 2, close=TRACE),
    "trefoil": _word("x1-,x1-,x1-", 2, close=TRACE),
    "trefoil_mirror": _word("x1+,x1+,x1+", 2, close=TRACE),
    "fig8": _word("x1+,x2-,x1+,x2-", 3, close=TRACE),
    "r2_pair_a": _word("x1+,x1-", 2),
    "r2_pair_b": _word("", 2),
    "r3_pair_a": _word("x1+,x2+,x1+", 3),
    "r3_pair_b": _word("x2+,x1+,x2+", 3),
    "core": _word("", 1, ANNULUS, TRACE),
    "core2": _word("", 2, ANNULUS, TRACE),
    "ann_braid": _word("x1-", 2, ANNULUS, TRACE),
    "ann_braid2": _word("x1-,x1-", 2, ANNULUS, TRACE),
    "ann_r2": _word("x1+,x1-", 2, ANNULUS, TRACE),
    "torus_11": _torus_11,
    "torus_cross": _torus_cross,
}

CORPUS_NAMES = tuple(BUILDERS)

# diagrams related by one Reidemeister move, same homology table
MOVE_PAIRS = (
    ("r2_pair_a", "r2_pair_b"),
    ("r3_pair_a", "r3_pair_b"),
    ("ann_r2", "core2"),
)


def build_diagram(name):
    """Construct a corpus diagram from scratch, without file access."""
    try:
        make = BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown corpus diagram {name!r}") from None
    return make()


def corpus_dir():
    """Directory holding the shipped JSON files."""
    return Path(__file__).parent / "corpus"


def corpus_path(name):
    if name not in BUILDERS:
        raise ValueError(f"unknown corpus diagram {name!r}")
    return corpus_dir() / f"{name}.json"


def load_diagram(name):
    """Read one shipped corpus file back as a diagram."""
    return parse_diagram(corpus_path(name).read_text(encoding="utf-8"))


def iter_corpus():
    """Yield ``(name, diagram)`` for every shipped file, in fixed order."""
    for name in CORPUS_NAMES:
        yield name, load_diagram(name)


def write_corpus(dirpath):
    """Write every corpus diagram as JSON under ``dirpath``.

    Returns the paths written.  The shipped files are exactly this
    output, which the sync test enforces.
    """
    dirpath = Path(dirpath)
    dirpath.mkdir(parents=True, exist_ok=True)
    out = []
    for name in CORPUS_NAMES:
        path = dirpath / f"{name}.json"
        path.write_text(serialize_diagram(build_diagram(name), indent=2) + "\n",
                        encoding="utf-8")
        out.append(path)
    return out

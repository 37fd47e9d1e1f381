"""Stratified homology and Kauffman bracket coordinates for tangles in
thickened surfaces.

The package computes a Khovanov-type invariant of framed unoriented
tangle diagrams drawn on a disk, an annulus, or a torus.  The chain
groups are spanned by labelled smoothings and split into strata indexed
by a quantum grading, a vector of essential curve classes, and a
boundary matching; the differential counts incident label transitions.
"""

from .errors import (
    SkeincatError,
    SchemaError,
    ValidationError,
    NonRealizable,
    IllTypedWord,
    UnknownCrossing,
    UnknownSegment,
    SurfaceMismatch,
    MissingSharedPoint,
    SizeMismatch,
    NoMarkedPoints,
    NotAComplex,
)
from .surfaces import MarkedSurface, DISK, ANNULUS, TORUS, CORE, classify_loop
from .laurent import LaurentPoly
from .diagram import (
    Segment,
    TangleDiagram,
    resolve,
    splice_crossing,
    skein_triple,
    add_negative_kink,
    add_positive_kink,
    mirror,
    reorder_crossings,
    parse_diagram,
    serialize_diagram,
)
from .words import parse_word, word_text, generate_from_word
from .states import State, Grading, state_complex, verify_d2, state_count
from .homology import (
    HomologyGroup,
    HomologyTable,
    homology,
    shift_table,
    equal_tables,
    euler_by_stratum,
    euler_characteristic,
)
from .bracket import BasisElement, SkeinVector, bracket, euler_vs_bracket
from .algebra import tensor, reduced_tensor, twist, close, cut
from .kunneth import (
    invariant_factors,
    tensor_group,
    tor_group,
    kunneth_predict,
    kunneth_predict_glued,
)
from .exactness import ExactnessReport, ses_check, les_rank_check
from .corpus import CORPUS_NAMES, build_diagram, load_diagram, iter_corpus
from .verify import CheckResult, VerificationReport, SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "SkeincatError",
    "SchemaError",
    "ValidationError",
    "NonRealizable",
    "IllTypedWord",
    "UnknownCrossing",
    "UnknownSegment",
    "SurfaceMismatch",
    "MissingSharedPoint",
    "SizeMismatch",
    "NoMarkedPoints",
    "NotAComplex",
    "MarkedSurface",
    "DISK",
    "ANNULUS",
    "TORUS",
    "CORE",
    "classify_loop",
    "LaurentPoly",
    "Segment",
    "TangleDiagram",
    "resolve",
    "splice_crossing",
    "skein_triple",
    "add_negative_kink",
    "add_positive_kink",
    "mirror",
    "reorder_crossings",
    "parse_diagram",
    "serialize_diagram",
    "parse_word",
    "word_text",
    "generate_from_word",
    "State",
    "Grading",
    "state_complex",
    "verify_d2",
    "state_count",
    "HomologyGroup",
    "HomologyTable",
    "homology",
    "shift_table",
    "equal_tables",
    "euler_by_stratum",
    "euler_characteristic",
    "BasisElement",
    "SkeinVector",
    "bracket",
    "euler_vs_bracket",
    "tensor",
    "reduced_tensor",
    "twist",
    "close",
    "cut",
    "invariant_factors",
    "tensor_group",
    "tor_group",
    "kunneth_predict",
    "kunneth_predict_glued",
    "ExactnessReport",
    "ses_check",
    "les_rank_check",
    "CORPUS_NAMES",
    "build_diagram",
    "load_diagram",
    "iter_corpus",
    "CheckResult",
    "VerificationReport",
    "SUITES",
    "run_suite",
    "__version__",
]

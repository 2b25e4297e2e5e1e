"""Exact-arithmetic toolkit for doubly symmetric polygonal knots.

A closed polygon that is setwise invariant under the half-turns about the
x- and y-axes (and hence the z-axis) projects to three characteristic
knot diagrams.  This package builds such polygons from quarter arcs,
validates them exactly over the rationals, counts the crossings of the
three projections, computes diagram invariants for identification, and
searches randomly for new low-crossing-sum embeddings.
"""

from .chords import ChordDiagram, check_chord_symmetry, chords, simultaneous_chords
from .diagram import (
    Crossing,
    Diagram,
    GeneralPositionViolation,
    InvalidEmbeddingError,
    TripleCount,
    parity_check,
    pd_code,
    project_and_count,
    triple_count,
)
from .families import (
    BoundRecord,
    TwistSpec,
    builtin_quarter,
    sim_lower_bound,
    twist_quarter_case,
    twist_quarter_unified,
    verify_twist_table,
)
from .geometry import (
    Axis,
    Point2WithDepth,
    Point3,
    classify_intersection,
    format_coordinate,
    half_turn,
    parse_coordinate,
    project,
    rays_alternate,
)
from .invariants import (
    Fingerprint,
    LaurentPoly,
    alexander,
    fingerprint,
    identify,
    jones,
    simplify,
)
from .polygon import (
    KnotEmbedding,
    QuarterArc,
    ValidationReport,
    load_quarter,
    save_quarter,
    symmetrize,
    validate_embedding,
)
from .search import CatalogEntry, SearchConfig, SearchStats, run_search, sample_quarter

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BoundRecord",
    "CatalogEntry",
    "ChordDiagram",
    "Crossing",
    "Diagram",
    "Fingerprint",
    "GeneralPositionViolation",
    "InvalidEmbeddingError",
    "KnotEmbedding",
    "LaurentPoly",
    "Point2WithDepth",
    "Point3",
    "QuarterArc",
    "SearchConfig",
    "SearchStats",
    "TripleCount",
    "TwistSpec",
    "ValidationReport",
    "alexander",
    "builtin_quarter",
    "check_chord_symmetry",
    "chords",
    "classify_intersection",
    "fingerprint",
    "format_coordinate",
    "half_turn",
    "identify",
    "jones",
    "load_quarter",
    "parity_check",
    "parse_coordinate",
    "pd_code",
    "project",
    "project_and_count",
    "rays_alternate",
    "run_search",
    "sample_quarter",
    "save_quarter",
    "sim_lower_bound",
    "simplify",
    "simultaneous_chords",
    "symmetrize",
    "triple_count",
    "twist_quarter_case",
    "twist_quarter_unified",
    "validate_embedding",
    "verify_twist_table",
]

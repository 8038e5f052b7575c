"""3-covering validity, minimum-cover search and the structural theorem checks."""

from cover_energy.covering.models import (
    CoverKind,
    CoverSet,
    EdgeClass,
    EdgeClassification,
    TheoremReport,
    VertexCase,
    VertexCaseKind,
    Witness,
    WitnessKind,
)
from cover_energy.covering.search import (
    is_2_covering,
    is_3_covering,
    min_2_covering_bruteforce,
    min_2_covering_exact,
    min_3_covering_bruteforce,
    min_3_covering_exact,
    min_covering_bruteforce,
    min_covering_exact,
)
from cover_energy.covering.theorems import (
    characterization_holds,
    check_characterization,
    check_distance_theorems,
    check_vertex_cases,
    classify_noncovered_edges,
    classify_vertex,
    classify_vertices,
)

__all__ = [
    "CoverKind",
    "CoverSet",
    "EdgeClass",
    "EdgeClassification",
    "TheoremReport",
    "VertexCase",
    "VertexCaseKind",
    "Witness",
    "WitnessKind",
    "characterization_holds",
    "check_characterization",
    "check_distance_theorems",
    "check_vertex_cases",
    "classify_noncovered_edges",
    "classify_vertex",
    "classify_vertices",
    "is_2_covering",
    "is_3_covering",
    "min_2_covering_bruteforce",
    "min_2_covering_exact",
    "min_3_covering_bruteforce",
    "min_3_covering_exact",
    "min_covering_bruteforce",
    "min_covering_exact",
]

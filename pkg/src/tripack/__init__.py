"""Equal-size minimum triangle transversals and maximum triangle packings
for tripartite graphs with two complete sides."""

from .graph import (
    InvalidGraphError,
    NotBilaterallyComplete,
    Orientation,
    PreconditionError,
    Triangle,
    TripartiteGraph,
    ValidationReport,
    detect_orientation,
    enumerate_triangles,
    is_packing,
    is_transversal,
    validate,
)
from .solver import Certificate, solve

__all__ = [
    "Certificate",
    "InvalidGraphError",
    "NotBilaterallyComplete",
    "Orientation",
    "PreconditionError",
    "Triangle",
    "TripartiteGraph",
    "ValidationReport",
    "detect_orientation",
    "enumerate_triangles",
    "is_packing",
    "is_transversal",
    "solve",
    "validate",
]

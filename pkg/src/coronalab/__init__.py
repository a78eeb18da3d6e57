"""coronalab: exact colorings and domination-type parameters of corona products.

The top level re-exports the graph model and the most used solvers; the
full APIs live in :mod:`coronalab.coloring`, :mod:`coronalab.domination`
and :mod:`coronalab.harness`.
"""

from .coloring import (
    BoundPair,
    ChromaticResult,
    ColorAssignment,
    chromatic_number,
    corona_dist_bounds,
    distance_k_chromatic,
)
from .config import DEFAULT_CAPS, Caps
from .dimacs import format_dimacs, parse_dimacs, read_dimacs, write_dimacs
from .errors import (
    ConstructionError,
    CoronaLabError,
    GraphError,
    GraphFormatError,
    InapplicableError,
    MalformedWitnessError,
    PreconditionError,
    SizeLimitError,
)
from .families import FamilySpec, generate
from .graph import CoronaLabeling, Graph, build_graph, corona, diameter, distances, girth, power

__version__ = "0.1.0"

__all__ = [
    "BoundPair",
    "Caps",
    "ChromaticResult",
    "ColorAssignment",
    "ConstructionError",
    "CoronaLabError",
    "CoronaLabeling",
    "DEFAULT_CAPS",
    "FamilySpec",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "InapplicableError",
    "MalformedWitnessError",
    "PreconditionError",
    "SizeLimitError",
    "build_graph",
    "chromatic_number",
    "corona",
    "corona_dist_bounds",
    "diameter",
    "distance_k_chromatic",
    "distances",
    "format_dimacs",
    "generate",
    "girth",
    "parse_dimacs",
    "power",
    "read_dimacs",
    "write_dimacs",
]

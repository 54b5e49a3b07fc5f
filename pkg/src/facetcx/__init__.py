"""Exact cover-complexity solver for abstract simplicial complexes.

The library measures how far a complex is from admitting a facet or
strict simplicial map into a target: the minimum number of subcomplexes
the source must be split into so that each part admits such a map.  It
ships an exact solver with certificates, chromatic numbers, theorem
bounds, exhaustive reference oracles, and a randomized property
harness.
"""

from .coloring import (
    ChromaticResult,
    Coloring,
    block_coloring,
    chromatic_number,
    graph_chromatic_number,
    product_coloring,
    pullback_coloring,
    strict_chromatic_number,
)
from .complexes import (
    EMPTY,
    Complex,
    GraphView,
    Metrics,
    boundary_complex,
    build_complex,
    closure,
    complete_complex,
    facet_graph,
    generate,
    graph_as_complex,
    metrics,
    relabel,
    skeleton,
    underlying_graph,
    union,
)
from .complexity import (
    INFINITY,
    BoundReport,
    ComplexityQuery,
    ComplexityResult,
    Cover,
    CoverGroup,
    DisjointDecomposition,
    FacetCapError,
    bounds,
    check_cover,
    compute,
    disjoint_decompose,
    required_facet_indices,
)
from .homsearch import (
    FeasibilityCache,
    SearchLimits,
    SearchProblem,
    SearchResult,
    UndecidedError,
    find_map,
    group_feasible,
)
from .maps import MapClass, VertexMap, classify, compose, image_inverse
from .oracle import (
    OracleLimits,
    brute_force_chromatic,
    brute_force_cover_complexity,
    brute_force_map_search,
)
from .scx import ScxError, parse_map, parse_scx, serialize_map, serialize_scx
from .verify import VerifyConfig, VerifyReport, replay_bundle, run_verify

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ChromaticResult",
    "Coloring",
    "Complex",
    "ComplexityQuery",
    "ComplexityResult",
    "Cover",
    "CoverGroup",
    "DisjointDecomposition",
    "EMPTY",
    "FacetCapError",
    "FeasibilityCache",
    "GraphView",
    "INFINITY",
    "MapClass",
    "Metrics",
    "OracleLimits",
    "ScxError",
    "SearchLimits",
    "SearchProblem",
    "SearchResult",
    "UndecidedError",
    "VertexMap",
    "VerifyConfig",
    "VerifyReport",
    "block_coloring",
    "boundary_complex",
    "bounds",
    "brute_force_chromatic",
    "brute_force_cover_complexity",
    "brute_force_map_search",
    "build_complex",
    "check_cover",
    "chromatic_number",
    "classify",
    "closure",
    "complete_complex",
    "compose",
    "compute",
    "disjoint_decompose",
    "facet_graph",
    "find_map",
    "generate",
    "graph_as_complex",
    "graph_chromatic_number",
    "group_feasible",
    "image_inverse",
    "metrics",
    "parse_map",
    "parse_scx",
    "product_coloring",
    "pullback_coloring",
    "relabel",
    "replay_bundle",
    "required_facet_indices",
    "run_verify",
    "serialize_map",
    "serialize_scx",
    "skeleton",
    "strict_chromatic_number",
    "underlying_graph",
    "union",
]

"""Built-in sample complexes, maps, and colorings.

These small instances exercise every interesting behaviour of the
library: a two-winged complex whose left wing is filled and right wing
is hollow, a filled triangle with a pendant edge, the cover parts that
relate them, a vee/edge pair whose overlapping union jumps in
complexity, and a hollow triangle with an extra isolated point.  Each
is embedded as .scx text so loading them also exercises the parser.
"""

from __future__ import annotations

from functools import cache

from .coloring import Coloring
from .complexes import Complex
from .maps import VertexMap
from .scx import parse_map, parse_scx

SCX_TEXTS: dict[str, str] = {
    # Filled triangle a b c joined at c to a hollow triangle c d e.
    "shaded_bowtie": """\
name shaded_bowtie
v a b c d e
f a b c
f c d
f c e
f d e
""",
    # Filled triangle a' b' c' with the pendant edge c' d'.
    "tailed_triangle": """\
name tailed_triangle
v a' b' c' d'
f a' b' c'
f c' d'
""",
    # The bowtie minus the edge c e: filled wing plus the path c-d-e.
    "bowtie_main_part": """\
name bowtie_main_part
v a b c d e
f a b c
f c d
f d e
""",
    # The single remaining edge of the bowtie.
    "bowtie_edge_part": """\
name bowtie_edge_part
v c e
f c e
""",
    # Two edges out of vertex 1; unions with base_edge into a hollow triangle.
    "vee_path": """\
name vee_path
v 1 2 3
f 1 2
f 1 3
""",
    "base_edge": """\
name base_edge
v 2 3
f 2 3
""",
    # Hollow triangle with one extra isolated point.
    "hollow_triangle_plus_point": """\
name hollow_triangle_plus_point
v 1 2 3 *
f 1 2
f 1 3
f 2 3
f *
""",
}

# A dimension-preserving map off the bowtie that is not facet-preserving:
# it folds the hollow wing back onto faces of the filled target triangle.
FOLD_MAP_TEXT = """\
m a a'
m b b'
m c c'
m d b'
m e a'
"""

# Facet-preserving witnesses for the two cover parts of the bowtie.
MAIN_PART_MAP_TEXT = """\
m a a'
m b b'
m c c'
m d d'
m e c'
"""

EDGE_PART_MAP_TEXT = """\
m c c'
m e d'
"""

# Optimal colorings for the two headline complexes.
BOWTIE_COLORING = {"a": 1, "d": 1, "b": 2, "c": 2, "e": 3}
TAILED_TRIANGLE_COLORING = {"a'": 1, "d'": 1, "b'": 2, "c'": 2}


def names() -> tuple[str, ...]:
    return tuple(SCX_TEXTS)


@cache
def load(name: str) -> Complex:
    try:
        text = SCX_TEXTS[name]
    except KeyError:
        raise KeyError(
            f"unknown sample {name!r}; available: {', '.join(SCX_TEXTS)}"
        ) from None
    return parse_scx(text)


@cache
def fold_map() -> VertexMap:
    return parse_map(FOLD_MAP_TEXT, load("shaded_bowtie"), load("tailed_triangle"))


@cache
def main_part_map() -> VertexMap:
    return parse_map(
        MAIN_PART_MAP_TEXT, load("bowtie_main_part"), load("tailed_triangle")
    )


@cache
def edge_part_map() -> VertexMap:
    return parse_map(
        EDGE_PART_MAP_TEXT, load("bowtie_edge_part"), load("tailed_triangle")
    )


def bowtie_coloring() -> Coloring:
    return Coloring.from_dict(load("shaded_bowtie"), BOWTIE_COLORING)


def tailed_triangle_coloring() -> Coloring:
    return Coloring.from_dict(load("tailed_triangle"), TAILED_TRIANGLE_COLORING)

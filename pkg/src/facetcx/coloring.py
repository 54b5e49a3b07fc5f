"""Chromatic numbers of complexes and graphs, with coloring combinators.

A coloring of a complex is valid when no facet of size >= 2 is
monochromatic; a coloring of a graph is a proper coloring.  The empty
subject has chromatic number 0; a complex whose facets are all
singletons has chromatic number 1 (one color offends nothing).

Solvers are exact branch-and-bound searches over the canonical vertex
order with symmetry breaking (the first vertex takes color 1 and color
j+1 is never opened before color j), so the returned witness is
deterministic and uses exactly the optimal number of colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Mapping, Union

from .complexes import Complex, GraphView, _bits, metrics, underlying_graph
from .maps import VertexMap, classify

Subject = Union[Complex, GraphView]


@dataclass(frozen=True)
class Coloring:
    """A validated color assignment on a complex or graph.

    ``assignment`` is aligned with the subject's canonical vertex order
    and uses colors 1..k.  Construction re-checks validity and rejects
    an invalid assignment.
    """

    subject: Subject
    k: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.subject.labels)
        if len(self.assignment) != n:
            raise ValueError("assignment must color every vertex")
        if self.k < 0 or (n > 0 and self.k < 1):
            raise ValueError("k must be positive for a non-empty subject")
        for col in self.assignment:
            if not 1 <= col <= self.k:
                raise ValueError(f"color {col} outside 1..{self.k}")
        bad = _violation(self.subject, self.assignment)
        if bad is not None:
            raise ValueError(f"monochromatic constraint {bad!r}")

    @classmethod
    def from_dict(
        cls, subject: Subject, colors: dict[str, int], k: int | None = None
    ) -> "Coloring":
        missing = [lab for lab in subject.labels if lab not in colors]
        if missing:
            raise ValueError(f"no color for vertices {missing!r}")
        extra = sorted(set(colors) - set(subject.labels))
        if extra:
            raise ValueError(f"colors given for unknown vertices {extra!r}")
        assignment = tuple(colors[lab] for lab in subject.labels)
        if k is None:
            k = max(assignment, default=0)
        return cls(subject, k, assignment)

    @property
    def surjective(self) -> bool:
        return len(set(self.assignment)) == self.k

    def color_of(self, label: str) -> int:
        return self.assignment[self.subject.labels.index(label)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.subject.labels, self.assignment))


def _violation(subject: Subject, colors: tuple[int, ...]) -> tuple[str, ...] | None:
    if isinstance(subject, Complex):
        for f in subject.facets:
            mem = list(_bits(f))
            if len(mem) >= 2 and len({colors[i] for i in mem}) == 1:
                return subject.members(f)
    else:
        idx = {lab: i for i, lab in enumerate(subject.labels)}
        for u, v in subject.edges:
            if colors[idx[u]] == colors[idx[v]]:
                return (u, v)
    return None


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    witness: Coloring


def _search(n: int, k: int, last_checks: list[list[tuple[list[int], bool]]]):
    """First valid assignment with colors <= k under symmetry breaking.

    ``last_checks[v]`` lists constraints completed by coloring vertex v:
    ``(member_indices, is_edge)`` where members excludes v itself.  A
    complex facet fails when all members share v's color; a graph edge
    fails when its other endpoint shares it.
    """
    colors = [0] * n

    def admissible(v: int, col: int) -> bool:
        for members, _ in last_checks[v]:
            if members and all(colors[u] == col for u in members):
                return False
        return True

    def place(v: int, opened: int) -> bool:
        if v == n:
            return True
        top = min(opened + 1, k)
        for col in range(1, top + 1):
            if admissible(v, col):
                colors[v] = col
                if place(v + 1, max(opened, col)):
                    return True
                colors[v] = 0
        return False

    if place(0, 0):
        return tuple(colors)
    return None


def _constraints(subject: Subject) -> tuple[int, list[list[tuple[list[int], bool]]], bool]:
    if isinstance(subject, Complex):
        n = subject.n
        checks: list[list[tuple[list[int], bool]]] = [[] for _ in range(n)]
        constrained = False
        for f in subject.facets:
            mem = list(_bits(f))
            if len(mem) < 2:
                continue
            constrained = True
            last = max(mem)
            checks[last].append(([i for i in mem if i != last], False))
        return n, checks, constrained
    n = subject.n
    idx = {lab: i for i, lab in enumerate(subject.labels)}
    checks = [[] for _ in range(n)]
    constrained = False
    for u, v in subject.edges:
        constrained = True
        a, b = sorted((idx[u], idx[v]))
        checks[b].append(([a], True))
    return n, checks, constrained


def _chromatic(subject: Subject) -> ChromaticResult:
    n, checks, constrained = _constraints(subject)
    if n == 0:
        return ChromaticResult(0, Coloring(subject, 0, ()))
    if not constrained:
        return ChromaticResult(1, Coloring(subject, 1, (1,) * n))
    for k in range(2, n + 1):
        found = _search(n, k, checks)
        if found is not None:
            return ChromaticResult(k, Coloring(subject, k, found))
    raise AssertionError("n colors always suffice")  # pragma: no cover


def chromatic_number(c: Complex) -> ChromaticResult:
    """Least k such that no facet of size >= 2 is monochromatic."""
    return _chromatic(c)


def graph_chromatic_number(g: GraphView) -> ChromaticResult:
    """Least k admitting a proper coloring of ``g``."""
    return _chromatic(g)


def strict_chromatic_number(c: Complex) -> ChromaticResult:
    """Least k admitting a coloring injective on every simplex.

    Equals the chromatic number of the underlying graph, computed as
    such.
    """
    return graph_chromatic_number(underlying_graph(c))


def block_coloring(c: Complex, graph_witness: Coloring) -> Coloring:
    """Coloring of ``c`` with ceil(n/d) colors from a proper n-coloring
    of the underlying graph, where d is the least facet dimension.

    Grouping the graph colors into blocks of d keeps every facet
    polychromatic: a facet has more than d vertices, so a monochromatic
    facet would put two of them in one graph color class, yet they are
    adjacent.  Requires every facet to have dimension >= 1.
    """
    m = metrics(c)
    if m.min_facet_size is None or m.min_facet_size < 2:
        raise ValueError("block_coloring requires every facet dimension > 0")
    if graph_witness.subject != underlying_graph(c):
        raise ValueError("witness must color the underlying graph")
    d = m.min_facet_size - 1
    blocks = ceil(graph_witness.k / d)
    assignment = tuple((col - 1) // d + 1 for col in graph_witness.assignment)
    return Coloring(c, blocks, assignment)


def product_coloring(c: Complex, parts: list[tuple[Complex, Coloring]]) -> Coloring:
    """Combine colorings of covering subcomplexes into one of ``c``.

    Each part must be colored validly and every facet of ``c`` must be a
    simplex of some part (an uncovered facet is named in the rejection).
    Vertices missing from a part take color 1 in that coordinate; the
    result colors by the rank of the coordinate tuple, so it uses at
    most the product of the part color counts.
    """
    for part, col in parts:
        if col.subject != part:
            raise ValueError("each coloring must color its own part")
    for f in c.facet_sets():
        if not any(part.is_simplex(f) for part, _ in parts):
            raise ValueError(f"facet {sorted(f)!r} is covered by no part")
    tuples = []
    for lab in c.labels:
        coords = []
        for part, col in parts:
            coords.append(col.color_of(lab) if lab in part.labels else 1)
        tuples.append(tuple(coords))
    ranks = {t: i + 1 for i, t in enumerate(sorted(set(tuples)))}
    return Coloring(c, len(ranks), tuple(ranks[t] for t in tuples))


def pullback_coloring(m: VertexMap, target_witness: Coloring) -> Coloring:
    """Pull a target coloring back along a facet simplicial map."""
    if not classify(m).facet:
        raise ValueError("pullback requires a facet simplicial map")
    if target_witness.subject != m.target:
        raise ValueError("witness must color the map's target")
    assignment = tuple(
        target_witness.assignment[t] for t in m.assignment
    )
    return Coloring(m.source, target_witness.k, assignment)

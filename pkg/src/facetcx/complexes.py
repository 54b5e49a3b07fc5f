"""Immutable abstract simplicial complexes stored by their facet antichains.

A complex keeps a sorted tuple of vertex labels together with a tuple of
facet bitmasks over those labels.  Canonical ordering (lexicographic on
labels, facets sorted by their member index tuples) makes equality,
hashing and every derived artefact deterministic.  Face membership is
derived rather than stored: a set of vertices is a simplex exactly when
it is a non-empty subset of some facet.  Isolated vertices are the
singleton facets; the vertex set is always the union of the facets.

Functions
---------
build_complex       construct a canonical complex from faces
generate            seeded generators: complete / boundary / random
complete_complex    the complex with a single all-vertex facet
boundary_complex    all subsets of size <= n-1 of an n-set
metrics             dimension, facet count, degrees, purity, ...
skeleton            the subcomplex of faces up to a given dimension
underlying_graph    graph on all 1-simplices
facet_graph         graph on the facets of size exactly two
union               combine complexes, optionally checking disjointness
closure             the subcomplex generated by a subset of facets
relabel             rename vertices along a bijection
graph_as_complex    view a graph as a complex of dimension <= 1
"""

from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping


def _bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _key(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


@dataclass(frozen=True)
class Complex:
    """A finite abstract simplicial complex in canonical form.

    Attributes
    ----------
    labels : tuple[str, ...]
        Vertex labels, sorted lexicographically.  The position of a label
        is its bit index in every facet mask.
    facets : tuple[int, ...]
        Maximal faces as bitmasks over ``labels``, pairwise incomparable,
        jointly covering every vertex, sorted by member index tuples.
    name : str or None
        Optional display name; ignored by equality and hashing.
    """

    labels: tuple[str, ...] = ()
    facets: tuple[int, ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        labels, facets = self.labels, self.facets
        if list(labels) != sorted(set(labels)):
            raise ValueError("labels must be sorted and unique")
        full = (1 << len(labels)) - 1
        covered = 0
        for m in facets:
            if m <= 0 or m & ~full:
                raise ValueError("facet mask out of range")
            covered |= m
        if covered != full:
            raise ValueError("facets must cover every vertex")
        if list(facets) != sorted(set(facets), key=_key):
            raise ValueError("facets must be canonically sorted and unique")
        for a in facets:
            for b in facets:
                if a != b and a & b == a:
                    raise ValueError("facets must form an antichain")

    # -- basic views ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    def index(self, label: str) -> int:
        i = bisect_left(self.labels, label)
        if i == len(self.labels) or self.labels[i] != label:
            raise KeyError(label)
        return i

    def members(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in _bits(mask))

    def mask_of(self, labels: Iterable[str]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def facet_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(self.members(m)) for m in self.facets)

    def facet_lists(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.members(m) for m in self.facets)

    # -- face queries --------------------------------------------------

    def is_simplex_mask(self, mask: int) -> bool:
        if mask == 0:
            return False
        return any(mask & ~f == 0 for f in self.facets)

    def is_simplex(self, labels: Iterable[str]) -> bool:
        try:
            mask = self.mask_of(labels)
        except KeyError:
            return False
        return self.is_simplex_mask(mask)

    def simplex_masks(self) -> frozenset[int]:
        """Every non-empty face, as a mask set.  Exponential in facet size."""
        out: set[int] = set()
        for f in self.facets:
            idx = tuple(_bits(f))
            for r in range(1, len(idx) + 1):
                for combo in combinations(idx, r):
                    m = 0
                    for i in combo:
                        m |= 1 << i
                    out.add(m)
        return frozenset(out)

    @property
    def dim(self) -> int:
        """Largest facet dimension; -1 for the empty complex."""
        if not self.facets:
            return -1
        return max(m.bit_count() for m in self.facets) - 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        body = ", ".join("".join(t) for t in self.facet_lists())
        tag = f" {self.name!r}" if self.name else ""
        return f"<Complex{tag} {{{body}}} on {self.n} vertices>"


EMPTY = Complex()


def build_complex(
    faces: Iterable[Iterable[str]],
    explicit_vertices: Iterable[str] = (),
    name: str | None = None,
) -> Complex:
    """Build the canonical complex generated by ``faces``.

    Non-maximal faces are absorbed; vertices listed in
    ``explicit_vertices`` but covered by no face become singleton facets.
    An empty face is rejected with its position in the input; so are
    distinct labels that coincide after stripping surrounding whitespace,
    and empty labels.
    """
    face_list = [tuple(f) for f in faces]
    extra = tuple(explicit_vertices)
    seen: dict[str, str] = {}
    for lab in (v for face in face_list for v in face):
        _check_label(lab, seen)
    for lab in extra:
        _check_label(lab, seen)
    for pos, face in enumerate(face_list):
        if not face:
            raise ValueError(f"face {pos} is empty")

    labels = tuple(sorted(set(v for face in face_list for v in face) | set(extra)))
    idx = {lab: i for i, lab in enumerate(labels)}
    masks = []
    for face in face_list:
        m = 0
        for v in face:
            m |= 1 << idx[v]
        masks.append(m)

    # keep only maximal faces
    masks.sort(key=lambda m: -m.bit_count())
    maximal: list[int] = []
    for m in masks:
        if not any(m & ~k == 0 for k in maximal):
            maximal.append(m)
    covered = 0
    for m in maximal:
        covered |= m
    for i in range(len(labels)):
        if not covered >> i & 1:
            maximal.append(1 << i)
    maximal.sort(key=_key)
    return Complex(labels, tuple(maximal), name)


def _check_label(lab: str, seen: dict[str, str]) -> None:
    if lab == "":
        raise ValueError("empty vertex label")
    core = lab.strip()
    other = seen.setdefault(core, lab)
    if other != lab:
        raise ValueError(
            f"labels {other!r} and {lab!r} differ only by surrounding whitespace"
        )


# -- generators --------------------------------------------------------


def complete_complex(n: int, name: str | None = None) -> Complex:
    """The complex on vertices 1..n whose single facet is the whole set."""
    if n < 1:
        raise ValueError("complete_complex requires n >= 1")
    labels = tuple(sorted(str(i) for i in range(1, n + 1)))
    return Complex(labels, ((1 << n) - 1,), name or f"complete-{n}")


def boundary_complex(n: int, name: str | None = None) -> Complex:
    """All subsets of size <= n-1 of an n-set: n facets of dimension n-2."""
    if n < 2:
        raise ValueError("boundary_complex requires n >= 2")
    labels = tuple(sorted(str(i) for i in range(1, n + 1)))
    full = (1 << n) - 1
    masks = tuple(sorted((full ^ (1 << i) for i in range(n)), key=_key))
    return Complex(labels, masks, name or f"boundary-{n}")


def generate(kind: str, n: int, params: Mapping[str, object] | None = None) -> Complex:
    """Seeded complex generators.

    ``kind`` is one of ``gamma`` (complete complex), ``kn`` (boundary
    complex) or ``random``.  The random kind requires ``seed`` and draws
    every candidate subset of size <= ``max_facet_size`` independently
    with probability ``density``, then absorbs non-maximal faces and adds
    singletons so no vertex is lost.  Identical parameters give
    bit-identical complexes.
    """
    params = dict(params or {})
    if kind == "gamma":
        return complete_complex(n)
    if kind == "kn":
        return boundary_complex(n)
    if kind != "random":
        raise ValueError(f"unknown generator kind {kind!r}")
    if n < 1:
        raise ValueError("random generator requires n >= 1")
    if "seed" not in params:
        raise ValueError("random generator requires a seed")
    seed = params["seed"]
    max_facet_size = int(params.get("max_facet_size", 3))
    density = float(params.get("density", 0.5))
    if max_facet_size < 1:
        raise ValueError("max_facet_size must be >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    labels = [str(i) for i in range(1, n + 1)]
    faces = []
    for size in range(1, min(max_facet_size, n) + 1):
        for combo in combinations(range(n), size):
            if rng.random() < density:
                faces.append(tuple(labels[i] for i in combo))
    return build_complex(
        faces, explicit_vertices=labels, name=f"random-{n}-s{seed}"
    )


# -- metrics -----------------------------------------------------------


@dataclass(frozen=True)
class Metrics:
    """Derived numeric facts about one complex.

    ``degree`` maps each vertex to its number of neighbours, ``d_degree``
    maps (vertex, d) to the number of vertices sharing a d-dimensional
    simplex with it (d >= 1), and ``isolated`` lists the degree-zero
    vertices.  ``pure`` means all facets share one dimension, false for
    the empty complex.
    """

    dim: int
    eta: int
    pure: bool
    degree: dict[str, int]
    d_degree: dict[tuple[str, int], int]
    isolated: tuple[str, ...]
    min_facet_size: int | None
    min_nonunitary_facet_size: int | None


def _degree_tables(c: Complex) -> tuple[list[int], dict[int, list[int]]]:
    """Per-vertex degree and, for each d >= 1, per-vertex d-degree."""
    n = c.n
    deg = [0] * n
    by_d: dict[int, list[int]] = {}
    top = c.dim
    for d in range(1, top + 1):
        row = [0] * n
        for v in range(n):
            nb = 0
            for f in c.facets:
                if f >> v & 1 and f.bit_count() >= d + 1:
                    nb |= f
            nb &= ~(1 << v)
            row[v] = nb.bit_count()
        by_d[d] = row
    if 1 in by_d:
        deg = list(by_d[1])
    return deg, by_d


def metrics(c: Complex) -> Metrics:
    sizes = [m.bit_count() for m in c.facets]
    deg, by_d = _degree_tables(c)
    degree = {lab: deg[i] for i, lab in enumerate(c.labels)}
    d_degree = {
        (lab, d): row[i]
        for d, row in sorted(by_d.items())
        for i, lab in enumerate(c.labels)
    }
    nonunit = [s for s in sizes if s >= 2]
    return Metrics(
        dim=c.dim,
        eta=len(sizes),
        pure=bool(sizes) and len(set(sizes)) == 1,
        degree=degree,
        d_degree=d_degree,
        isolated=tuple(lab for lab, d in degree.items() if d == 0),
        min_facet_size=min(sizes) if sizes else None,
        min_nonunitary_facet_size=min(nonunit) if nonunit else None,
    )


# -- derived complexes and graphs --------------------------------------


def skeleton(c: Complex, q: int) -> Complex:
    """The subcomplex of all faces of dimension <= q (q >= 0)."""
    if q < 0:
        raise ValueError("skeleton dimension must be >= 0")
    faces: list[tuple[str, ...]] = []
    for m in c.facets:
        mem = c.members(m)
        if len(mem) <= q + 1:
            faces.append(mem)
        else:
            faces.extend(combinations(mem, q + 1))
    return build_complex(faces, explicit_vertices=c.labels)


@dataclass(frozen=True)
class GraphView:
    """A finite simple graph with canonically sorted vertices and edges."""

    labels: tuple[str, ...] = ()
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if list(self.labels) != sorted(set(self.labels)):
            raise ValueError("labels must be sorted and unique")
        known = set(self.labels)
        for u, v in self.edges:
            if u >= v:
                raise ValueError("edge endpoints must be sorted and distinct")
            if u not in known or v not in known:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
        if list(self.edges) != sorted(set(self.edges)):
            raise ValueError("edges must be sorted and unique")

    @classmethod
    def build(
        cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]
    ) -> "GraphView":
        vs = set(vertices)
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            vs.add(u)
            vs.add(v)
            es.add((min(u, v), max(u, v)))
        return cls(tuple(sorted(vs)), tuple(sorted(es)))

    @property
    def n(self) -> int:
        return len(self.labels)


def underlying_graph(c: Complex) -> GraphView:
    """The graph whose edges are all 1-simplices of ``c``."""
    edges = set()
    for m in c.facets:
        mem = c.members(m)
        edges.update(combinations(mem, 2))
    return GraphView.build(c.labels, edges)


def facet_graph(c: Complex) -> GraphView:
    """The graph whose edges are the facets of size exactly two."""
    edges = [c.members(m) for m in c.facets if m.bit_count() == 2]
    verts = set(v for e in edges for v in e)
    return GraphView.build(verts, [(a, b) for a, b in edges])


def graph_as_complex(g: GraphView, name: str | None = None) -> Complex:
    """View a graph as the complex of its edges plus isolated vertices."""
    return build_complex(g.edges, explicit_vertices=g.labels, name=name)


def union(parts: Iterable[Complex], disjoint: bool = False) -> Complex:
    """The complex generated by all facets of ``parts``.

    With ``disjoint=True`` the vertex sets must be pairwise disjoint; a
    shared vertex is named in the rejection.
    """
    part_list = list(parts)
    if not part_list:
        raise ValueError("union requires at least one complex")
    if disjoint:
        seen: set[str] = set()
        for p in part_list:
            for lab in p.labels:
                if lab in seen:
                    raise ValueError(f"vertex {lab!r} appears in more than one part")
            seen.update(p.labels)
    faces: list[tuple[str, ...]] = []
    verts: set[str] = set()
    for p in part_list:
        faces.extend(p.facet_lists())
        verts.update(p.labels)
    return build_complex(faces, explicit_vertices=verts)


def closure(c: Complex, facet_subset: Iterable[Iterable[str]]) -> Complex:
    """The subcomplex generated by the given facets of ``c``.

    Every member must be a facet of ``c`` (not merely a face); anything
    else is rejected.
    """
    chosen = []
    facet_set = set(c.facets)
    for f in facet_subset:
        m = c.mask_of(f)
        if m not in facet_set:
            raise ValueError(f"{sorted(f)!r} is not a facet of the complex")
        chosen.append(m)
    chosen = sorted(set(chosen), key=_key)
    labels = tuple(sorted({lab for m in chosen for lab in c.members(m)}))
    idx = {lab: i for i, lab in enumerate(labels)}
    remapped = tuple(
        sorted(
            (sum(1 << idx[lab] for lab in c.members(m)) for m in chosen),
            key=_key,
        )
    )
    return Complex(labels, remapped)


def relabel(c: Complex, mapping: Mapping[str, str]) -> Complex:
    """Rename vertices along a bijection; rejects collisions."""
    if sorted(mapping) != list(c.labels):
        raise ValueError("mapping must cover exactly the vertex set")
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("mapping must be injective")
    faces = [tuple(mapping[v] for v in f) for f in c.facet_lists()]
    return build_complex(faces, explicit_vertices=mapping.values(), name=c.name)

"""Vertex maps between complexes and their classification.

A map is total on the source vertices.  ``classify`` reports four flags:

* simplicial: every facet image is a simplex of the target (then every
  face image is, since faces are subsets of facets);
* strict: simplicial and dimension preserving, i.e. injective on each
  facet;
* facet: simplicial and every non-unitary facet maps exactly onto a
  non-unitary facet of the target;
* injective: globally injective on vertices.

Injective together with simplicial implies strict.  The witness names
the canonically first facet violating the headline flags, checked in
the order simplicial, facet, strict; a purely injectivity failure has
no facet witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .complexes import Complex, _bits


@dataclass(frozen=True)
class VertexMap:
    """A total map of source vertices into target vertices.

    ``assignment`` holds a target index per source index, aligned with
    the canonical label order of both complexes.
    """

    source: Complex
    target: Complex
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.assignment) != self.source.n:
            raise ValueError("assignment must cover every source vertex")
        for t in self.assignment:
            if not 0 <= t < self.target.n:
                raise ValueError("assignment image out of range")

    @classmethod
    def from_dict(
        cls, source: Complex, target: Complex, assignment: Mapping[str, str]
    ) -> "VertexMap":
        images = []
        for lab in source.labels:
            if lab not in assignment:
                raise ValueError(f"source vertex {lab!r} has no image")
            img = assignment[lab]
            try:
                images.append(target.index(img))
            except KeyError:
                raise ValueError(
                    f"image {img!r} of {lab!r} is not a target vertex"
                ) from None
        extra = set(assignment) - set(source.labels)
        if extra:
            raise ValueError(f"{sorted(extra)[0]!r} is not a source vertex")
        return cls(source, target, tuple(images))

    def as_dict(self) -> dict[str, str]:
        return {
            lab: self.target.labels[t]
            for lab, t in zip(self.source.labels, self.assignment)
        }

    def __call__(self, label: str) -> str:
        return self.target.labels[self.assignment[self.source.index(label)]]

    def image_mask(self, source_mask: int) -> int:
        m = 0
        for i in _bits(source_mask):
            m |= 1 << self.assignment[i]
        return m


@dataclass(frozen=True)
class MapClass:
    simplicial: bool
    strict: bool
    facet: bool
    injective: bool
    witness: frozenset[str] | None = field(default=None)


def classify(m: VertexMap) -> MapClass:
    src, tgt = m.source, m.target
    tgt_facets = set(tgt.facets)
    simplicial = True
    strict = True
    facet_flag = True
    wit_simplicial = wit_facet = wit_strict = None
    for f in src.facets:
        img = m.image_mask(f)
        if not tgt.is_simplex_mask(img):
            simplicial = False
            if wit_simplicial is None:
                wit_simplicial = f
        if img.bit_count() != f.bit_count():
            strict = False
            if wit_strict is None:
                wit_strict = f
        if f.bit_count() >= 2 and not (img in tgt_facets and img.bit_count() >= 2):
            facet_flag = False
            if wit_facet is None:
                wit_facet = f
    strict = strict and simplicial
    facet_flag = facet_flag and simplicial
    injective = len(set(m.assignment)) == src.n
    witness_mask = None
    if not simplicial:
        witness_mask = wit_simplicial
    elif not facet_flag:
        witness_mask = wit_facet
    elif not strict:
        witness_mask = wit_strict
    witness = frozenset(src.members(witness_mask)) if witness_mask is not None else None
    return MapClass(simplicial, strict, facet_flag, injective, witness)


def image_inverse(m: VertexMap, sub: Complex) -> Complex:
    """The largest subcomplex of the source mapping into ``sub``.

    ``sub`` must be a subcomplex of the target (every facet of ``sub`` a
    simplex of the target) and ``m`` must classify simplicial.  The
    result has vertex set f^-1(V(sub)) and contains a face exactly when
    its image is a simplex of ``sub``.
    """
    if not classify(m).simplicial:
        raise ValueError("image_inverse requires a simplicial map")
    tgt = m.target
    for fs in sub.facet_sets():
        if not tgt.is_simplex(fs):
            raise ValueError(f"{sorted(fs)!r} is not a simplex of the target")
    sub_vertices = set(sub.labels)
    pre = [
        i
        for i in range(m.source.n)
        if tgt.labels[m.assignment[i]] in sub_vertices
    ]
    pre_mask = 0
    for i in pre:
        pre_mask |= 1 << i
    faces = []
    for f in m.source.facets:
        for s in sub.facets:
            s_labels = set(sub.members(s))
            keep = 0
            for i in _bits(f & pre_mask):
                if tgt.labels[m.assignment[i]] in s_labels:
                    keep |= 1 << i
            if keep:
                faces.append(m.source.members(keep))
    from .complexes import build_complex

    return build_complex(
        faces,
        explicit_vertices=(m.source.labels[i] for i in pre),
    )


def compose(first: VertexMap, second: VertexMap) -> VertexMap:
    """The composite second after first; endpoints must agree exactly."""
    if first.target != second.source:
        raise ValueError("intermediate complexes differ")
    return VertexMap(
        first.source,
        second.target,
        tuple(second.assignment[t] for t in first.assignment),
    )

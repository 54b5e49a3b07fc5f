import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facetcx import (
    EMPTY,
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

LABELS = st.sampled_from("abcdef")
FACES = st.lists(
    st.frozensets(LABELS, min_size=1, max_size=4), min_size=0, max_size=6
)


def complexes():
    return FACES.map(build_complex)


def test_canonical_form_sorts_and_reduces():
    c = build_complex([("b", "a"), ("c",), ("a", "b", "c"), ("a",)])
    assert c.labels == ("a", "b", "c")
    assert c.facet_lists() == (("a", "b", "c"),)


def test_antichain_keeps_incomparable_faces():
    c = build_complex([("a", "b"), ("b", "c"), ("a",)])
    assert c.facet_lists() == (("a", "b"), ("b", "c"))


def test_explicit_vertices_become_singletons():
    c = build_complex([("a", "b")], explicit_vertices=("z", "a"))
    assert c.labels == ("a", "b", "z")
    assert frozenset({"z"}) in c.facet_sets()


def test_empty_complex():
    assert EMPTY.n == 0
    assert EMPTY.dim == -1
    assert EMPTY.facets == ()


def test_dim_and_membership(bowtie):
    assert bowtie.dim == 2
    assert bowtie.is_simplex(("a", "b"))
    assert bowtie.is_simplex(("c",))
    assert not bowtie.is_simplex(("a", "d"))
    assert not bowtie.is_simplex(("a", "b", "c", "d"))


def test_simplex_masks_counts(bowtie):
    # triangle contributes 7 nonempty faces; edges cd, ce, de add 1 each
    # beyond shared vertices; vertices d, e add 2.
    assert len(bowtie.simplex_masks()) == 12


def test_complete_complex():
    g = complete_complex(4)
    assert g.labels == ("1", "2", "3", "4")
    assert g.facet_lists() == (("1", "2", "3", "4"),)
    assert g.dim == 3


def test_boundary_complex():
    k = boundary_complex(3)
    assert k.facet_lists() == (("1", "2"), ("1", "3"), ("2", "3"))
    assert k.dim == 1
    assert boundary_complex(4).dim == 2
    assert len(boundary_complex(4).facets) == 4


def test_generate_random_is_seed_deterministic():
    a = generate("random", 6, {"seed": 11})
    b = generate("random", 6, {"seed": 11})
    c = generate("random", 6, {"seed": 12})
    assert a == b
    assert a != c


def test_generate_rejects_unknown_kind():
    with pytest.raises(ValueError):
        generate("nope", 3)


def test_metrics(bowtie):
    m = metrics(bowtie)
    assert m.eta == 4
    assert m.dim == 2
    assert not m.pure
    assert m.isolated == ()
    assert m.min_facet_size == 2
    assert m.min_nonunitary_facet_size == 2


def test_metrics_isolated_and_none():
    c = build_complex([("a",), ("b",)])
    m = metrics(c)
    assert m.isolated == ("a", "b")
    assert m.min_facet_size == 1
    assert m.min_nonunitary_facet_size is None


def test_pure_detection():
    assert metrics(boundary_complex(4)).pure
    assert not metrics(build_complex([("a", "b", "c"), ("c", "d")])).pure


def test_skeleton_of_bowtie(bowtie):
    s1 = skeleton(bowtie, 1)
    assert s1.facet_lists() == (
        ("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e"),
    )
    s0 = skeleton(bowtie, 0)
    assert all(len(f) == 1 for f in s0.facet_lists())
    assert skeleton(bowtie, 5) == bowtie


def test_skeleton_rejects_negative(bowtie):
    with pytest.raises(ValueError):
        skeleton(bowtie, -1)


def test_underlying_and_facet_graph(bowtie):
    ug = underlying_graph(bowtie)
    fg = facet_graph(bowtie)
    assert len(ug.edges) == 6
    assert len(fg.edges) == 3  # cd, ce, de: only the 1-dimensional facets
    gc = graph_as_complex(fg)
    assert gc.facet_lists() == (("c", "d"), ("c", "e"), ("d", "e"))


def test_union_overlapping(bowtie):
    a = build_complex([("a", "b", "c"), ("c", "d"), ("d", "e")])
    b = build_complex([("c", "e")])
    assert union([a, b]) == bowtie


def test_union_disjoint_rejects_shared_vertex():
    a = build_complex([("a", "b")])
    b = build_complex([("b", "c")])
    with pytest.raises(ValueError, match="'b'"):
        union([a, b], disjoint=True)


def test_closure_subset(bowtie):
    sub = closure(bowtie, [("a", "b", "c"), ("c", "d")])
    assert sub.labels == ("a", "b", "c", "d")
    assert sub.facet_lists() == (("a", "b", "c"), ("c", "d"))


def test_closure_rejects_non_facet(bowtie):
    with pytest.raises(ValueError):
        closure(bowtie, [("a", "b")])


def test_relabel_roundtrip(bowtie):
    fwd = {lab: lab.upper() for lab in bowtie.labels}
    back = {v: k for k, v in fwd.items()}
    assert relabel(relabel(bowtie, fwd), back) == bowtie


def test_relabel_rejects_collision():
    c = build_complex([("a", "b")])
    with pytest.raises(ValueError):
        relabel(c, {"a": "x", "b": "x"})


@settings(max_examples=60, deadline=None)
@given(complexes(), st.integers(min_value=0, max_value=5))
def test_skeleton_dimension_property(c, q):
    s = skeleton(c, q)
    assert s.dim <= q
    assert set(s.labels) == set(c.labels)
    # every skeleton facet is a simplex of the original
    assert all(c.is_simplex(f) for f in s.facet_lists())


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_closure_of_all_facets_is_identity(c):
    assert closure(c, c.facet_lists()) == c


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_facets_form_antichain(c):
    sets = c.facet_sets()
    for i, f in enumerate(sets):
        for j, g in enumerate(sets):
            if i != j:
                assert not f <= g

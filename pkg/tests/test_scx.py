import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facetcx import (
    ScxError,
    build_complex,
    parse_map,
    parse_scx,
    serialize_map,
    serialize_scx,
)
from facetcx.maps import VertexMap


def test_parse_basic():
    c = parse_scx("# comment\nname demo\nv a b\nf a b c\nf c d\n")
    assert c.name == "demo"
    assert c.labels == ("a", "b", "c", "d")
    assert c.facet_lists() == (("a", "b", "c"), ("c", "d"))


def test_parse_blank_and_whitespace():
    c = parse_scx("\n  \nf a b\n\n")
    assert c.facet_lists() == (("a", "b"),)


def test_parse_explicit_vertex_only():
    c = parse_scx("v x\n")
    assert c.facet_lists() == (("x",),)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ScxError, match="line 2"):
        parse_scx("f a b\nx c d\n")
    with pytest.raises(ScxError, match="line 1"):
        parse_scx("f\n")


def test_parse_duplicate_name_rejected():
    with pytest.raises(ScxError):
        parse_scx("name a\nname b\nf x y\n")


def test_serialize_canonical(bowtie):
    text = serialize_scx(bowtie)
    assert text == (
        "name shaded_bowtie\nv a b c d e\nf a b c\nf c d\nf c e\nf d e\n"
    )


def test_roundtrip_fixture(bowtie):
    assert parse_scx(serialize_scx(bowtie)) == bowtie


def test_parse_map(bowtie, tailed):
    m = parse_map(
        "m a a'\nm b b'\nm c c'\nm d b'\nm e a'\n", bowtie, tailed
    )
    assert m("d") == "b'"
    assert m.as_dict()["e"] == "a'"


def test_parse_map_errors(bowtie, tailed):
    with pytest.raises(ScxError, match="unknown source vertex"):
        parse_map("m z a'\n", bowtie, tailed)
    with pytest.raises(ScxError, match="unknown target vertex"):
        parse_map("m a zz\n", bowtie, tailed)
    with pytest.raises(ScxError, match="has no image"):
        parse_map("m a a'\n", bowtie, tailed)
    with pytest.raises(ScxError, match="line 2"):
        parse_map("m a a'\nm a b'\n", bowtie, tailed)


def test_serialize_map_roundtrip(bowtie, tailed):
    m = VertexMap.from_dict(
        bowtie, tailed,
        {"a": "a'", "b": "b'", "c": "c'", "d": "b'", "e": "a'"},
    )
    assert parse_map(serialize_map(m), bowtie, tailed) == m


LABELS = st.sampled_from(["a", "b", "c", "x'", "y2", "zz"])


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.frozensets(LABELS, min_size=1, max_size=4), max_size=6),
    st.lists(LABELS, max_size=3),
)
def test_roundtrip_property(faces, extra):
    c = build_complex(faces, explicit_vertices=extra)
    assert parse_scx(serialize_scx(c)) == c

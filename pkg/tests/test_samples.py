from facetcx import classify, samples, union


def test_all_names_load():
    for name in samples.names():
        c = samples.load(name)
        assert c.n > 0
        assert c.name == name


def test_bowtie_shape(bowtie):
    assert bowtie.labels == ("a", "b", "c", "d", "e")
    assert bowtie.facet_lists() == (
        ("a", "b", "c"), ("c", "d"), ("c", "e"), ("d", "e"),
    )


def test_tailed_shape(tailed):
    assert tailed.facet_lists() == (("a'", "b'", "c'"), ("c'", "d'"))


def test_parts_reassemble(bowtie):
    main = samples.load("bowtie_main_part")
    edge = samples.load("bowtie_edge_part")
    assert union([main, edge]) == bowtie


def test_part_maps_are_facet_maps():
    assert classify(samples.main_part_map()).facet
    edge_cls = classify(samples.edge_part_map())
    assert edge_cls.facet and edge_cls.injective


def test_fold_map_class():
    cls = classify(samples.fold_map())
    assert cls.strict and not cls.facet


def test_hollow_triangle_plus_point():
    c = samples.load("hollow_triangle_plus_point")
    assert len(c.facets) == 4
    singles = [f for f in c.facet_lists() if len(f) == 1]
    assert singles == (["*"],) or singles == [("*",)]

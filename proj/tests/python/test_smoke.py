import networkx as nx
import pytest

import pycrochet as pc


def to_nx(g6):
    n, edges = pc.graph6_decode(g6)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def test_graph6_round_trip():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    s = pc.graph6_encode(5, edges)
    assert s == "Dhc"
    n, back = pc.graph6_decode(s)
    assert n == 5
    assert sorted(back) == sorted(tuple(sorted(e)) for e in edges)


def test_bad_graph6_raises():
    with pytest.raises(ValueError):
        pc.graph6_decode("~~~not graph6")


def test_pattern_counts():
    assert [len(pc.h13_patterns(m)) for m in (1, 2, 3)] == [1, 1, 1]
    with pytest.raises(ValueError):
        pc.build_pattern("not a pattern")


def test_c4_hyperedge_gives_h13():
    c4 = [p for p in pc.h13_patterns(4) if p.split(";")[2]]
    assert len(c4) == 1
    g = to_nx(pc.build_pattern(c4[0], verify=True))
    circ = nx.circulant_graph(13, [1, 5])
    assert nx.is_isomorphic(g, circ)


def test_builds_are_triangle_free_with_alpha_equal_to_size():
    for m in range(1, 6):
        for p in pc.h13_patterns(m):
            g6 = pc.build_pattern(p)
            assert pc.is_triangle_free(g6)
            assert pc.independence_number(g6) == m
            checks = pc.verify_pattern(p)
            assert all(ok for ok, _ in checks.values()), checks


def test_alpha_against_networkx():
    g = nx.petersen_graph()
    s = pc.graph6_encode(10, list(g.edges()))
    comp = nx.complement(g)
    clique = max(len(c) for c in nx.find_cliques(comp))
    assert pc.independence_number(s) == clique == 4


def test_catalog_tables():
    cat = pc.Catalog.build(5, verify=True)
    assert cat.table(3) == {(4, 2): 1, (5, 5): 1}
    assert cat.table(5)[(13, 26)] == 1
    assert cat.table(6)[(16, 32)] == 4
    assert cat.table(6)[(16, 33)] == 2
    for e in cat.entries(6):
        g = to_nx(e.graph6)
        assert (g.number_of_nodes(), g.number_of_edges()) == (e.n, e.e)
        assert e.graph6 in cat


def test_catalog_worker_invariance_and_save(tmp_path):
    a = pc.Catalog.build(5, workers=1)
    b = pc.Catalog.build(5, workers=2)
    assert a.to_tsv() == b.to_tsv()
    path = tmp_path / "c.tsv"
    a.save(str(path))
    assert pc.Catalog.load(str(path)).to_tsv() == a.to_tsv()
    with pytest.raises(OSError):
        pc.Catalog.load(str(tmp_path / "missing.tsv"))

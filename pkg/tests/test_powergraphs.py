import pytest

from epgcolour.errors import CapExceeded
from epgcolour.graphs import SimpleGraph, is_bipartite
from epgcolour.powergraphs import (build_gk_graph, build_graph, delta_adjacent, enhanced_adjacent,
                                   gk_component_count, isolated_large_primes, large_primes,
                                   power_adjacent)

from conftest import Q8, group

PENTAGON = ["(1,2)", "(3,4,5)", "(6,7)", "(1,2,3)", "(4,5,6,7,8)"]


def common_power_oracle(G, x, y):
    """Some z has both x and y among its powers."""
    return any(x in G.cyclic_closure(z).members and y in G.cyclic_closure(z).members
               for z in range(G.order))


def test_power_adjacent_examples(s8):
    for x in (1, 100, 40319):
        assert power_adjacent(s8, 0, x)
    assert not power_adjacent(s8, s8.element("(1,2)"), s8.element("(1,2,3)"))
    assert power_adjacent(group("cyclic:6"), 1, 5)
    with pytest.raises(ValueError):
        power_adjacent(s8, 3, 3)


def test_enhanced_adjacent_examples(s8):
    assert enhanced_adjacent(s8, 0, 77)
    assert not enhanced_adjacent(s8, s8.element("(1,2)"), s8.element("(6,7)"))
    assert enhanced_adjacent(s8, s8.element("(1,2,3)"), s8.element("(4,5,6,7,8)"))
    with pytest.raises(ValueError):
        enhanced_adjacent(s8, 5, 5)


def test_delta_adjacent_examples(s8):
    assert not delta_adjacent(s8, 0, 9)
    assert delta_adjacent(s8, s8.element("(1,2)"), s8.element("(3,4,5)"))
    assert not delta_adjacent(s8, s8.element("(3,4,5)"), s8.element("(4,5,6,7,8)"))


def test_pentagon_in_delta_s8(s8):
    vs = [s8.element(p) for p in PENTAGON]
    for i in range(5):
        for j in range(i + 1, 5):
            assert delta_adjacent(s8, vs[i], vs[j]) == ((j - i) in (1, 4))
    # d-a is a non-edge of both graphs
    assert not enhanced_adjacent(s8, vs[3], vs[0])
    rows = [sum(1 << j for j in range(5) if j != i and delta_adjacent(s8, vs[i], vs[j]))
            for i in range(5)]
    sub = SimpleGraph(5, rows)
    assert sub == SimpleGraph.cycle(5)
    assert not is_bipartite(sub)


@pytest.mark.parametrize("desc", ["sym:4", "dihedral:6", Q8, "product:cyclic:2,cyclic:4"])
def test_enhanced_adjacent_matches_common_power(desc):
    G = group(desc)
    for x in range(G.order):
        for y in range(x + 1, G.order):
            assert enhanced_adjacent(G, x, y) == common_power_oracle(G, x, y)
            assert enhanced_adjacent(G, x, y) == enhanced_adjacent(G, y, x)
            assert delta_adjacent(G, x, y) == delta_adjacent(G, y, x)


def test_build_examples():
    for n in (1, 2, 7, 12):
        assert build_graph(group(f"cyclic:{n}"), "enhanced") == SimpleGraph.complete(n)
    # 2 (order 3) and 3 (order 2) are not powers of one another, nor are 4 and 3
    p6 = build_graph(group("cyclic:6"), "power")
    assert p6.edge_set() == SimpleGraph.complete(6).edge_set() - {(2, 3), (3, 4)}
    assert build_graph(group("cyclic:6"), "delta").edge_set() == {(2, 3), (3, 4)}
    for n in (4, 8, 9, 25):
        assert build_graph(group(f"cyclic:{n}"), "power") == SimpleGraph.complete(n)
    d3 = build_graph(group("sym:3"), "delta")
    assert d3.vertex_count == 6 and d3.edge_count() == 0
    g = build_graph(group("dihedral:4"), "enhanced")
    assert g.labels == group("dihedral:4").orders


@pytest.mark.parametrize("desc", ["cyclic:12", "cyclic:30", "dihedral:6", "sym:4", "alt:5", Q8])
def test_build_methods_agree(desc):
    G = group(desc)
    for kind in ("power", "enhanced", "delta"):
        assert build_graph(G, kind) == build_graph(G, kind, method="pairwise")


@pytest.mark.parametrize("n", [6, 12, 30, 36])
def test_cyclic_delta_edge_count(n):
    G = group(f"cyclic:{n}")
    epg, power, delta = (build_graph(G, k) for k in ("enhanced", "power", "delta"))
    assert epg.edge_count() == n * (n - 1) // 2
    # independent count: pairs where neither order divides the other
    orders = G.orders
    incomparable = sum(1 for x in range(n) for y in range(x + 1, n)
                       if orders[x] % orders[y] and orders[y] % orders[x])
    assert delta.edge_count() == epg.edge_count() - power.edge_count() == incomparable


def test_graph_cap():
    with pytest.raises(CapExceeded):
        build_graph(group("sym:5"), "enhanced", cap=100)
    with pytest.raises(ValueError):
        build_graph(group("sym:3"), "directed")


def test_gk_examples(s8, a7):
    g1 = build_gk_graph(group("cyclic:1"))
    assert g1.primes == () and gk_component_count(g1) == 0
    g7 = build_gk_graph(a7)
    assert g7.primes == (2, 3, 5, 7)
    assert g7.sorted_edges() == [(2, 3)]
    assert g7.components() == [[2, 3], [5], [7]]
    assert gk_component_count(g7) == 3
    g8 = build_gk_graph(s8)
    assert g8.sorted_edges() == [(2, 3), (2, 5), (3, 5)]
    assert gk_component_count(g8) == 2
    assert g8.isolated() == [7]


def test_gk_agrees_with_element_scan(a7):
    for G in (a7, group("sym:6"), group("dihedral:15")):
        gk = build_gk_graph(G)
        for p in gk.primes:
            for q in gk.primes:
                if p < q:
                    assert gk.adjacent(p, q) == (p * q in G.orders)


def test_isolated_large_primes(s8, a7):
    assert isolated_large_primes(group("cyclic:6")) == []
    assert isolated_large_primes(a7) == [5, 7]
    assert isolated_large_primes(s8) == []
    for G in (a7, s8, group("sym:7"), group("alt:6"), group("dihedral:13"), group("cyclic:30")):
        assert isolated_large_primes(G) == large_primes(G)

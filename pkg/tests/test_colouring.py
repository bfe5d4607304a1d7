import math

import pytest

from epgcolour.colouring import (check_clique_witness, clique_witness, colour_group,
                                 rainbow_subgroups, same_colour_pairs, validate_certificate,
                                 verify_weak_perfectness)
from epgcolour.errors import CapExceeded
from epgcolour.farey import build_colour_families
from epgcolour.graphs import Colouring, is_proper_colouring
from epgcolour.powergraphs import build_graph, enhanced_adjacent

from conftest import Q8, group


def test_trivial_group():
    c = colour_group(group("cyclic:1"))
    assert c.colours == (1,) and c.palette_size == 1


def test_cyclic6_colours():
    assert colour_group(group("cyclic:6")).colours == (6, 1, 2, 3, 4, 5)


def test_identity_gets_n():
    for desc in ("sym:5", "dihedral:7", "alt:5", Q8):
        G = group(desc)
        assert colour_group(G)[0] == G.max_element_order()


@pytest.mark.parametrize("desc", ["sym:5", "alt:5", "dihedral:12", "product:cyclic:4,cyclic:6", Q8])
def test_generator_colours_come_from_pool(desc):
    G = group(desc)
    n = G.max_element_order()
    fam = build_colour_families(n)
    col = colour_group(G)
    for x in range(G.order):
        c = G.cyclic_closure(x)
        q = c.order
        gens = c.generators()
        assert len({col[g] for g in gens}) == len(gens)
        assert {col[g] for g in gens} == set(fam[q])
        # g**k is coloured f(k/q) for the canonical generator g
        g = G.canonical_generator(c)
        powers = G.cyclic_closure(g).elements
        for k in range(1, q + 1):
            if math.gcd(k, q) == 1:
                assert col[powers[k % q]] == (n * k + q - 1) // q


@pytest.mark.parametrize("desc", ["sym:4", "sym:5", "alt:5", "dihedral:10", Q8])
def test_equal_order_neighbours_share_subgroup(desc):
    G = group(desc)
    for x in range(G.order):
        for y in range(x + 1, G.order):
            if G.element_order(x) == G.element_order(y) and enhanced_adjacent(G, x, y):
                assert G.cyclic_closure(x).members == G.cyclic_closure(y).members


def test_sym8_colouring(s8):
    col = colour_group(s8)
    assert col.palette_size == 15
    assert rainbow_subgroups(s8, col.colours)
    report, exhaustive = same_colour_pairs(s8, col.colours, samples=20_000)
    assert report and not exhaustive


def test_properness_checks_catch_bad_colouring():
    G = group("sym:4")
    good = colour_group(G)
    x = next(v for v in range(G.order) if G.element_order(v) == 4)
    y = G.power(x, 2)
    cols = list(good.colours)
    cols[y] = cols[x]
    assert not rainbow_subgroups(G, cols)
    assert not same_colour_pairs(G, cols)[0]
    assert not is_proper_colouring(build_graph(G, "enhanced"), cols)


def test_certificates():
    cert = verify_weak_perfectness(group("cyclic:12"), exact=True)
    assert cert.ok and cert.n == 12 and cert.clique_witness == list(range(12))
    assert cert.verdicts["exact_chromatic"]["value"] == 12
    cert = verify_weak_perfectness(group("sym:5"), exact=True)
    assert cert.ok and cert.n == 6
    G = group("sym:5")
    g = cert.witness_generator
    assert set(cert.clique_witness) == G.cyclic_closure(g).members
    # an element of order 6 in S5 has cycle type (2, 3)
    assert sorted(len(c.split(",")) for c in G.label(g).strip("()").split(")(")) == [2, 3]
    assert "exact_clique" not in verify_weak_perfectness(group("sym:4")).verdicts


def test_alt7_certificate(a7):
    cert = verify_weak_perfectness(a7)
    assert cert.ok and cert.n == 7
    assert cert.verdicts["same_colour_pairs"]["exhaustive"]
    assert "graph_properness" not in cert.verdicts
    with pytest.raises(CapExceeded):
        verify_weak_perfectness(a7, exact=True)


def test_certificate_round_trip():
    G = group("dihedral:9")
    data = verify_weak_perfectness(G).as_dict()
    assert validate_certificate(data, G)
    data["colouring"]["colours"][3] = data["colouring"]["colours"][0]
    assert not validate_certificate(data, G)


def test_witness_checks():
    G = group("sym:5")
    w = clique_witness(G)
    assert check_clique_witness(G, w, 6)
    assert not check_clique_witness(G, w[:-1] + [G.element("(1,2)")], 6)


def test_order_six_element_of_s5_spans_a_clique():
    G = group("sym:5")
    x = G.element("(1,2)(3,4,5)")
    c = G.cyclic_closure(x)
    assert c.order == 6
    assert check_clique_witness(G, c.elements, 6).ok

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from epgcolour.errors import CapExceeded, DescriptorError, InvalidGroupError
from epgcolour.groups import (compose, construct_group, format_cycles, parse_cycles,
                              spot_check_group)

from conftest import FIXTURES, Q8, group


def brute_order(G, x):
    q, cur = 1, x
    while cur != 0:
        cur = G.multiply(cur, x)
        q += 1
    return q


@pytest.mark.parametrize("desc, order", [
    ("cyclic:1", 1), ("cyclic:12", 12), ("dihedral:6", 12), ("sym:1", 1), ("sym:2", 2),
    ("sym:5", 120), ("sym:8", 40320), ("alt:1", 1), ("alt:3", 3), ("alt:7", 2520),
    ("product:cyclic:2,cyclic:3", 6), ("product:(product:cyclic:2,cyclic:2),sym:3", 24),
])
def test_construct_orders(desc, order):
    G = group(desc)
    assert G.order == order
    assert G.multiply(0, G.order - 1) == G.order - 1


def test_alt7_spectrum():
    assert group("alt:7").order_spectrum() == [1, 2, 3, 4, 5, 6, 7]


def test_sym8_spectrum(s8):
    assert s8.order_spectrum() == [1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15]
    assert s8.max_element_order() == 15


def test_small_spectra():
    assert group("cyclic:12").order_spectrum() == [1, 2, 3, 4, 6, 12]
    assert group("dihedral:6").max_element_order() == 6
    assert all(group(f"cyclic:{n}").max_element_order() == n for n in (1, 7, 30))


def test_element_order_examples(s8):
    assert s8.element_order(0) == 1
    assert s8.element_order(s8.element("(4,5,6,7,8)")) == 5
    C12 = group("cyclic:12")
    assert brute_order(C12, 8) == 3
    assert C12.element_order(8) == 3


def test_cyclic_closure_examples():
    C6 = group("cyclic:6")
    assert C6.cyclic_closure(0).elements == (0,)
    assert C6.cyclic_closure(1).elements == (0, 1, 2, 3, 4, 5)
    S5 = group("sym:5")
    x = S5.element("(1,2,3)(4,5)")
    c = S5.cyclic_closure(x)
    assert c.order == 6
    for k, y in enumerate(c.elements):
        assert S5.permutation(y) == S5.permutation(S5.power(x, k))


def test_subgroup_closure_examples(s8):
    S3 = group("sym:3")
    assert len(S3.subgroup_closure([S3.element("(1,2)"), S3.element("(1,2,3)")])) == 6
    a, b = s8.element("(1,2)"), s8.element("(6,7)")
    klein = s8.subgroup_closure([a, b])
    assert klein == {0, a, b, s8.element("(1,2)(6,7)")}
    assert not s8.is_cyclic_subset(klein)
    h = s8.subgroup_closure([a, s8.element("(3,4,5)")])
    assert len(h) == 6 and s8.is_cyclic_subset(h)
    x = s8.element("(1,2,3)(4,5)")
    assert s8.subgroup_closure([x]) == s8.cyclic_closure(x).members


def test_is_cyclic_subset_rejects_non_subgroup(s8):
    with pytest.raises(ValueError):
        s8.is_cyclic_subset({0, s8.element("(1,2,3)")})


def test_canonical_generator_examples():
    C6 = group("cyclic:6")
    assert C6.canonical_generator(C6.cyclic_closure(0)) == 0
    assert C6.cyclic_closure(4).members == {0, 2, 4}
    assert C6.canonical_generator(C6.cyclic_closure(4)) == 2
    assert C6.canonical_generator(C6.cyclic_closure(5)) == 1
    assert C6.canonical_generator({0, 2, 4}) == 2


@pytest.mark.parametrize("desc", ["sym:4", "dihedral:9", "alt:5", Q8, "product:cyclic:4,sym:3"])
def test_lagrange_and_closure_sizes(desc):
    G = group(desc)
    for x in range(G.order):
        q = G.element_order(x)
        assert G.order % q == 0
        assert G.cyclic_closure(x).order == q == brute_order(G, x)


@pytest.mark.parametrize("desc", ["sym:5", "dihedral:10", "alt:6"])
def test_canonical_generator_depends_only_on_subgroup(desc):
    G = group(desc)
    by_set = {}
    for x in range(G.order):
        c = G.cyclic_closure(x)
        by_set.setdefault(c.members, set()).add(G.canonical_generator(c))
    assert all(len(v) == 1 for v in by_set.values())


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 119), min_size=1, max_size=3), st.integers(0, 119))
def test_subgroup_closure_idempotent_monotone(gens, extra):
    G = group("sym:5")
    h = G.subgroup_closure(gens)
    assert G.subgroup_closure(h) == h
    assert h <= G.subgroup_closure(gens + [extra])


@pytest.mark.parametrize("desc", ["sym:6", "alt:7", Q8])
def test_permutation_multiply_matches_composition(desc):
    G = group(desc)
    rng = random.Random(1)
    for _ in range(1000):
        a, b, c = (rng.randrange(G.order) for _ in range(3))
        ab_c = G.multiply(G.multiply(a, b), c)
        assert G.permutation(ab_c) == compose(compose(G.permutation(a), G.permutation(b)), G.permutation(c))


@pytest.mark.parametrize("desc", ["sym:4", "dihedral:5", "cyclic:9", Q8,
                                  f"cayley:{FIXTURES / 's3_shifted.cayley'}", "sym:8"])
def test_group_axioms(desc):
    spot_check_group(group(desc))


def test_enumeration_is_breadth_first_and_deterministic():
    a = construct_group("sym:4")
    b = construct_group("sym:4")
    assert [a.permutation(x) for x in range(24)] == [b.permutation(x) for x in range(24)]
    assert a.permutation(0) == (0, 1, 2, 3)
    assert a.generators == (1, 2)
    assert a.permutation(1) == parse_cycles("(1,2,3,4)")
    assert a.permutation(2) == parse_cycles("(1,2)", 4)
    C = group("cyclic:10")
    assert [C.key(x) for x in range(10)] == list(range(10))


def test_cayley_identity_relabelled():
    G = construct_group(f"cayley:{FIXTURES / 's3_shifted.cayley'}")
    assert G.order == 6
    assert all(G.multiply(0, x) == x == G.multiply(x, 0) for x in range(6))
    assert G.order_spectrum() == [1, 2, 3]


def test_cayley_rejects_non_group(tmp_path):
    with pytest.raises(InvalidGroupError, match="associative"):
        construct_group(f"cayley:{FIXTURES / 'loop5.cayley'}")
    bad = tmp_path / "bad.cayley"
    bad.write_text("2\n0 1\n1 1\n")
    with pytest.raises(InvalidGroupError):
        construct_group(f"cayley:{bad}")
    bad.write_text("2\n0 1\n1\n")
    with pytest.raises(InvalidGroupError):
        construct_group(f"cayley:{bad}")


def test_perm_file_without_degree(tmp_path):
    f = tmp_path / "gens.txt"
    f.write_text("# S3 on three points\n\n(1,2)\n(1 2 3)\n")
    G = construct_group(f"perm:{f}")
    assert G.order == 6 and G.degree == 3


def test_q8_fixture():
    G = group(Q8)
    assert G.order == 8
    assert G.order_spectrum() == [1, 2, 4]
    assert G.orders.count(2) == 1


@pytest.mark.parametrize("desc", ["", "cyclic", "cyclic:x", "cyclic:0", "dihedral:1", "sym:0",
                                  "nope:3", "product:cyclic:2", "perm:/no/such/file"])
def test_bad_descriptors(desc):
    with pytest.raises(DescriptorError):
        construct_group(desc)


def test_caps():
    with pytest.raises(CapExceeded):
        construct_group("sym:9")
    with pytest.raises(CapExceeded):
        construct_group("cyclic:100", cap=50)
    with pytest.raises(CapExceeded):
        construct_group("product:sym:5,sym:5", cap=1000)


def test_cycle_notation_round_trip():
    p = parse_cycles("(1,3,5)(2,4)", 6)
    assert p == (2, 3, 4, 1, 0, 5)
    assert format_cycles(p) == "(1,3,5)(2,4)"
    assert format_cycles(parse_cycles("()", 3)) == "()"
    for bad in ["(1,1)", "(1,2)(2,3)", "1,2", "(a)", "(0,1)"]:
        with pytest.raises(DescriptorError):
            parse_cycles(bad)
    with pytest.raises(DescriptorError):
        parse_cycles("(1,9)", 8)


def test_invalid_ids():
    G = group("cyclic:5")
    with pytest.raises(IndexError):
        G.element_order(5)
    with pytest.raises(IndexError):
        G.cyclic_closure(-1)

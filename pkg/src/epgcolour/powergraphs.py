"""Power graph, enhanced power graph, their difference, and the prime graph.

Pairwise predicates work on any group without building a graph.  Full
graphs are built for groups up to ``GRAPH_CAP`` elements.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

from .divisors import prime_divisors, primes_in_half_interval
from .errors import CapExceeded
from .graphs import SimpleGraph
from .groups import FiniteGroup

GRAPH_CAP = 2000
KINDS = ("power", "enhanced", "delta")

# per-group memo: unordered pair of canonical generators -> <x,y> is cyclic
_pair_cache: "weakref.WeakKeyDictionary[FiniteGroup, dict]" = weakref.WeakKeyDictionary()


def _distinct(x, y):
    if x == y:
        raise ValueError(f"adjacency is irreflexive; got x = y = {x}")


def power_adjacent(G: FiniteGroup, x: int, y: int) -> bool:
    """One of x, y is a power of the other."""
    _distinct(x, y)
    return y in G.cyclic_closure(x).members or x in G.cyclic_closure(y).members


def enhanced_adjacent(G: FiniteGroup, x: int, y: int) -> bool:
    """<x, y> is cyclic.

    Non-commuting pairs are rejected straight away (a cyclic group is
    abelian).  Otherwise the closure of {x, y} is computed and tested,
    memoised on the pair of cyclic subgroups <x>, <y>.
    """
    _distinct(x, y)
    if not G.commute(x, y):
        return False
    gx = G.canonical_generator(G.cyclic_closure(x))
    gy = G.canonical_generator(G.cyclic_closure(y))
    key = (gx, gy) if gx <= gy else (gy, gx)
    cache = _pair_cache.get(G)
    if cache is None:
        cache = _pair_cache.setdefault(G, {})
    got = cache.get(key)
    if got is None:
        got = G.is_cyclic_subset(G.subgroup_closure((x, y)), check=False)
        cache[key] = got
    return got


def delta_adjacent(G: FiniteGroup, x: int, y: int) -> bool:
    """Joined in the enhanced power graph but not in the power graph."""
    return enhanced_adjacent(G, x, y) and not power_adjacent(G, x, y)


_PREDICATES = {"power": power_adjacent, "enhanced": enhanced_adjacent, "delta": delta_adjacent}


def build_graph(G: FiniteGroup, kind: str, cap: int = GRAPH_CAP, method: str = "subgroups") -> SimpleGraph:
    """Materialise one of the graphs on all of G; vertex id = element id.

    ``method="subgroups"`` unions cliques over the cyclic subgroups <x>
    (x ~ y in the enhanced power graph exactly when both lie in one <z>).
    ``method="pairwise"`` evaluates the predicate on every unordered pair
    and is kept as the slow independent route.  Vertex labels are element
    orders.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {KINDS}")
    n = G.order
    if n > cap:
        raise CapExceeded(f"build_graph({G.name}, {kind})", n, cap)
    labels = G.orders
    if method == "pairwise":
        pred = _PREDICATES[kind]
        rows = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if pred(G, u, v):
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        return SimpleGraph(n, rows, labels, check=False)
    if method != "subgroups":
        raise ValueError(f"unknown method {method!r}")

    power = [0] * n
    enhanced = [0] * n
    done: set[frozenset] = set()
    for x in range(n):
        c = G.cyclic_closure(x)
        mask = 0
        for y in c.elements:
            mask |= 1 << y
            power[y] |= 1 << x
        power[x] |= mask
        if kind != "power" and c.members not in done:
            done.add(c.members)
            for y in c.elements:
                enhanced[y] |= mask
    for x in range(n):
        power[x] &= ~(1 << x)
        enhanced[x] &= ~(1 << x)
    if kind == "power":
        rows = power
    elif kind == "enhanced":
        rows = enhanced
    else:
        rows = [e & ~p for e, p in zip(enhanced, power)]
    return SimpleGraph(n, rows, labels, check=False)


@dataclass(frozen=True)
class GkGraph:
    """Prime graph: prime divisors of |G|, p ~ q when G has an element of order pq."""

    primes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def adjacent(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        parent = {p: p for p in self.primes}

        def find(p):
            while parent[p] != p:
                parent[p] = parent[parent[p]]
                p = parent[p]
            return p

        for p, q in self.edges:
            parent[find(p)] = find(q)
        groups: dict[int, list[int]] = {}
        for p in self.primes:
            groups.setdefault(find(p), []).append(p)
        return sorted(groups.values())

    def isolated(self) -> list[int]:
        touched = {p for e in self.edges for p in e}
        return [p for p in self.primes if p not in touched]


def build_gk_graph(G: FiniteGroup) -> GkGraph:
    """Edges read off the order spectrum: pq divides some element order."""
    primes = tuple(prime_divisors(G.order)) if G.order > 1 else ()
    spectrum = G.order_spectrum()
    edges = frozenset(
        (p, q) for i, p in enumerate(primes) for q in primes[i + 1:]
        if any(m % (p * q) == 0 for m in spectrum))
    return GkGraph(primes, edges)


def gk_component_count(g: GkGraph) -> int:
    return len(g.components())


def large_primes(G: FiniteGroup) -> list[int]:
    """Primes p dividing |G| with n/2 < p <= n, n the largest element order."""
    n = G.max_element_order()
    return [p for p in primes_in_half_interval(n) if G.order % p == 0]


def isolated_large_primes(G: FiniteGroup, gk: GkGraph | None = None) -> list[int]:
    """Those of :func:`large_primes` that the prime graph shows isolated."""
    gk = gk or build_gk_graph(G)
    iso = set(gk.isolated())
    return [p for p in large_primes(G) if p in iso]

"""Colouring the enhanced power graph with max-element-order colours.

An element x of order q is coloured from A_q.  The generators of one cyclic
subgroup C of order q receive distinct members of A_q: with g the smallest
generator id of C and x = g**k, x gets the r-th smallest member of A_q,
where r is the rank of k among 1..q coprime to q.  Elements of equal order
in different cyclic subgroups are never adjacent, so the colours repeat.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapExceeded
from .farey import ColourFamily, Report, build_colour_families, verify_colour_families
from .graphs import (CHROMATIC_CAP, CLIQUE_CAP, Colouring, chromatic_number_exact,
                     clique_number_exact, is_proper_colouring)
from .groups import FiniteGroup
from .powergraphs import GRAPH_CAP, build_graph, enhanced_adjacent

# same-colour pairs checked one by one up to this many, sampled beyond
PAIR_BUDGET = 2_000_000
PAIR_SAMPLES = 200_000
# pairwise check of the clique witness up to this size
WITNESS_PAIRWISE_MAX = 200


def colour_group(G: FiniteGroup, family: ColourFamily | None = None) -> Colouring:
    n = G.max_element_order()
    fam = family if family is not None else build_colour_families(n)
    if fam.n != n:
        raise ValueError(f"family built for n = {fam.n}, group needs n = {n}")
    colours = [0] * G.order
    for x in range(G.order):
        if colours[x]:
            continue
        c = G.cyclic_closure(x)
        q = c.order
        g = G.canonical_generator(c)
        powers = c.elements if g == x else G.cyclic_closure(g).elements
        pool = fam[q]
        for rank, k in enumerate(k for k in range(1, q + 1) if math.gcd(k, q) == 1):
            colours[powers[k % q]] = pool[rank]
    return Colouring(colours, n)


def rainbow_subgroups(G: FiniteGroup, colours) -> Report:
    """Every cyclic subgroup <z> receives pairwise distinct colours.

    Every edge x ~ y of the enhanced power graph lies inside <z> for a
    generator z of <x, y>, so this covers all edges.
    """
    report = Report("cyclic subgroups rainbow")
    seen = set()
    for z in range(G.order):
        elems = G.power_list(z)
        key = frozenset(elems)
        if key in seen:
            continue
        seen.add(key)
        report.checked += 1
        cols = [colours[e] for e in elems]
        if len(set(cols)) != len(cols):
            first = {}
            for e, col in zip(elems, cols):
                if col in first:
                    report.violations.append((first[col], e))
                    break
                first[col] = e
    return report


def same_colour_pairs(G: FiniteGroup, colours, budget: int = PAIR_BUDGET,
                      samples: int = PAIR_SAMPLES, seed: int = 0) -> tuple[Report, bool]:
    """Check same-coloured pairs with :func:`enhanced_adjacent`.

    Pairs of different colours cannot break properness, so when the number
    of same-coloured pairs fits in ``budget`` this is an exhaustive check.
    Beyond that a fixed-seed sample is checked.  Returns the report and
    whether the check was exhaustive.
    """
    classes: dict[int, list[int]] = {}
    for v, col in enumerate(colours):
        classes.setdefault(col, []).append(v)
    total = sum(len(c) * (len(c) - 1) // 2 for c in classes.values())
    exhaustive = total <= budget
    report = Report("same-colour pairs " + ("exhaustive" if exhaustive else "sampled"))
    if exhaustive:
        pairs = (pr for members in classes.values() for pr in combinations(members, 2))
    else:
        rng = random.Random(seed)
        big = [m for m in classes.values() if len(m) > 1]
        weights = [len(m) * (len(m) - 1) for m in big]

        def draw():
            for members in rng.choices(big, weights, k=samples):
                yield tuple(rng.sample(members, 2))
        pairs = draw()
    for u, v in pairs:
        report.checked += 1
        if enhanced_adjacent(G, u, v):
            report.violations.append((u, v))
            break
    return report, exhaustive


def _verdict(report: Report, **extra) -> dict:
    out = {"status": "pass" if report.ok else "fail", "checks": report.checked}
    if report.violations:
        out["violations"] = [list(_plain(v)) if isinstance(v, tuple) else v for v in report.violations[:10]]
    out.update(extra)
    return out


def _plain(v):
    return tuple(list(x) if isinstance(x, tuple) else x for x in v)


@dataclass
class Certificate:
    """Evidence that clique number = chromatic number = n for the EPG of G."""

    group: str
    group_order: int
    n: int
    witness_generator: int
    clique_witness: list[int]
    witness_orders: list[int]
    colouring: Colouring
    verdicts: dict = field(default_factory=dict)
    timings_ms: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v.get("status") == "pass" for v in self.verdicts.values())

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "group_order": self.group_order,
            "n": self.n,
            "clique_witness": {
                "generator": self.witness_generator,
                "elements": self.clique_witness,
                "orders": self.witness_orders,
            },
            "colouring": {
                "palette_size": self.colouring.palette_size,
                "colours": list(self.colouring.colours),
            },
            "verdicts": self.verdicts,
            "timings_ms": self.timings_ms,
            "ok": self.ok,
        }


def clique_witness(G: FiniteGroup) -> list[int]:
    """<x> for the smallest-id x of maximal order."""
    n = G.max_element_order()
    x = G.orders.index(n)
    return list(G.cyclic_closure(x).elements)


def check_clique_witness(G: FiniteGroup, elements, n: int) -> Report:
    report = Report("clique witness")
    elements = list(elements)
    if len(set(elements)) != n or len(elements) != n:
        report.violations.append(("size", len(set(elements)), n))
        return report
    if n <= WITNESS_PAIRWISE_MAX:
        for x, y in combinations(elements, 2):
            report.checked += 1
            if not enhanced_adjacent(G, x, y):
                report.violations.append((x, y))
    else:
        # all powers of one element of order n
        g = elements[1] if n > 1 else elements[0]
        report.checked += 1
        if set(G.power_list(g)) != set(elements):
            report.violations.append(("not cyclic", g))
    return report


def check_properness(G: FiniteGroup, colouring: Colouring, graph_cap: int = GRAPH_CAP) -> dict:
    verdicts = {}
    rb = rainbow_subgroups(G, colouring.colours)
    verdicts["rainbow_subgroups"] = _verdict(rb)
    pairs, exhaustive = same_colour_pairs(G, colouring.colours)
    verdicts["same_colour_pairs"] = _verdict(pairs, exhaustive=exhaustive)
    if G.order <= graph_cap:
        epg = build_graph(G, "enhanced", cap=graph_cap)
        proper = is_proper_colouring(epg, colouring)
        verdicts["graph_properness"] = {
            "status": "pass" if proper else "fail",
            "checks": epg.edge_count(),
            **({} if proper else {"violations": [list(proper.witness)]}),
        }
    return verdicts


def verify_weak_perfectness(
    G: FiniteGroup,
    exact: bool = False,
    graph_cap: int = GRAPH_CAP,
    clique_cap: int = CLIQUE_CAP,
    chromatic_cap: int = CHROMATIC_CAP,
) -> Certificate:
    """Certify clique number = chromatic number = max element order.

    The clique witness is a cyclic subgroup of order n, the colouring uses
    only n colours.  With ``exact`` the enhanced power graph is also built
    and solved exactly; CapExceeded is raised if it is too large for that.
    """
    if exact:
        for what, cap in (("graph", graph_cap), ("clique", clique_cap), ("chromatic", chromatic_cap)):
            if G.order > cap:
                raise CapExceeded(f"exact {what} cross-check for {G.name}", G.order, cap)
    timings = {}
    t0 = time.perf_counter()
    n = G.max_element_order()
    fam = build_colour_families(n)
    colouring = colour_group(G, fam)
    timings["colour"] = round((time.perf_counter() - t0) * 1000)

    witness = clique_witness(G)
    verdicts = {}
    t0 = time.perf_counter()
    verdicts["families"] = _verdict(verify_colour_families(fam))
    verdicts["clique_witness"] = _verdict(check_clique_witness(G, witness, n))
    used = colouring.distinct()
    verdicts["palette"] = {"status": "pass" if used <= n else "fail",
                           "colours_used": used, "palette_size": n}
    verdicts.update(check_properness(G, colouring, graph_cap))
    timings["verify"] = round((time.perf_counter() - t0) * 1000)

    if exact:
        t0 = time.perf_counter()
        epg = build_graph(G, "enhanced", cap=graph_cap)
        cl = clique_number_exact(epg, cap=clique_cap)
        verdicts["exact_clique"] = {"status": "pass" if cl.size == n else "fail",
                                    "value": cl.size, "witness": list(cl.vertices)}
        ch = chromatic_number_exact(epg, cap=chromatic_cap)
        verdicts["exact_chromatic"] = {"status": "pass" if ch.number == n else "fail",
                                       "value": ch.number}
        timings["exact"] = round((time.perf_counter() - t0) * 1000)

    return Certificate(
        group=G.name, group_order=G.order, n=n,
        witness_generator=witness[1] if n > 1 else 0,
        clique_witness=witness, witness_orders=[G.element_order(x) for x in witness],
        colouring=colouring, verdicts=verdicts, timings_ms=timings)


def validate_certificate(data: dict, G: FiniteGroup) -> Report:
    """Re-check an emitted certificate against freshly built adjacency."""
    report = Report("certificate")
    n = G.max_element_order()
    if data.get("group_order") != G.order:
        report.violations.append(("group_order", data.get("group_order"), G.order))
        return report
    if data.get("n") != n:
        report.violations.append(("n", data.get("n"), n))
    col = data["colouring"]
    colours = col["colours"]
    if len(colours) != G.order or col["palette_size"] != n or any(
            not 1 <= c <= n for c in colours):
        report.violations.append(("colouring shape",))
        return report
    colouring = Colouring(colours, n)
    wit = check_clique_witness(G, data["clique_witness"]["elements"], n)
    report.checked += wit.checked
    report.violations.extend(wit.violations)
    for name, v in check_properness(G, colouring).items():
        report.checked += v["checks"]
        if v["status"] != "pass":
            report.violations.append((name, v.get("violations")))
    return report

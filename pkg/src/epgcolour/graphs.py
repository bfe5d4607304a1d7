"""Simple graphs on bit-packed adjacency, with exact small-instance solvers.

Adjacency rows are Python integers used as bitsets: bit ``v`` of
``rows[u]`` is set iff u and v are joined.  The solvers here exist to
cross-check results on small graphs; none of them is meant for large,
hard instances.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, NamedTuple, Sequence

from .errors import CapExceeded

CLIQUE_CAP = 2000
CHROMATIC_CAP = 128


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """Finite undirected graph without loops on vertices ``0 .. n-1``."""

    __slots__ = ("vertex_count", "_rows", "labels")

    def __init__(self, vertex_count: int, rows: Sequence[int] | None = None,
                 labels: Sequence[Any] | None = None, check: bool = True):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        self.vertex_count = vertex_count
        self._rows = tuple(rows) if rows is not None else (0,) * vertex_count
        if len(self._rows) != vertex_count:
            raise ValueError("need one adjacency row per vertex")
        if labels is not None and len(labels) != vertex_count:
            raise ValueError("need one label per vertex")
        self.labels = tuple(labels) if labels is not None else None
        if check:
            full = (1 << vertex_count) - 1
            for u, row in enumerate(self._rows):
                if row >> u & 1:
                    raise ValueError(f"self-loop at {u}")
                if row & ~full:
                    raise ValueError(f"row {u} mentions a vertex out of range")
                for v in _bits(row):
                    if not self._rows[v] >> u & 1:
                        raise ValueError(f"asymmetric adjacency {u}-{v}")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]],
                   labels=None) -> SimpleGraph:
        rows = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {u}-{v} out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(vertex_count, rows, labels, check=False)

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << u) for u in range(n)], check=False)

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._rows == other._rows

    def __hash__(self):
        return hash((self.vertex_count, self._rows))

    def __repr__(self):
        return f"<SimpleGraph n={self.vertex_count} m={self.edge_count()}>"

    def row(self, u: int) -> int:
        return self._rows[u]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbours(self, u: int) -> list[int]:
        return list(_bits(self._rows[u]))

    def degree(self, u: int) -> int:
        return self._rows[u].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self._rows):
            yield from ((u, v) for v in _bits(row >> (u + 1) << (u + 1)))

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def induced_subgraph(self, vs: Sequence[int]) -> SimpleGraph:
        """Subgraph on ``vs``; vertex i of the result is ``vs[i]``."""
        vs = list(vs)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertex in induced_subgraph")
        for v in vs:
            if not 0 <= v < self.vertex_count:
                raise ValueError(f"invalid vertex {v}")
        rows = []
        for u in vs:
            r = self._rows[u]
            rows.append(sum(1 << i for i, v in enumerate(vs) if r >> v & 1))
        labels = [self.labels[v] for v in vs] if self.labels is not None else None
        return SimpleGraph(len(vs), rows, labels, check=False)


@dataclass(frozen=True)
class Colouring:
    """Colour of each vertex, drawn from ``1 .. palette_size``."""

    colours: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))
        bad = [c for c in self.colours if not 1 <= c <= self.palette_size]
        if bad:
            raise ValueError(f"colour {bad[0]} outside 1..{self.palette_size}")

    def __len__(self):
        return len(self.colours)

    def __getitem__(self, v):
        return self.colours[v]

    def distinct(self) -> int:
        return len(set(self.colours))


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome plus the evidence behind it."""

    ok: bool
    witness: Any = None

    def __bool__(self):
        return self.ok


class Clique(NamedTuple):
    size: int
    vertices: tuple[int, ...]


class Chromatic(NamedTuple):
    number: int
    colouring: Colouring


def is_proper_colouring(g: SimpleGraph, c: Colouring | Sequence[int]) -> Verdict:
    """Proper iff no edge is monochromatic; the witness is the first bad edge."""
    colours = c.colours if isinstance(c, Colouring) else tuple(c)
    if len(colours) != g.vertex_count:
        raise ValueError(f"colouring covers {len(colours)} vertices, graph has {g.vertex_count}")
    classes: dict[int, int] = {}
    for v, col in enumerate(colours):
        classes[col] = classes.get(col, 0) | 1 << v
    for u, col in enumerate(colours):
        clash = g.row(u) & classes[col] & ~((1 << (u + 1)) - 1)
        if clash:
            return Verdict(False, (u, (clash & -clash).bit_length() - 1))
    return Verdict(True)


def is_clique(g: SimpleGraph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(g.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def _colour_sort(rows, P):
    """Greedy sequential colouring of the bitset P.

    Returns vertices and their colour numbers with colours non-decreasing,
    so the colour of the i-th vertex bounds any clique inside the first i+1.
    """
    order, bounds = [], []
    k = 0
    U = P
    while U:
        k += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~rows[v] & ~low
            U &= ~low
            order.append(v)
            bounds.append(k)
    return order, bounds


def clique_number_exact(g: SimpleGraph, cap: int = CLIQUE_CAP) -> Clique:
    """Maximum clique by branch and bound with greedy-colouring bounds."""
    n = g.vertex_count
    if n > cap:
        raise CapExceeded("clique_number_exact", n, cap)
    if n == 0:
        return Clique(0, ())

    # relabel by non-increasing degree, ties by ascending id
    perm = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(perm)}
    rows = [0] * n
    for i, v in enumerate(perm):
        rows[i] = sum(1 << pos[w] for w in _bits(g.row(v)))

    best = _greedy_clique(rows, n)

    clique: list[int] = []

    def expand(P):
        nonlocal best
        order, bounds = _colour_sort(rows, P)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best):
                return
            v = order[i]
            clique.append(v)
            newP = P & rows[v]
            if newP:
                expand(newP)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            P &= ~(1 << v)

    expand((1 << n) - 1)
    witness = tuple(sorted(perm[i] for i in best))
    return Clique(len(witness), witness)


def _greedy_clique(rows, n):
    clique = []
    cand = (1 << n) - 1
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique.append(v)
        cand &= rows[v]
    return clique


def clique_number(g: SimpleGraph, cap: int = CLIQUE_CAP) -> int:
    return clique_number_exact(g, cap).size


def dsatur_colouring(g: SimpleGraph) -> list[int]:
    """Greedy saturation-degree colouring; colours are 0-based."""
    n = g.vertex_count
    colour = [-1] * n
    in_class: list[int] = []
    uncoloured = set(range(n))
    while uncoloured:
        v = max(uncoloured, key=lambda u: (
            sum(1 for m in in_class if g.row(u) & m), g.degree(u), -u))
        used = {c for c, m in enumerate(in_class) if g.row(v) & m}
        c = next(c for c in range(len(in_class) + 1) if c not in used)
        if c == len(in_class):
            in_class.append(0)
        in_class[c] |= 1 << v
        colour[v] = c
        uncoloured.discard(v)
    return colour


def _k_colouring(g: SimpleGraph, k: int) -> list[int] | None:
    """Backtracking search for a proper k-colouring, DSATUR branching."""
    n = g.vertex_count
    rows = [g.row(v) for v in range(n)]
    degree = [g.degree(v) for v in range(n)]
    colour = [-1] * n
    classes = [0] * k

    def pick(uncol):
        best = None
        best_key = None
        for u in _bits(uncol):
            forbidden = 0
            for c in range(k):
                if rows[u] & classes[c]:
                    forbidden |= 1 << c
            key = (forbidden.bit_count(), degree[u])
            if best_key is None or key > best_key:
                best, best_key, best_forbidden = u, key, forbidden
        return best, best_forbidden

    def search(uncol, used):
        if not uncol:
            return True
        v, forbidden = pick(uncol)
        # a fresh colour is only tried once: colours used so far are symmetric otherwise
        for c in range(min(used + 1, k)):
            if forbidden >> c & 1:
                continue
            colour[v] = c
            classes[c] |= 1 << v
            if search(uncol & ~(1 << v), max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            colour[v] = -1
        return False

    if search((1 << n) - 1, 0):
        return colour
    return None


def chromatic_number_exact(g: SimpleGraph, cap: int = CHROMATIC_CAP) -> Chromatic:
    """Least k with a proper k-colouring, by iterative deepening from the
    clique bound up to the DSATUR bound."""
    n = g.vertex_count
    if n > cap:
        raise CapExceeded("chromatic_number_exact", n, cap)
    if n == 0:
        return Chromatic(0, Colouring((), 1))
    greedy = dsatur_colouring(g)
    upper = max(greedy) + 1
    best = greedy
    lower = clique_number_exact(g).size
    for k in range(lower, upper):
        found = _k_colouring(g, k)
        if found is not None:
            best = found
            break
    number = max(best) + 1
    return Chromatic(number, Colouring([c + 1 for c in best], number))


def is_bipartite(g: SimpleGraph) -> Verdict:
    """Two-colour by BFS.

    On success the witness is the side (0 or 1) of each vertex; on failure
    it is an odd cycle, listed so consecutive vertices (and last, first) are
    adjacent.
    """
    n = g.vertex_count
    side = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in _bits(g.row(u)):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return Verdict(False, _odd_cycle(u, v, parent, depth))
    return Verdict(True, tuple(side))


def _odd_cycle(u, v, parent, depth):
    left, right = [u], [v]
    while depth[u] > depth[v]:
        u = parent[u]
        left.append(u)
    while depth[v] > depth[u]:
        v = parent[v]
        right.append(v)
    while u != v:
        u, v = parent[u], parent[v]
        left.append(u)
        right.append(v)
    right.pop()  # common ancestor already in left
    return tuple(left + right[::-1])

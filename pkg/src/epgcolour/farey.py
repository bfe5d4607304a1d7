"""Colour families from the ceiling map on Farey fractions.

For a bound n, every reduced fraction p/q in (0, 1] with q <= n is sent to
ceil(n*p/q) in {1..n}.  The family A_q is the image of the fractions with
denominator q.  Two distinct fractions only collide when the lcm of their
denominators exceeds n, which gives

* |A_q| = phi(q), and
* A_q and A_q' are disjoint whenever lcm(q, q') <= n.

All arithmetic is on integers; nothing here touches floating point.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .divisors import totient


def farey_fractions(n: int) -> list[Fraction]:
    """Reduced fractions in (0, 1] with denominator <= n, ascending."""
    if n < 1:
        raise ValueError(f"farey_fractions needs n >= 1, got {n}")
    a, b, c, d = 0, 1, 1, n
    out = []
    while c <= n:
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        out.append(Fraction(a, b))
    return out


def ceil_map(fr: Fraction | tuple[int, int], n: int) -> int:
    """ceil(n*p/q), for p/q in lowest terms with 0 < p/q <= 1 and q <= n."""
    p, q = (fr.numerator, fr.denominator) if isinstance(fr, Fraction) else fr
    if q < 1 or not 0 < p <= q or math.gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not a reduced fraction in (0, 1]")
    if q > n:
        raise ValueError(f"denominator {q} exceeds n = {n}")
    return (n * p + q - 1) // q


class _ReducedPairs:
    """Numerators and denominators of all reduced p/q, grouped by q.

    Grown on demand; a reader always sees a complete snapshot.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._snap = (0, np.zeros(0, np.int64), np.zeros(0, np.int64), np.zeros(2, np.int64))

    def get(self, n):
        snap = self._snap
        if snap[0] >= n:
            return snap
        with self._lock:
            if self._snap[0] < n:
                limit = max(n, 2 * self._snap[0], 64)
                ps, qs = [], []
                for q in range(1, limit + 1):
                    p = np.arange(1, q + 1, dtype=np.int64)
                    p = p[np.gcd(p, q) == 1]
                    ps.append(p)
                    qs.append(np.full(len(p), q, dtype=np.int64))
                starts = np.zeros(limit + 2, np.int64)
                starts[2:] = np.cumsum([len(p) for p in ps])
                self._snap = (limit, np.concatenate(ps), np.concatenate(qs), starts)
            return self._snap


_PAIRS = _ReducedPairs()


@dataclass(frozen=True)
class ColourFamily:
    """Sets A_1 .. A_n, each a sorted tuple; ``family[q]`` is A_q."""

    n: int
    sets: tuple[tuple[int, ...], ...]

    def __getitem__(self, q: int) -> tuple[int, ...]:
        if not 1 <= q <= len(self.sets):
            raise IndexError(f"no set A_{q} for n = {self.n}")
        return self.sets[q - 1]

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def render(self) -> str:
        return "\n".join(
            f"A_{q} = {{{', '.join(map(str, s))}}}" for q, s in enumerate(self.sets, 1))


def build_colour_families(n: int) -> ColourFamily:
    if n < 1:
        raise ValueError(f"build_colour_families needs n >= 1, got {n}")
    _, P, Q, starts = _PAIRS.get(n)
    end = starts[n + 1]
    values = (n * P[:end] + Q[:end] - 1) // Q[:end]
    sets = tuple(
        tuple(np.unique(values[starts[q]:starts[q + 1]]).tolist()) for q in range(1, n + 1))
    return ColourFamily(n, sets)


@dataclass
class Report:
    """What a verifier checked and every violation it found."""

    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        status = "pass" if self.ok else f"FAIL ({len(self.violations)} violations)"
        return f"{self.name}: {status}, {self.checked} checks"


@lru_cache(maxsize=None)
def _pairs_with_lcm(L: int) -> tuple[tuple[int, int], ...]:
    divs = [d for d in range(1, L + 1) if L % d == 0]
    return tuple((a, b) for i, a in enumerate(divs) for b in divs[i + 1:]
                 if a // math.gcd(a, b) * b == L)


def lcm_bounded_pairs(n: int) -> list[tuple[int, int]]:
    """All q < q' <= n with lcm(q, q') <= n."""
    return [pr for L in range(1, n + 1) for pr in _pairs_with_lcm(L)]


def verify_colour_families(fam: ColourFamily | Sequence[Sequence[int]], n: int | None = None) -> Report:
    """Check |A_q| = phi(q) and disjointness whenever lcm(q, q') <= n.

    Accepts a ColourFamily or a plain list A_1..A_n (for hand-made families).
    Violations are ``("size", q, got, expected)``, ``("range", q, colour)`` or
    ``("overlap", q, q', common)``.
    """
    if isinstance(fam, ColourFamily):
        n = fam.n
        sets = fam.sets
    else:
        sets = tuple(tuple(s) for s in fam)
        n = len(sets) if n is None else n
    report = Report("colour families")
    if len(sets) != n:
        report.violations.append(("count", len(sets), n))
        return report
    members = [frozenset(s) for s in sets]
    for q, s in enumerate(members, 1):
        report.checked += 1
        if len(s) != totient(q) or len(s) != len(sets[q - 1]):
            report.violations.append(("size", q, len(sets[q - 1]), totient(q)))
        for c in sorted(s):
            if not 1 <= c <= n:
                report.violations.append(("range", q, c))
    for q, q2 in lcm_bounded_pairs(n):
        report.checked += 1
        common = members[q - 1] & members[q2 - 1]
        if common:
            report.violations.append(("overlap", q, q2, tuple(sorted(common))))
    return report


def verify_key_observation(n: int) -> Report:
    """Every pair of distinct fractions with equal ceiling value has lcm > n.

    Scans all colliding pairs exhaustively.  Violations are
    ``((p, q), (p', q'), value)``.
    """
    if n < 1:
        raise ValueError(f"verify_key_observation needs n >= 1, got {n}")
    _, P, Q, starts = _PAIRS.get(n)
    end = starts[n + 1]
    P, Q = P[:end], Q[:end]
    values = (n * P + Q - 1) // Q
    order = np.argsort(values, kind="stable")
    values, P, Q = values[order], P[order], Q[order]
    bounds = np.flatnonzero(np.diff(values)) + 1
    report = Report(f"key observation n={n}")
    for lo, hi in zip(np.r_[0, bounds], np.r_[bounds, len(values)]):
        k = hi - lo
        if k < 2:
            continue
        d = Q[lo:hi]
        iu = np.triu_indices(k, 1)
        lcms = np.lcm.outer(d, d)[iu]
        report.checked += len(lcms)
        for i in np.flatnonzero(lcms <= n):
            a, b = lo + iu[0][i], lo + iu[1][i]
            report.violations.append(((int(P[a]), int(Q[a])), (int(P[b]), int(Q[b])), int(values[a])))
    return report

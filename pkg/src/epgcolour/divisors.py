"""Totients, divisor lattices and maximum antichains in them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

TRIAL_DIVISION_BOUND = 10**6
INT64_MAX = 2**63 - 1
BRUTEFORCE_DIVISOR_MAX = 24


class FactorisationError(ArithmeticError):
    """n has a prime factor larger than the trial-division bound can certify."""


@lru_cache(maxsize=4096)
def factorise(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation as ascending ``(prime, exponent)`` pairs."""
    if n < 1:
        raise ValueError(f"factorise needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if p > TRIAL_DIVISION_BOUND:
            raise FactorisationError(f"{n} not factorable by trial division to {TRIAL_DIVISION_BOUND}")
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def totient(q: int) -> int:
    if q < 1:
        raise ValueError(f"totient needs q >= 1, got {q}")
    result = q
    for p, _ in factorise(q):
        result -= result // p
    return result


def lcm_checked(a: int, b: int, limit: int = INT64_MAX) -> int:
    """lcm(a, b), raising OverflowError instead of exceeding ``limit``."""
    if a < 1 or b < 1:
        raise ValueError("lcm_checked needs positive arguments")
    result = a // math.gcd(a, b) * b
    if result > limit:
        raise OverflowError(f"lcm({a}, {b}) = {result} exceeds {limit}")
    return result


@dataclass(frozen=True)
class DivisorLattice:
    n: int
    divisors: tuple[int, ...]
    prime_factorisation: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        """Number of prime factors of n counted with multiplicity."""
        return sum(e for _, e in self.prime_factorisation)

    def level(self, k: int) -> list[int]:
        return [d for d in self.divisors if big_omega(d) == k]


def big_omega(n: int) -> int:
    return sum(e for _, e in factorise(n))


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorise(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def divisor_lattice(n: int) -> DivisorLattice:
    return DivisorLattice(n, tuple(divisors(n)), factorise(n))


def level_sizes(n: int) -> list[int]:
    """Number of divisors of n with exactly k prime factors, k = 0..m.

    Coefficients of the product of (1 + x + ... + x^e) over the prime powers.
    """
    sizes = [1]
    for _, e in factorise(n):
        nxt = [0] * (len(sizes) + e)
        for i, c in enumerate(sizes):
            for j in range(e + 1):
                nxt[i + j] += c
        sizes = nxt
    return sizes


def alpha_de_bruijn(n: int) -> int:
    """Largest antichain of the divisor lattice of n: a middle level."""
    sizes = level_sizes(n)
    m = len(sizes) - 1
    return max(sizes[m // 2], sizes[(m + 1) // 2])


def alpha_bruteforce(n: int) -> int:
    """Largest antichain of the divisor lattice by exhaustive search.

    Antichains are the independent sets of the divisibility comparability
    graph; the search branches on the lowest remaining divisor, with a
    memo on the remaining candidate set.
    """
    divs = divisors(n)
    k = len(divs)
    if k > BRUTEFORCE_DIVISOR_MAX:
        raise ValueError(f"{n} has {k} divisors, over the bound {BRUTEFORCE_DIVISOR_MAX}")
    comparable = [0] * k
    for i, a in enumerate(divs):
        for j, b in enumerate(divs):
            if i != j and (a % b == 0 or b % a == 0):
                comparable[i] |= 1 << j

    memo: dict[int, int] = {0: 0}

    def best(cand: int) -> int:
        got = memo.get(cand)
        if got is not None:
            return got
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand & ~low
        got = max(best(rest), 1 + best(rest & ~comparable[v]))
        memo[cand] = got
        return got

    return best((1 << k) - 1)


def delta_clique_number(G) -> int:
    """Max of alpha(n) over the element orders of G."""
    return max(alpha_de_bruijn(n) for n in G.order_spectrum())


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def primes_in_half_interval(n: int) -> list[int]:
    """Primes p with n/2 < p <= n."""
    return [p for p in primes_up_to(n) if 2 * p > n]


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorise(n)]


def lcm_all(nums) -> int:
    return reduce(lcm_checked, nums, 1)

"""Exact Frobenius numbers via shortest paths over residue classes.

g(a_1,...,a_d) is the largest integer with no nonnegative representation
sum m_k a_k.  The solver computes, for each residue r mod a_1, the minimal
representable integer in that class (the Apery set) with a Dijkstra
relaxation on a_1 nodes, then takes max - a_1.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Triple:
    """Sorted pairwise-coprime (a, b, c)."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if not 0 < a < b < c:
            raise ValueError(f"need 0 < a < b < c, got ({a}, {b}, {c})")
        for u, v in ((a, b), (a, c), (b, c)):
            if math.gcd(u, v) != 1:
                raise ValueError(f"({a}, {b}, {c}) is not pairwise coprime: gcd({u},{v}) > 1")

    @classmethod
    def of(cls, *values: int) -> "Triple":
        if len(values) != 3:
            raise ValueError(f"a triple needs exactly 3 values, got {len(values)}")
        a, b, c = sorted(values)
        return cls(a, b, c)

    @property
    def sum(self) -> int:
        return self.a + self.b + self.c

    @property
    def product(self) -> int:
        return self.a * self.b * self.c


def _normalize_parts(parts) -> tuple[int, ...]:
    vals = tuple(sorted(set(int(v) for v in parts)))
    if not vals:
        raise ValueError("parts must be nonempty")
    if vals[0] < 1:
        raise ValueError(f"parts must be positive integers, got {vals}")
    if math.gcd(*vals) != 1:
        raise ValueError(f"gcd of parts must be 1, got gcd = {math.gcd(*vals)}")
    if len(vals) < 2 and vals[0] != 1:
        raise ValueError("need at least two parts")
    return vals


def is_representable(n: int, parts) -> bool:
    """True iff n = sum m_k a_k has a solution in nonnegative integers."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    vals = tuple(int(v) for v in parts)
    if not vals or min(vals) < 1:
        raise ValueError(f"parts must be positive integers, got {vals}")
    if n == 0:
        return True
    # bitset DP: bit k of reach says k is representable
    mask = (1 << (n + 1)) - 1
    reach = 1
    for a in vals:
        sh = a
        while sh <= n:
            reach |= (reach << sh) & mask
            sh <<= 1
    return (reach >> n) & 1 == 1


def frobenius_exact(parts) -> int:
    """Largest non-representable integer; -1 when some part equals 1.

    Shortest-path relaxation over the a_1 residue classes: dist[r] is the
    minimal representable value congruent to r mod a_1.
    """
    vals = _normalize_parts(parts)
    if vals[0] == 1:
        return -1
    a1 = vals[0]
    others = vals[1:]
    dist = [None] * a1
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for w in others:
            nr = (r + w) % a1
            nd = d + w
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return max(dist) - a1


def frobenius_two(a: int, b: int) -> int:
    """g(a,b) = ab - a - b for coprime positive a, b."""
    if a < 1 or b < 1:
        raise ValueError(f"arguments must be positive, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise ValueError(f"arguments must be coprime, got gcd({a},{b}) = {math.gcd(a, b)}")
    return a * b - a - b


def reduce_johnson(a: int, b: int, c: int) -> int:
    """g(a,b,c) via Johnson's formula: n*g(a/n, b/n, c) + (n-1)*c, n = gcd(a,b)."""
    if min(a, b, c) < 1:
        raise ValueError(f"arguments must be positive, got ({a}, {b}, {c})")
    if math.gcd(a, b, c) != 1:
        raise ValueError(f"gcd(a,b,c) must be 1, got {math.gcd(a, b, c)}")
    n = math.gcd(a, b)
    return n * frobenius_exact((a // n, b // n, c)) + (n - 1) * c


def reduce_brauer_shockley(parts) -> int:
    """g via Brauer-Shockley: n*g(a_1/n,...,a_{d-1}/n, a_d) + (n-1)*a_d,
    with n = gcd of all parts but the largest."""
    vals = tuple(sorted(int(v) for v in parts))
    if len(vals) < 2:
        raise ValueError("need at least two parts")
    if vals[0] < 1:
        raise ValueError(f"parts must be positive integers, got {vals}")
    if math.gcd(*vals) != 1:
        raise ValueError(f"gcd of parts must be 1, got gcd = {math.gcd(*vals)}")
    head, last = vals[:-1], vals[-1]
    n = math.gcd(*head) if len(head) > 1 else head[0]
    reduced = tuple(v // n for v in head) + (last,)
    return n * frobenius_exact(reduced) + (n - 1) * last


def f_value(t: Triple) -> int:
    """f(a,b,c) = g(a,b,c) + a + b + c."""
    return frobenius_exact((t.a, t.b, t.c)) + t.sum

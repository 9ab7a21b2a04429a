"""Counting functions for monogenic monoid types, degree by degree.

distinct_orders(n) counts the distinct orders of permutations of n points,
equivalently the distinct lcms over partitions of n. An integer m is such
an order exactly when the sum of the maximal prime-power divisors of m is
at most n, which gives a knapsack over primes; the partition oracle
partition_lcm_set cross-checks this. The type counts are running sums:
monoid_types(n) = sum of distinct_orders(1..n) and inverse_monoid_types(n)
adds the n = 0 term, with the degree-0 values pinned to 1. The
subsemigroup counts subtract distinct_orders(n-1) and are valid for
n >= 2 (and on the inverse side also for n = 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import lcm


_PARTITION_BOUND = 50


def _primes_up_to(n):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = bytearray(len(range(start, n + 1, p)))
    return [p for p in range(2, n + 1) if sieve[p]]


def distinct_orders_series(max_n):
    """[s(0), ..., s(max_n)] where s(n) counts distinct permutation orders
    on n points.

    by_sum[b] counts the integers whose maximal prime-power divisors sum
    to exactly b; each such integer is a distinct order, so s(n) is a
    prefix sum.
    """
    if max_n < 0:
        raise ValueError("need max_n >= 0")
    by_sum = [0] * (max_n + 1)
    by_sum[0] = 1
    for p in _primes_up_to(max_n):
        powers = []
        q = p
        while q <= max_n:
            powers.append(q)
            q *= p
        nxt = list(by_sum)
        for b in range(1, max_n + 1):
            nxt[b] += sum(by_sum[b - q] for q in powers if q <= b)
        by_sum = nxt
    series = []
    running = 0
    for b in range(max_n + 1):
        running += by_sum[b]
        series.append(running)
    return series


def distinct_orders(n):
    """Number of distinct orders of permutations of n points."""
    return distinct_orders_series(n)[n]


def partition_lcm_set(n, bound=_PARTITION_BOUND):
    """The set of lcms of partitions of n, by direct enumeration.

    Exponential-time oracle for distinct_orders; refuses n > bound
    (default 50) unless the bound is raised explicitly.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    if n > bound:
        raise ValueError(f"n = {n} exceeds the enumeration bound {bound}")
    lcms = set()

    def extend(remaining, largest, acc):
        if remaining == 0:
            lcms.add(acc)
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, lcm(acc, part))

    extend(n, n, 1)
    return lcms


def monoid_types(n):
    """Monogenic submonoids of the degree-n full transformation monoid,
    up to isomorphism."""
    if n < 0:
        raise ValueError("need n >= 0")
    if n == 0:
        return 1
    return sum(distinct_orders_series(n)[1:])


def inverse_monoid_types(n):
    """Monogenic inverse submonoids of the degree-n symmetric inverse
    monoid, up to isomorphism."""
    if n < 0:
        raise ValueError("need n >= 0")
    return sum(distinct_orders_series(n))


def semigroup_types(n):
    """Value of monoid_types(n) - distinct_orders(n-1).

    Counts monogenic subsemigroup types of degree n for n >= 2; at n = 1
    the subtraction yields 0 although the true count is 1 (the trivial
    subsemigroup has no degree-1 witness with threshold 1 to cancel).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    series = distinct_orders_series(n)
    return sum(series[1:]) - series[n - 1]


def inverse_semigroup_types(n):
    """Monogenic inverse subsemigroups of degree n up to isomorphism,
    inverse_monoid_types(n) - distinct_orders(n-1); valid for n >= 1."""
    if n < 1:
        raise ValueError("need n >= 1")
    series = distinct_orders_series(n)
    return sum(series) - series[n - 1]


def prime_power_parts(p):
    """Maximal prime-power divisors of p, ascending. Empty for p = 1."""
    if p < 1:
        raise ValueError("need p >= 1")
    parts = []
    rest = p
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            q = 1
            while rest % d == 0:
                q *= d
                rest //= d
            parts.append(q)
        d += 1
    if rest > 1:
        parts.append(rest)
    return sorted(parts)


def minimal_degree_for_order(p):
    """Least m such that the symmetric group on m points has an element of
    order p: the sum of the maximal prime-power divisors of p."""
    parts = prime_power_parts(p)
    return sum(parts) if parts else 1


@dataclass(frozen=True)
class CountRow:
    n: int
    s: int
    t: int
    i: int
    semi_t: int | None
    semi_i: int | None


@dataclass(frozen=True)
class CountTable:
    rows: tuple

    def to_csv(self):
        lines = ["n,s,t,i,semi_t,semi_i"]
        for r in self.rows:
            semi_t = "" if r.semi_t is None else str(r.semi_t)
            semi_i = "" if r.semi_i is None else str(r.semi_i)
            lines.append(f"{r.n},{r.s},{r.t},{r.i},{semi_t},{semi_i}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps(
            [
                {"n": r.n, "s": r.s, "t": r.t, "i": r.i, "semi_t": r.semi_t, "semi_i": r.semi_i}
                for r in self.rows
            ]
        )

    def to_markdown(self):
        """Three data rows s, t, i against a degree header row."""
        ns = [str(r.n) for r in self.rows]
        lines = [
            "| n | " + " | ".join(ns) + " |",
            "|---|" + "---|" * len(ns),
            "| s | " + " | ".join(str(r.s) for r in self.rows) + " |",
            "| t | " + " | ".join(str(r.t) for r in self.rows) + " |",
            "| i | " + " | ".join(str(r.i) for r in self.rows) + " |",
        ]
        return "\n".join(lines) + "\n"


def count_table(max_n):
    """CountTable for degrees 0..max_n; the semi columns are empty at n = 0."""
    if max_n < 0:
        raise ValueError("need max_n >= 0")
    series = distinct_orders_series(max_n)
    rows = []
    t = i = 0
    for n in range(max_n + 1):
        i += series[n]
        if n >= 1:
            t += series[n]
        row_t = 1 if n == 0 else t
        rows.append(
            CountRow(
                n=n,
                s=series[n],
                t=row_t,
                i=i,
                semi_t=None if n == 0 else row_t - series[n - 1],
                semi_i=None if n == 0 else i - series[n - 1],
            )
        )
    return CountTable(rows=tuple(rows))

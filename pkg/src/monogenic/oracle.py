"""Brute-force enumeration oracles for the counting functions.

Every count the package computes by formula is reproduced here from the
definitions: sweep all transformations or partial permutations of a
degree, classify each one, and compare the number of distinct types with
the formula value. Discrepancies are reported, not reconciled.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import counting
from ._sweeps import BACKEND, partial_perm_type_counts, transformation_type_counts
from .pperm import all_partial_perms

__all__ = [
    "FiniteMonoid",
    "EnumerationReport",
    "closure",
    "brute_force_isomorphic",
    "sweep_transformations",
    "sweep_partial_perms",
    "sweep_semigroup_types",
    "threshold_slices",
    "run_verification",
    "BACKEND",
]

_CLOSURE_CAP = 100_000
_ISO_CAP = 500


@dataclass
class FiniteMonoid:
    """A multiplication table over concrete elements in discovery order.

    identity_index is None when no element acts as identity (possible for
    semigroup closures); generator_indices point at the designated
    generators in the element list.
    """

    elements: list
    table: list
    identity_index: int | None
    generator_indices: list

    def __len__(self):
        return len(self.elements)

    def index(self, element):
        return self.elements.index(element)


def closure(generators, with_inverses=False, with_identity=True, cap=_CLOSURE_CAP):
    """Product closure of the generators, as a FiniteMonoid.

    Breadth-first over right-multiplication by the generators (and their
    inverses when with_inverses is set), so discovery order is
    deterministic for a fixed generator list. Raises if the closure
    exceeds cap elements.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators must share a degree")
    gens = list(dict.fromkeys(generators))
    if with_inverses:
        for g in list(gens):
            inv = g.inverse()
            if inv not in gens:
                gens.append(inv)
    seeds = []
    if with_identity:
        seeds.append(type(generators[0]).identity(degree))
    seeds.extend(g for g in gens if g not in seeds)

    index = {}
    elements = []
    for e in seeds:
        if e not in index:
            index[e] = len(elements)
            elements.append(e)
    frontier = list(elements)
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                prod = e * g
                if prod not in index:
                    if len(elements) >= cap:
                        raise RuntimeError(f"closure exceeded cap = {cap}")
                    index[prod] = len(elements)
                    elements.append(prod)
                    new.append(prod)
        frontier = new

    table = []
    for a in elements:
        row = []
        for b in elements:
            prod = a * b
            assert prod in index, "closure must be product-closed"
            row.append(index[prod])
        table.append(row)

    identity_index = None
    for i, e in enumerate(elements):
        if all(table[i][j] == j and table[j][i] == j for j in range(len(elements))):
            identity_index = i
            break
    return FiniteMonoid(
        elements=elements,
        table=table,
        identity_index=identity_index,
        generator_indices=[index[g] for g in generators],
    )


def _semigroup_inverses(table, x):
    """Elements y with xyx = x and yxy = y."""
    n = len(table)
    return [y for y in range(n) if table[table[x][y]][x] == x and table[table[y][x]][y] == y]


def brute_force_isomorphic(first, second):
    """Whether a generator-respecting bijective table isomorphism exists.

    Tries every element of second as the image of first's designated
    generator; the image of the generator's inverse (when one exists) is
    constrained to an inverse of the candidate, and identities map to
    identities. The partial map is closed under products and checked as a
    full bijective homomorphism.
    """
    if len(first) > _ISO_CAP or len(second) > _ISO_CAP:
        raise ValueError(f"brute-force isomorphism is capped at {_ISO_CAP} elements")
    if len(first) != len(second):
        return False
    size = len(first)
    t1, t2 = first.table, second.table
    gen = first.generator_indices[0]
    gen_invs = _semigroup_inverses(t1, gen)

    def extend(seed):
        phi = dict(seed)
        if len(set(phi.values())) != len(phi):
            return False
        frontier = list(phi)
        while frontier:
            new = []
            for a in list(phi):
                for b in frontier:
                    for x, y in ((a, b), (b, a)):
                        p, q = t1[x][y], t2[phi[x]][phi[y]]
                        if p in phi:
                            if phi[p] != q:
                                return False
                        else:
                            if q in phi.values():
                                return False
                            phi[p] = q
                            new.append(p)
            frontier = new
        if len(phi) != size:
            return False
        return all(phi[t1[a][b]] == t2[phi[a]][phi[b]] for a in range(size) for b in range(size))

    for cand in range(size):
        seeds = [{gen: cand}]
        if first.identity_index is not None:
            if second.identity_index is None:
                return False
            for s in seeds:
                s[first.identity_index] = second.identity_index
        if gen_invs:
            gi = gen_invs[0]
            seeds = [
                {**s, gi: ci} for s in seeds for ci in _semigroup_inverses(t2, cand)
            ]
        if any(extend(s) for s in seeds):
            return True
    return False


@dataclass(frozen=True)
class EnumerationReport:
    """Outcome of one exhaustive sweep against one formula value."""

    kind: str
    degree: int
    universe_size: int
    distinct_types: int
    formula_value: int
    match: bool
    millis: float

    def to_dict(self):
        return {
            "kind": self.kind,
            "degree": self.degree,
            "universe_size": self.universe_size,
            "distinct_types": self.distinct_types,
            "formula_value": self.formula_value,
            "match": self.match,
            "millis": self.millis,
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def _report(kind, degree, counts, distinct, formula, started):
    millis = (time.perf_counter() - started) * 1000.0
    return EnumerationReport(
        kind=kind,
        degree=degree,
        universe_size=sum(counts.values()),
        distinct_types=distinct,
        formula_value=formula,
        match=distinct == formula,
        millis=millis,
    )


def sweep_transformations(n):
    """Classify all n^n transformations; distinct (threshold, period)
    pairs must match monoid_types(n). Degrees 1..7."""
    if not 1 <= n <= 7:
        raise ValueError("sweeps cover degrees 1..7")
    started = time.perf_counter()
    counts = transformation_type_counts(n)
    assert sum(counts.values()) == n**n
    return _report(
        "transformations", n, counts, len(counts), counting.monoid_types(n), started
    )


def sweep_partial_perms(n):
    """Classify all partial permutations of degree n; distinct
    (chain, cycle) pairs must match inverse_monoid_types(n). Degrees 1..7."""
    if not 1 <= n <= 7:
        raise ValueError("sweeps cover degrees 1..7")
    started = time.perf_counter()
    counts = partial_perm_type_counts(n)
    return _report(
        "partial_perms", n, counts, len(counts), counting.inverse_monoid_types(n), started
    )


def threshold_slices(n):
    """Map threshold t -> set of periods observed among transformations of
    degree n. The slice at t must equal partition_lcm_set(n - t)."""
    slices = {}
    for (t, p) in transformation_type_counts(n):
        slices.setdefault(t, set()).add(p)
    return slices


def _inverse_semigroup_types_brute(n):
    """Isomorphism classes of the semigroup closures of {f, f^-1} over I_n,
    by brute-force isomorphism between all closures."""
    classes = []
    for f in all_partial_perms(n):
        monoid = closure([f, f.inverse()], with_identity=False)
        if not any(brute_force_isomorphic(monoid, rep) for rep in classes):
            classes.append(monoid)
    return len(classes)


def sweep_semigroup_types(n):
    """Count monogenic subsemigroup types of T_n and monogenic inverse
    subsemigroup types of I_n; returns a report for each universe.

    The transformation side counts distinct (max(threshold, 1), period)
    pairs. The inverse side drops the ambient identity from each closure;
    it is classified by brute-force isomorphism for n <= 3 and by the
    invariant (chain <= 1 collapses to the cyclic group of order cycle)
    above that. The formula values are valid for n >= 2, so the reports
    at n = 1 legitimately disagree on the transformation side.
    """
    if not 1 <= n <= 6:
        raise ValueError("semigroup sweeps cover degrees 1..6")
    started = time.perf_counter()
    t_counts = transformation_type_counts(n)
    t_types = {(max(t, 1), p) for (t, p) in t_counts}
    t_report = _report(
        "semigroups", n, t_counts, len(t_types), counting.semigroup_types(n), started
    )

    started = time.perf_counter()
    i_counts = partial_perm_type_counts(n)
    if n <= 3:
        distinct = _inverse_semigroup_types_brute(n)
    else:
        keys = {("group", k) if a <= 1 else ("chain", a, k) for (a, k) in i_counts}
        distinct = len(keys)
    i_report = _report(
        "inverse_semigroups", n, i_counts, distinct,
        counting.inverse_semigroup_types(n), started,
    )
    return t_report, i_report


def run_verification(max_degree):
    """Sweeps for the verify command: transformations and partial
    permutations for degrees 1..max_degree, subsemigroup types for degrees
    2..min(max_degree, 6) (the subtraction formulas hold from degree 2 on),
    plus the per-threshold slice check.
    """
    if not 1 <= max_degree <= 7:
        raise ValueError("verification covers degrees 1..7")
    reports = []
    for n in range(1, max_degree + 1):
        reports.append(sweep_transformations(n))
        reports.append(sweep_partial_perms(n))
    for n in range(2, min(max_degree, 6) + 1):
        reports.extend(sweep_semigroup_types(n))
    for n in range(1, max_degree + 1):
        started = time.perf_counter()
        slices = threshold_slices(n)
        ok = set(slices) == set(range(n)) and all(
            slices[t] == counting.partition_lcm_set(n - t) for t in slices
        )
        reports.append(
            EnumerationReport(
                kind="threshold_slices",
                degree=n,
                universe_size=n**n,
                distinct_types=sum(len(s) for s in slices.values()),
                formula_value=counting.monoid_types(n),
                match=ok and sum(len(s) for s in slices.values()) == counting.monoid_types(n),
                millis=(time.perf_counter() - started) * 1000.0,
            )
        )
    return reports

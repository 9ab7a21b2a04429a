"""Tests for the closure builder, brute-force isomorphism, and sweeps."""

import random

import pytest

from monogenic import _sweeps_py
from monogenic._sweeps import BACKEND
from monogenic.oracle import (
    EnumerationReport,
    brute_force_isomorphic,
    closure,
    run_verification,
    sweep_partial_perms,
    sweep_semigroup_types,
    sweep_transformations,
    threshold_slices,
)
from monogenic.counting import partition_lcm_set
from monogenic.pperm import PartialPerm, canonical_generator
from monogenic.transform import Transformation

try:
    from monogenic import _sweeps_cy
except ImportError:
    _sweeps_cy = None


def test_closure_of_transformation():
    f = Transformation([2, 3, 1, 1])
    monoid = closure([f])
    assert len(monoid) == 4
    assert monoid.identity_index == 0
    assert monoid.generator_indices == [monoid.index(f)]
    # threshold 1: the power semigroup is a cyclic group, f**3 is its identity
    semigroup = closure([f], with_identity=False)
    assert len(semigroup) == 3
    assert semigroup.identity_index == semigroup.index(f**3)
    # threshold 3: no power acts as an identity
    g = Transformation([1, 1, 2, 3])
    assert closure([g], with_identity=False).identity_index is None


def test_closure_table_is_correct():
    g = canonical_generator(2, 3)
    monoid = closure([g, g.inverse()])
    assert len(monoid) == 8
    for i, a in enumerate(monoid.elements):
        for j, b in enumerate(monoid.elements):
            assert monoid.elements[monoid.table[i][j]] == a * b


def test_closure_guards():
    with pytest.raises(ValueError):
        closure([])
    with pytest.raises(ValueError):
        closure([Transformation([1]), Transformation([1, 2])])
    with pytest.raises(RuntimeError):
        closure([canonical_generator(4, 2)], with_inverses=True, cap=10)


def test_closure_is_order_independent():
    g = canonical_generator(2, 2)
    a = closure([g, g.inverse()])
    b = closure([g.inverse(), g])
    assert set(a.elements) == set(b.elements)
    assert len(a) == len(b)


def test_brute_force_isomorphic_accepts_same_type():
    g1 = canonical_generator(2, 3)
    g2 = PartialPerm([2, None, 4, 5, 3, None])
    m1 = closure([g1, g1.inverse()])
    m2 = closure([g2, g2.inverse()])
    assert brute_force_isomorphic(m1, m2)


def test_brute_force_isomorphic_rejects_same_size_different_structure():
    a = canonical_generator(0, 3)
    b = canonical_generator(1, 2)
    ma = closure([a, a.inverse()])
    mb = closure([b, b.inverse()])
    assert len(ma) == len(mb) == 3
    assert not brute_force_isomorphic(ma, mb)


def test_brute_force_isomorphic_monogenic_monoids():
    # same (threshold, period) at different degrees
    f = Transformation([2, 3, 1, 1])
    g = Transformation([1, 3, 4, 2, 2])
    assert brute_force_isomorphic(closure([f]), closure([g]))
    h = Transformation([2, 3, 1])
    assert not brute_force_isomorphic(closure([f]), closure([h]))


def test_sweep_transformations():
    expected = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16}
    for n, count in expected.items():
        report = sweep_transformations(n)
        assert report.universe_size == n**n
        assert report.distinct_types == count
        assert report.match
    with pytest.raises(ValueError):
        sweep_transformations(8)


def test_sweep_partial_perms():
    expected = {1: 2, 2: 4, 3: 7, 4: 11, 5: 17}
    universes = {1: 2, 2: 7, 3: 34, 4: 209, 5: 1546}
    for n, count in expected.items():
        report = sweep_partial_perms(n)
        assert report.universe_size == universes[n]
        assert report.distinct_types == count
        assert report.match


def test_sweep_semigroup_types():
    expected = {2: (2, 3), 3: (4, 5), 4: (7, 8), 5: (12, 13)}
    for n, (t_count, i_count) in expected.items():
        t_report, i_report = sweep_semigroup_types(n)
        assert t_report.distinct_types == t_count and t_report.match
        assert i_report.distinct_types == i_count and i_report.match


def test_sweep_semigroup_types_degree_one_mismatch():
    # the subtraction formula is valid from degree 2 on; at degree 1 the
    # sweep honestly reports the disagreement
    t_report, i_report = sweep_semigroup_types(1)
    assert t_report.distinct_types == 1
    assert t_report.formula_value == 0
    assert not t_report.match
    assert i_report.match


def test_threshold_slices():
    for n in (3, 4, 5):
        slices = threshold_slices(n)
        assert set(slices) == set(range(n))
        for t, periods in slices.items():
            assert periods == partition_lcm_set(n - t), (n, t)


def test_run_verification():
    reports = run_verification(3)
    assert all(r.match for r in reports)
    kinds = {r.kind for r in reports}
    assert kinds == {
        "transformations", "partial_perms", "semigroups",
        "inverse_semigroups", "threshold_slices",
    }


def test_report_serialization():
    report = sweep_transformations(2)
    data = report.to_dict()
    assert data["kind"] == "transformations"
    assert set(data) == {
        "kind", "degree", "universe_size", "distinct_types",
        "formula_value", "match", "millis",
    }
    assert isinstance(report, EnumerationReport)


def test_python_kernel_agrees_with_compiled():
    if _sweeps_cy is None:
        pytest.skip("compiled kernel unavailable")
    for n in range(1, 5):
        assert _sweeps_py.transformation_type_counts(n) == _sweeps_cy.transformation_type_counts(n)
        assert _sweeps_py.partial_perm_type_counts(n) == _sweeps_cy.partial_perm_type_counts(n)


def test_backend_constant():
    assert BACKEND in ("compiled", "python")


def test_kernel_counts_are_complete():
    rng = random.Random(3117)
    counts = _sweeps_py.transformation_type_counts(4)
    assert sum(counts.values()) == 4**4
    # spot-check a few random transformations against the kernel's census
    from monogenic.transform import threshold_period
    for _ in range(50):
        f = Transformation(rng.randint(1, 4) for _ in range(4))
        assert threshold_period(f) in counts

"""Tests for the counting functions and their table emitters."""

import json

import pytest

from monogenic.counting import (
    CountTable,
    count_table,
    distinct_orders,
    distinct_orders_series,
    inverse_monoid_types,
    inverse_semigroup_types,
    minimal_degree_for_order,
    monoid_types,
    partition_lcm_set,
    prime_power_parts,
    semigroup_types,
)

S_SERIES = [1, 1, 2, 3, 4, 6, 6, 9, 11, 14, 16, 20, 23, 27, 31, 35, 43, 47, 55, 61]
T_SERIES = [1, 1, 3, 6, 10, 16, 22, 31, 42, 56, 72, 92, 115, 142, 173, 208, 251, 298, 353, 414]
I_SERIES = [1, 2, 4, 7, 11, 17, 23, 32, 43, 57, 73, 93, 116, 143, 174, 209, 252, 299, 354, 415]


def test_distinct_orders_series():
    assert distinct_orders_series(19) == S_SERIES
    assert distinct_orders(5) == 6
    assert distinct_orders(7) == 9


def test_monoid_type_series():
    assert [monoid_types(n) for n in range(20)] == T_SERIES
    assert [inverse_monoid_types(n) for n in range(20)] == I_SERIES
    assert monoid_types(0) == 1
    assert inverse_monoid_types(0) == 1


def test_series_recurrences():
    for n in range(2, 20):
        assert T_SERIES[n] == T_SERIES[n - 1] + S_SERIES[n]
    for n in range(1, 20):
        assert I_SERIES[n] == T_SERIES[n] + 1


def test_partition_lcm_set():
    assert partition_lcm_set(0) == {1}
    assert partition_lcm_set(5) == {1, 2, 3, 4, 5, 6}
    assert partition_lcm_set(7) == {1, 2, 3, 4, 5, 6, 7, 10, 12}
    with pytest.raises(ValueError):
        partition_lcm_set(51)
    assert partition_lcm_set(51, bound=60) >= partition_lcm_set(50)


def test_dp_matches_partition_enumeration():
    for n in range(0, 31):
        assert distinct_orders(n) == len(partition_lcm_set(n)), n


def test_semigroup_type_counts():
    assert semigroup_types(2) == 2
    assert semigroup_types(5) == 12
    assert inverse_semigroup_types(1) == 1
    assert inverse_semigroup_types(5) == 13
    # the subtraction formula yields 0 below its range of validity
    assert semigroup_types(1) == 0
    with pytest.raises(ValueError):
        semigroup_types(0)


def test_prime_power_parts_and_minimal_degree():
    assert prime_power_parts(1) == []
    assert prime_power_parts(12) == [3, 4]
    assert prime_power_parts(30) == [2, 3, 5]
    assert minimal_degree_for_order(1) == 1
    assert minimal_degree_for_order(6) == 5
    assert minimal_degree_for_order(12) == 7
    # every value in partition_lcm_set(n) is realizable within degree n
    for n in range(0, 20):
        assert all(minimal_degree_for_order(p) <= max(n, 1) for p in partition_lcm_set(n))


def test_count_table_values():
    table = count_table(19)
    assert [row.s for row in table.rows] == S_SERIES
    assert [row.t for row in table.rows] == T_SERIES
    assert [row.i for row in table.rows] == I_SERIES
    assert table.rows[0].semi_t is None and table.rows[0].semi_i is None
    assert table.rows[5].semi_t == 12 and table.rows[5].semi_i == 13


def test_count_table_csv():
    csv = count_table(5).to_csv()
    lines = csv.splitlines()
    assert lines[0] == "n,s,t,i,semi_t,semi_i"
    assert lines[1] == "0,1,1,1,,"
    assert lines[6] == "5,6,16,17,12,13"


def test_count_table_json():
    data = json.loads(count_table(5).to_json())
    assert data[0] == {"n": 0, "s": 1, "t": 1, "i": 1, "semi_t": None, "semi_i": None}
    assert data[5] == {"n": 5, "s": 6, "t": 16, "i": 17, "semi_t": 12, "semi_i": 13}


def test_count_table_markdown():
    md = count_table(3).to_markdown()
    lines = md.splitlines()
    assert lines[0] == "| n | 0 | 1 | 2 | 3 |"
    assert lines[1].startswith("|---")
    assert lines[2] == "| s | 1 | 1 | 2 | 3 |"


def test_rejects_negative():
    with pytest.raises(ValueError):
        distinct_orders(-1)
    with pytest.raises(ValueError):
        count_table(-1)

"""Monogenic transformation monoids and monogenic inverse monoids.

A monogenic submonoid of the full transformation monoid on n points is
determined up to isomorphism by the threshold and period of its generator;
a monogenic inverse submonoid of the symmetric inverse monoid is determined
by the longest chain and the lcm of the cycle lengths of its generator.
This package computes those invariants, builds the associated finite
monoids, counts the isomorphism types degree by degree, and checks every
count against brute-force enumeration.
"""

from .transform import (
    Transformation,
    threshold_period,
    monogenic_monoid_size,
    semigroup_index_period,
    construct_generator,
    are_isomorphic_monogenic,
)
from .pperm import (
    PartialPerm,
    ChainCycleType,
    orbit_decomposition,
    classify,
    canonical_generator,
    are_isomorphic_monogenic_inverse,
)
from .freeinv import FreeElement, NormalForm, ChainCycleMonoid, free_eval
from .counting import (
    distinct_orders,
    monoid_types,
    inverse_monoid_types,
    semigroup_types,
    inverse_semigroup_types,
    partition_lcm_set,
    count_table,
)
from .oracle import closure, brute_force_isomorphic, sweep_transformations, sweep_partial_perms

__version__ = "0.1.0"

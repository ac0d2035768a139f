import itertools
import math

import pytest
from hypothesis import given, strategies as st

from rectchar.partitions import partitions_of
from rectchar.permutations import (
    canonical_permutation,
    centralizer_order,
    compose,
    conjugacy_class_size,
    cycle_count,
    cycle_string,
    cycle_type,
    cycles,
    enumerate_sym,
    identity,
    inverse,
)

small_perms = st.integers(1, 6).flatmap(
    lambda k: st.permutations(list(range(1, k + 1))).map(tuple)
)


def test_compose_convention():
    # (u*v)(i) = u(v(i)): transposition after a 3-cycle
    u = (2, 1, 3)  # (1 2)
    v = (2, 3, 1)  # (1 2 3)
    assert compose(u, v) == (1, 3, 2)  # (2 3)


@given(small_perms)
def test_inverse_round_trip(w):
    k = len(w)
    assert compose(w, inverse(w)) == identity(k)
    assert compose(inverse(w), w) == identity(k)


@given(small_perms, small_perms.filter(lambda w: len(w) <= 5))
def test_compose_associative(u, w):
    if len(u) != len(w):
        return
    v = inverse(w)
    assert compose(compose(u, v), w) == compose(u, compose(v, w))


def test_cycles_and_string():
    w = (2, 1, 3, 5, 4)
    assert cycles(w) == [(1, 2), (3,), (4, 5)]
    assert cycle_string(w) == "(1 2)(3)(4 5)"
    assert cycle_count(w) == 3
    assert cycle_type(w) == (2, 2, 1)


@given(small_perms)
def test_cycle_type_is_partition_of_k(w):
    t = cycle_type(w)
    assert sum(t) == len(w)
    assert all(a >= b for a, b in zip(t, t[1:]))


def test_canonical_permutation_round_trip():
    for k in range(1, 7):
        for mu in partitions_of(k):
            w = canonical_permutation(mu)
            assert cycle_type(w) == mu


def test_enumerate_sym():
    elems = list(enumerate_sym(4))
    assert len(elems) == 24
    assert len(set(elems)) == 24
    assert elems == sorted(elems)
    with pytest.raises(ValueError):
        list(enumerate_sym(11))


def test_class_size_times_centralizer_is_factorial():
    for k in range(1, 8):
        for mu in partitions_of(k):
            assert centralizer_order(mu) * conjugacy_class_size(mu) == math.factorial(k)


def test_class_sizes_partition_the_group():
    for k in range(1, 7):
        by_type = {}
        for w in itertools.permutations(range(1, k + 1)):
            by_type[cycle_type(w)] = by_type.get(cycle_type(w), 0) + 1
        for mu, count in by_type.items():
            assert conjugacy_class_size(mu) == count

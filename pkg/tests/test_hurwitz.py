from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monohurwitz.algebra import series_log
from monohurwitz.hurwitz import (BudgetError, HurwitzIndex, automorphism_count, build_partition_function,
                                 canonical_permutation, character_sum, connected_from_log, connected_hurwitz,
                                 disconnected_hurwitz, exponent_vector, h_complete, oracle_connected,
                                 oracle_disconnected)
from monohurwitz.partitions import partitions_of


def idx(mu, b):
    return HurwitzIndex.from_b(mu, b)


def test_h_complete_examples():
    assert h_complete([5, -3, 2], 0) == 1
    assert h_complete([0, 1, -1], 2) == 1
    assert h_complete([0], 2) == 0


def test_index_validation():
    assert HurwitzIndex(0, (2,)).b == 1
    with pytest.raises(ValueError):
        HurwitzIndex(-1, (1,))
    with pytest.raises(ValueError):
        HurwitzIndex.from_b((2,), 2)
    assert HurwitzIndex.from_b((1, 1), 0).g == -1


def test_disconnected_examples():
    assert disconnected_hurwitz(HurwitzIndex(0, (1,))) == 1
    assert disconnected_hurwitz(HurwitzIndex(0, (2,))) == Fraction(1, 2)
    assert disconnected_hurwitz(HurwitzIndex(0, (1, 1))) == 1


def test_oracle_examples():
    assert oracle_disconnected((2,), 1) == Fraction(1, 2)
    assert oracle_disconnected((3,), 2) == Fraction(2, 3)
    assert oracle_disconnected((1,), 1) == 0
    assert oracle_connected((1, 1), 2) == 1
    assert oracle_connected((1, 1), 0) == 0
    assert oracle_connected((3,), 2) == Fraction(2, 3)


def test_oracle_budget():
    with pytest.raises(BudgetError):
        oracle_disconnected((7,), 0)
    with pytest.raises(BudgetError):
        oracle_connected((1,), 7)


def test_canonical_permutation():
    assert canonical_permutation((3, 1)) == [1, 2, 0, 3]
    assert canonical_permutation((2, 2)) == [1, 0, 3, 2]


def _indices(d_max, b_max):
    for d in range(1, d_max + 1):
        for mu in partitions_of(d):
            for b in range((d + len(mu)) % 2, b_max + 1, 2):
                yield mu, b


@pytest.mark.parametrize("mu,b", list(_indices(5, 4)))
def test_disconnected_matches_oracle(mu, b):
    assert disconnected_hurwitz(idx(mu, b)) == oracle_disconnected(mu, b)


@pytest.mark.parametrize("mu,b", list(_indices(4, 4)))
def test_connected_matches_oracle(mu, b):
    assert connected_hurwitz(idx(mu, b)) == oracle_connected(mu, b)


@pytest.mark.parametrize("mu,b", list(_indices(4, 4)))
def test_restricted_and_full_log_agree(mu, b):
    i = idx(mu, b)
    assert connected_hurwitz(i, 4, 4) == connected_hurwitz(i, 4, 4, full=True)


def test_connected_examples():
    assert connected_hurwitz(HurwitzIndex(0, (1,))) == 1
    assert connected_hurwitz(HurwitzIndex(0, (1, 1))) == 1
    assert connected_hurwitz(HurwitzIndex(1, (1,))) == 0


def test_connected_caps_too_small():
    with pytest.raises(BudgetError):
        connected_hurwitz(HurwitzIndex(0, (2, 1)), d_max=2, b_max=4)
    with pytest.raises(BudgetError):
        connected_hurwitz(HurwitzIndex(1, (2,)), d_max=2, b_max=2)


@pytest.mark.parametrize("d", range(1, 7))
def test_parity_vanishing(d):
    for mu in partitions_of(d):
        for b in range(0, 7):
            if (b - d - len(mu)) % 2:
                assert character_sum(mu, b) == 0


@pytest.mark.parametrize("d", range(1, 7))
def test_b_zero_degeneracy(d):
    for mu in partitions_of(d):
        if (d + len(mu)) % 2 == 0:
            expected = 1 if mu == (1,) * d else 0
            assert disconnected_hurwitz(idx(mu, 0)) == expected


@pytest.mark.parametrize("d", range(1, 6))
def test_single_part_connected_equals_disconnected(d):
    for b in range((d + 1) % 2, 5, 2):
        i = idx((d,), b)
        assert connected_hurwitz(i) == disconnected_hurwitz(i)


def test_negative_genus_connected_coefficients_vanish():
    logZ = series_log(build_partition_function(4, 4))
    for d in range(1, 5):
        for mu in partitions_of(d):
            for b in range((d + len(mu)) % 2, 5, 2):
                if b - d - len(mu) + 2 < 0:
                    assert connected_from_log(logZ, mu, b) == 0


def test_partition_function_examples():
    Z = build_partition_function(1, 0)
    assert Z.sorted_terms() == [((0, 0, 0), 1), ((1, 0, 1), 1)]
    Z = build_partition_function(2, 2)
    # weight H / |Aut mu|: |Aut (2)| = 1, |Aut (1,1)| = 2
    assert Z.coefficient((2, 1, 0, 1)) == Fraction(1, 2)
    assert Z.coefficient((2, 2, 2, 0)) == Fraction(1, 2)
    logZ = series_log(Z)
    assert logZ.coefficient((2, 2, 2, 0)) == Fraction(1, 2)


def test_partition_function_is_sum_over_factorizations():
    # with weight H/|Aut|, d! [s^d t^b p_mu] Z counts all monotone b-tuples
    # with product of cycle type mu (summed over the whole class)
    Z = build_partition_function(4, 4)
    for d in range(1, 5):
        for mu in partitions_of(d):
            for b in range((d + len(mu)) % 2, 5, 2):
                class_size = factorial(d) // (prod(mu) * automorphism_count(mu))
                tuples = oracle_disconnected(mu, b) * prod(mu) * class_size
                coeff = Z.coefficient((d, b) + exponent_vector(mu, 4))
                assert factorial(d) * coeff == tuples


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6).flatmap(lambda d: st.sampled_from(partitions_of(d))), st.integers(0, 6))
def test_character_sum_is_integral_multiple(mu, b):
    # H * prod(mu) * d! is the integer character sum
    if (b - sum(mu) - len(mu)) % 2 == 0:
        value = disconnected_hurwitz(idx(mu, b)) * prod(mu) * factorial(sum(mu))
        assert value == character_sum(mu, b)


def test_exponent_vector_budget():
    assert exponent_vector((2, 1, 1), 3) == (2, 1, 0)
    with pytest.raises(BudgetError):
        exponent_vector((4,), 3)

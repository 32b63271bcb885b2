from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from jordansandwich import partitions as P
from jordansandwich.errors import NonSplit
from jordansandwich.fields import QQ, PrimeField
from jordansandwich.jordan import (
    JordanData,
    centralizer_dim,
    d_of,
    enumerate_jordan_data,
    gamma,
    jordan_matrix,
    jordan_type_of,
    min_poly_degree,
    partition_from_ranks,
    rank_sequence,
)
from jordansandwich.linalg import ExactMatrix, commutant_dim, inverse

from conftest import random_invertible


def brute_jordan_data(n):
    """Multisets of partitions of total size n: all ordered tuples, then sorted."""
    seen = set()

    def rec(left, acc):
        if left == 0:
            seen.add(tuple(sorted(acc)))
            return
        for k in range(1, left + 1):
            for lam in P.enumerate_partitions(k):
                rec(left - k, acc + [lam])

    rec(n, [])
    return seen


def J(*blocks):
    return JordanData.of(*blocks)


def test_jordan_type_examples():
    assert jordan_type_of(ExactMatrix.from_rows([[5]])).concrete == ((5, (1,)),)
    assert jordan_type_of(ExactMatrix.from_rows([[2, 1], [0, 2]])).concrete == ((2, (2,)),)
    jd = jordan_type_of(ExactMatrix.diagonal([1, 1, 2]))
    assert jd.concrete == ((1, (1, 1)), (2, (1,)))
    assert jd == J((1, 1), (1,))


def test_jordan_type_nonsplit():
    with pytest.raises(NonSplit):
        jordan_type_of(ExactMatrix.from_rows([[0, 1], [-1, 0]], PrimeField(3)))
    with pytest.raises(NonSplit):
        jordan_type_of(ExactMatrix.from_rows([[0, 2], [1, 0]]))


def test_rank_sequence_stops_when_stationary():
    A = jordan_matrix(J((3, 1)), QQ)
    assert rank_sequence(A, 1) == [4, 2, 1, 0, 0]
    assert partition_from_ranks([4, 2, 1, 0, 0]) == (3, 1)


@pytest.mark.parametrize("delta, expected", [(J((2, 1), (1, 1)), 2), (J((4,)), 1), (J((1, 1, 1)), 3)])
def test_d_of(delta, expected):
    assert d_of(delta) == expected


@pytest.mark.parametrize("delta, expected", [(J((2,), (1, 1)), 3), (J((1, 1), (1, 1)), 2), (J((2, 1), (3,)), 5)])
def test_min_poly_degree(delta, expected):
    assert min_poly_degree(delta) == expected


@pytest.mark.parametrize("delta, expected", [(J((2,), (1, 1)), 6), (J((1, 1, 1, 1)), 16), (J((4,)), 4)])
def test_centralizer_dim(delta, expected):
    assert centralizer_dim(delta) == expected


def test_centralizer_dim_representative():
    assert commutant_dim(jordan_matrix(J((2,), (1, 1)))) == 6


@pytest.mark.parametrize("delta, expected", [(J((2,), (1, 1)), (3, 1)), (J((3, 2, 1)), (3, 2, 1)),
                                             (J((3, 1), (2, 2)), (5, 3))])
def test_gamma(delta, expected):
    assert gamma(delta) == expected


def test_enumerate_small():
    assert enumerate_jordan_data(1) == [J((1,))]
    assert set(enumerate_jordan_data(2)) == {J((2,)), J((1, 1)), J((1,), (1,))}
    assert len(enumerate_jordan_data(3)) == 6


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_matches_brute_force(n):
    found = enumerate_jordan_data(n)
    assert len(found) == len(set(found))
    assert {jd.blocks for jd in found} == {tuple(sorted(t, key=lambda b: (-sum(b), tuple(-x for x in b))))
                                           for t in brute_jordan_data(n)}
    assert enumerate_jordan_data(n) == found


def test_abstract_equality_ignores_eigenvalues():
    a = JordanData.from_concrete([(1, (2,)), (5, (1, 1))])
    b = JordanData.from_concrete([(0, (1, 1)), (3, (2,))])
    assert a == b and hash(a) == hash(b)
    assert a != J((2,), (1,), (1,))


def test_jordan_data_validation():
    with pytest.raises(ValueError):
        JordanData(())
    with pytest.raises(ValueError):
        JordanData.from_concrete([(1, (2,)), (1, (1,))])


def test_json_forms():
    jd = JordanData.from_concrete([(1, (2,)), (2, (1, 1))])
    assert jd.to_json() == {"n": 4, "concrete": [{"eig": "1", "partition": [2]}, {"eig": "2", "partition": [1, 1]}]}
    assert jd.abstract().to_json() == {"n": 4, "blocks": [[2], [1, 1]]}
    assert JordanData.from_json(jd.to_json()) == jd
    with pytest.raises(ValueError):
        JordanData.from_json({"n": 5, "blocks": [[2]]})


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_and_commutant_all_types(n):
    for delta in enumerate_jordan_data(n):
        A = jordan_matrix(delta, QQ)
        found = jordan_type_of(A)
        assert found == delta
        assert [e for e, _ in found.concrete] == list(range(1, delta.m + 1))
        assert commutant_dim(A) == centralizer_dim(delta)
        assert d_of(delta) == len(gamma(delta))


def test_round_trip_over_prime_field():
    for delta in enumerate_jordan_data(4):
        F = PrimeField(5)
        assert jordan_type_of(jordan_matrix(delta, F)) == delta


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(enumerate_jordan_data(n))),
       st.sampled_from([QQ, PrimeField(7)]), st.randoms(use_true_random=False))
def test_similarity_invariance(delta, field, rnd):
    A = jordan_matrix(delta, field)
    Pm = random_invertible(rnd, delta.n, field)
    B = Pm @ A @ inverse(Pm)
    found = jordan_type_of(B)
    assert found == delta
    assert found.concrete == jordan_type_of(A).concrete


def test_canonical_form_rank_sequences_match(rng):
    # rebuild the canonical form from the extracted data and compare every rank sequence
    for delta in enumerate_jordan_data(4):
        A = jordan_matrix(delta)
        Pm = random_invertible(rng, delta.n, QQ)
        B = Pm @ A @ inverse(Pm)
        jd = jordan_type_of(B)
        C = jordan_matrix(jd, QQ)
        for eig, _ in jd.concrete:
            assert rank_sequence(B, eig) == rank_sequence(C, eig)


def test_small_prime_canonical_eigenvalues():
    with pytest.raises(ValueError):
        jordan_matrix(J((1,), (1,), (1,)), PrimeField(3))

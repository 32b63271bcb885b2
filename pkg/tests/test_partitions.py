from functools import lru_cache

import pytest

from jordansandwich import partitions as P


@lru_cache(maxsize=None)
def count_partitions(n, k):
    """Partitions of n into parts of size <= k, by the usual recursion."""
    if n == 0:
        return 1
    if k == 0:
        return 0
    return count_partitions(n, k - 1) + (count_partitions(n - k, k) if n >= k else 0)


@pytest.mark.parametrize("lam, expected", [((3, 1), (2, 1, 1)), ((1, 1, 1), (3,)), ((2, 2), (2, 2))])
def test_transpose(lam, expected):
    assert P.transpose(lam) == expected


@pytest.mark.parametrize("lams, expected", [
    ([(2,), (1, 1)], (3, 1)),
    ([(3, 1), (2, 2)], (5, 3)),
    ([(4, 2, 1)], (4, 2, 1)),
])
def test_add(lams, expected):
    assert P.add(lams) == expected


def test_add_needs_input():
    with pytest.raises(ValueError):
        P.add([])


def test_union():
    assert P.union((2, 1), (2,)) == (2, 2, 1)
    assert P.union((1,), (1,)) == (1, 1)
    assert P.transpose(P.add([(2,), (1, 1)])) == P.union(P.transpose((2,)), P.transpose((1, 1))) == (2, 1, 1)


@pytest.mark.parametrize("lam, expected", [((4,), 4), ((1, 1, 1, 1), 16), ((3, 1), 6)])
def test_centralizer_dim_single(lam, expected):
    assert P.centralizer_dim_single(lam) == expected


def test_enumerate_small():
    assert P.enumerate_partitions(1) == [(1,)]
    assert P.enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 13))
def test_enumerate_counts_and_order(n):
    parts = P.enumerate_partitions(n)
    assert len(parts) == len(set(parts)) == count_partitions(n, n)
    assert parts == sorted(parts, reverse=True)
    assert all(P.check_partition(lam) == lam and sum(lam) == n for lam in parts)


def test_count_eight():
    assert len(P.enumerate_partitions(8)) == 22


def test_all_small_partitions_invariants():
    for n in range(1, 11):
        for lam in P.enumerate_partitions(n):
            t = P.transpose(lam)
            assert P.transpose(t) == lam
            assert sum(t) == n
            c = P.centralizer_dim_single(lam)
            assert n <= c <= n * n
            assert (c == n) == (lam == (n,))
            assert (c == n * n) == (lam == (1,) * n)


def test_transpose_of_sum_is_union_of_transposes():
    universe = [lam for n in range(1, 8) for lam in P.enumerate_partitions(n)]
    for lam in universe:
        for mu in universe:
            if sum(lam) + sum(mu) <= 8:
                assert P.transpose(P.add([lam, mu])) == P.union(P.transpose(lam), P.transpose(mu))


@pytest.mark.parametrize("bad", [(), (0,), (1, 2), (2, -1)])
def test_check_partition_rejects(bad):
    with pytest.raises(ValueError):
        P.check_partition(bad)


def test_json_roundtrip():
    assert P.from_json(P.to_json((3, 1))) == (3, 1)

"""Integer partitions as plain nonincreasing tuples.

A partition of ``n`` is a tuple of positive ints in nonincreasing order
summing to ``n``.  The empty tuple only ever appears as internal padding.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a canonical partition tuple."""
    lam = tuple(int(x) for x in parts)
    if not lam:
        raise ValueError("empty partition")
    if any(x <= 0 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition parts must be nonincreasing: {lam}")
    return lam


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def transpose(lam: Sequence[int]) -> Partition:
    """Conjugate partition: the k-th part counts the parts of ``lam`` >= k."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= k) for k in range(1, lam[0] + 1))


def add(lams: Sequence[Sequence[int]]) -> Partition:
    """Componentwise sum, shorter partitions padded with zeros."""
    if not lams:
        raise ValueError("add() needs at least one partition")
    return tuple(sum(col) for col in zip_longest(*lams, fillvalue=0))


def union(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    return tuple(sorted((*lam, *mu), reverse=True))


def centralizer_dim_single(lam: Sequence[int]) -> int:
    """Dimension of the centralizer of a one-eigenvalue matrix of Jordan type ``lam``.

    Computed as the sum of squared parts of the transpose and cross-checked
    against ``sum((2i - 1) * lam_i)``.
    """
    by_columns = sum(c * c for c in transpose(lam))
    by_rows = sum((2 * i + 1) * x for i, x in enumerate(lam))
    assert by_columns == by_rows, (lam, by_columns, by_rows)
    return by_columns


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first, *rest))
    return tuple(out)


def to_json(lam: Sequence[int]) -> list[int]:
    return list(lam)


def from_json(data: Sequence[int]) -> Partition:
    return check_partition(data)

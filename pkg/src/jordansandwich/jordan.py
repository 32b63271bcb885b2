"""Jordan data of matrices: per-eigenvalue block partitions and derived invariants."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from . import partitions as P
from .fields import QQ, Field, PrimeField
from .linalg import ExactMatrix, block_diag, char_poly, jordan_block, rank, split_roots
from .partitions import Partition


def _canon(blocks: Iterable[Sequence[int]]) -> tuple[Partition, ...]:
    return tuple(sorted((P.check_partition(b) for b in blocks), key=lambda b: (-sum(b), tuple(-x for x in b))))


@dataclass(frozen=True)
class JordanData:
    """Multiset of Jordan partitions, one per distinct eigenvalue.

    Equality and hashing only look at the abstract multiset ``blocks``;
    eigenvalue labels carried in ``concrete`` never affect identity.
    """

    blocks: tuple[Partition, ...]
    concrete: tuple[tuple[object, Partition], ...] | None = dc_field(default=None, compare=False)
    field: Field | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        canon = _canon(self.blocks)
        if not canon:
            raise ValueError("JordanData needs at least one eigenvalue")
        object.__setattr__(self, "blocks", canon)
        if self.concrete is not None:
            eigs = [e for e, _ in self.concrete]
            if len(set(eigs)) != len(eigs):
                raise ValueError("concrete eigenvalues must be pairwise distinct")
            if _canon(lam for _, lam in self.concrete) != canon:
                raise ValueError("concrete data does not match abstract blocks")

    @classmethod
    def of(cls, *blocks: Sequence[int]) -> JordanData:
        return cls(tuple(tuple(b) for b in blocks))

    @classmethod
    def from_concrete(cls, pairs: Iterable[tuple[object, Sequence[int]]], field: Field = QQ) -> JordanData:
        pairs = tuple((field(e), P.check_partition(lam)) for e, lam in pairs)
        return cls(tuple(lam for _, lam in pairs), pairs, field)

    @property
    def n(self) -> int:
        return sum(sum(b) for b in self.blocks)

    @property
    def m(self) -> int:
        return len(self.blocks)

    def abstract(self) -> JordanData:
        return JordanData(self.blocks)

    def to_json(self) -> dict:
        if self.concrete is None:
            return {"n": self.n, "blocks": [list(b) for b in self.blocks]}
        F = self.field
        return {
            "n": self.n,
            "concrete": [{"eig": F.format(e), "partition": list(lam)} for e, lam in self.concrete],
        }

    @classmethod
    def from_json(cls, data: dict, field: Field = QQ) -> JordanData:
        if "concrete" in data:
            jd = cls.from_concrete(((d["eig"], d["partition"]) for d in data["concrete"]), field)
        else:
            jd = cls(tuple(tuple(b) for b in data["blocks"]))
        if "n" in data and data["n"] != jd.n:
            raise ValueError(f"declared n={data['n']} but blocks have total size {jd.n}")
        return jd

    def __str__(self):
        if self.concrete is not None:
            inner = ", ".join(f"{self.field.format(e)}: {lam}" for e, lam in self.concrete)
        else:
            inner = ", ".join(str(b) for b in self.blocks)
        return "{" + inner + "}"


def parse_delta(text: str) -> JordanData:
    """Read Jordan data from JSON: ``[[2],[1,1]]`` or a full JordanData object."""
    import json

    data = json.loads(text)
    if isinstance(data, dict):
        return JordanData.from_json(data)
    return JordanData(tuple(tuple(b) for b in data))


def rank_sequence(A: ExactMatrix, alpha) -> list[int]:
    """Ranks of (A - alpha I)^k for k = 0, 1, ... up to the first repeat (inclusive)."""
    B = A.shift(alpha)
    ranks = [A.n_rows]
    power = ExactMatrix.identity(A.n_rows, A.field)
    while True:
        power = power @ B
        r = rank(power)
        ranks.append(r)
        if r == ranks[-2]:
            return ranks


def partition_from_ranks(ranks: Sequence[int]) -> Partition:
    """Jordan partition at one eigenvalue from its rank sequence."""
    column_heights = [a - b for a, b in zip(ranks, ranks[1:]) if a - b > 0]
    return P.transpose(column_heights) if column_heights else ()


def jordan_type_of(A: ExactMatrix) -> JordanData:
    """Concrete Jordan data of ``A``; raises NonSplit if the spectrum leaves the field."""
    if not A.is_square:
        raise ValueError("Jordan type needs a square matrix")
    roots = split_roots(char_poly(A))
    pairs = []
    for alpha, mult in roots.items():
        lam = partition_from_ranks(rank_sequence(A, alpha))
        assert sum(lam) == mult, (alpha, lam, mult)
        pairs.append((alpha, lam))
    return JordanData(tuple(lam for _, lam in pairs), tuple(pairs), A.field)


def gamma(delta: JordanData) -> Partition:
    return P.add(delta.blocks)


def d_of(delta: JordanData) -> int:
    """Dimension of the largest eigenspace."""
    d = max(len(lam) for lam in delta.blocks)
    assert d == P.transpose(gamma(delta))[0]
    return d


def min_poly_degree(delta: JordanData) -> int:
    return sum(lam[0] for lam in delta.blocks)


def has_quadratic_minpoly(delta: JordanData) -> bool:
    return min_poly_degree(delta) == 2


def centralizer_dim(delta: JordanData) -> int:
    per_eigenvalue = sum(P.centralizer_dim_single(lam) for lam in delta.blocks)
    from_gamma = sum(d * d for d in P.transpose(gamma(delta)))
    assert per_eigenvalue == from_gamma, (delta, per_eigenvalue, from_gamma)
    return per_eigenvalue


def enumerate_jordan_data(n: int) -> list[JordanData]:
    """Every multiset of partitions with total size ``n``, each once, in a fixed order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    # all partitions of sizes 1..n in a total order; multisets are nonincreasing index sequences
    pool = [lam for k in range(n, 0, -1) for lam in P.enumerate_partitions(k)]
    out = []

    def rec(remaining: int, start: int, acc: list):
        if remaining == 0:
            out.append(JordanData(tuple(acc)))
            return
        for i in range(start, len(pool)):
            lam = pool[i]
            if sum(lam) <= remaining:
                acc.append(lam)
                rec(remaining - sum(lam), i, acc)
                acc.pop()

    rec(n, 0, [])
    return out


def canonical_eigenvalues(m: int, field: Field = QQ) -> list:
    """Eigenvalues 1..m, requiring p > m over GF(p) so they stay distinct."""
    if isinstance(field, PrimeField) and field.p <= m:
        raise ValueError(f"GF({field.p}) cannot hold {m} distinct nonzero canonical eigenvalues")
    return [field(i) for i in range(1, m + 1)]


def jordan_matrix(delta: JordanData, field: Field = QQ, eigenvalues: Sequence | None = None) -> ExactMatrix:
    """Block-diagonal Jordan form realizing ``delta``.

    Uses ``delta.concrete`` when present, else the given eigenvalues, else 1..m.
    """
    if eigenvalues is None:
        if delta.concrete is not None and delta.field == field:
            pairs = delta.concrete
        else:
            pairs = tuple(zip(canonical_eigenvalues(delta.m, field), delta.blocks))
    else:
        pairs = tuple(zip((field(e) for e in eigenvalues), delta.blocks))
    return block_diag([jordan_block(size, eig, field) for eig, lam in pairs for size in lam])

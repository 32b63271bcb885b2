"""The varieties S(Γ'), X(Δ), U(Γ), their representatives, and fixed-space dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import partitions as P
from .errors import InfeasibleE
from .fields import QQ, Field
from .jordan import (
    JordanData,
    centralizer_dim,
    gamma,
    jordan_matrix,
    jordan_type_of,
)
from .linalg import ExactMatrix
from .partitions import Partition

KINDS = ("S", "X", "U")


@dataclass(frozen=True)
class VarietyDescriptor:
    """``S``: semisimple with eigenspace dims ``partition``; ``U``: one eigenvalue,
    Jordan blocks ``partition``; ``X``: Jordan data ``delta``."""

    kind: str
    n: int
    partition: Partition | None = None
    delta: JordanData | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown variety kind {self.kind!r}")
        if self.kind == "X":
            if self.delta is None or self.delta.n != self.n:
                raise ValueError("X descriptor needs Jordan data of size n")
        else:
            if self.partition is None or sum(self.partition) != self.n:
                raise ValueError(f"{self.kind} descriptor needs a partition of n")
            object.__setattr__(self, "partition", P.check_partition(self.partition))

    @classmethod
    def X(cls, delta: JordanData) -> VarietyDescriptor:
        return cls("X", delta.n, delta=delta.abstract())

    @classmethod
    def U(cls, lam: Sequence[int]) -> VarietyDescriptor:
        return cls("U", sum(lam), partition=tuple(lam))

    @classmethod
    def S(cls, lam: Sequence[int]) -> VarietyDescriptor:
        return cls("S", sum(lam), partition=tuple(lam))

    def jordan_data(self) -> JordanData:
        """Abstract Jordan data shared by every member of the variety."""
        if self.kind == "X":
            return self.delta
        if self.kind == "U":
            return JordanData((self.partition,))
        return JordanData(tuple((1,) * d for d in self.partition))

    @property
    def n_eigenvalues(self) -> int:
        return self.jordan_data().m

    def representative(self, field: Field = QQ) -> ExactMatrix:
        """Canonical member: eigenvalues 1..m, except U which is nilpotent."""
        if self.kind == "U":
            return jordan_matrix(self.jordan_data(), field, eigenvalues=[0])
        return jordan_matrix(self.jordan_data(), field)

    def label(self) -> str:
        if self.kind == "X":
            return f"X({list(map(list, self.delta.blocks))})"
        return f"{self.kind}({list(self.partition)})"

    def to_json(self) -> dict:
        if self.kind == "X":
            return {"kind": "X", "n": self.n, "delta": self.delta.to_json()}
        return {"kind": self.kind, "n": self.n, "partition": list(self.partition)}

    @classmethod
    def from_json(cls, data: dict) -> VarietyDescriptor:
        kind = data["kind"]
        if kind == "X":
            return cls.X(JordanData.from_json(data["delta"]))
        return cls(kind, sum(data["partition"]), partition=tuple(data["partition"]))


def membership(A: ExactMatrix, V: VarietyDescriptor) -> bool:
    if A.n_rows != V.n:
        return False
    jd = jordan_type_of(A)
    if V.kind == "X":
        return jd == V.delta
    if V.kind == "U":
        return jd.m == 1 and jd.blocks[0] == V.partition
    if any(lam[0] != 1 for lam in jd.blocks):
        return False
    return tuple(sorted((len(lam) for lam in jd.blocks), reverse=True)) == V.partition


def bounded_compositions(dims: Sequence[int], e: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors with 0 <= v_i <= dims_i and sum e."""
    k = len(dims)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + dims[i]

    def rec(i: int, left: int, acc: list):
        if i == k:
            if left == 0:
                yield tuple(acc)
            return
        lo = max(0, left - suffix[i + 1])
        for v in range(lo, min(dims[i], left) + 1):
            acc.append(v)
            yield from rec(i + 1, left - v, acc)
            acc.pop()

    yield from rec(0, e, [])


def fixed_dim_formula(dims: Sequence[int], e: int) -> int:
    """Dimension of the variety of e-dim subspaces invariant under a semisimple
    matrix with eigenspace dimensions ``dims``.

    Such a subspace is a direct sum of subspaces of the eigenspaces, so the
    variety is a union of products of Grassmannians.
    """
    if e < 0 or e > sum(dims):
        raise InfeasibleE(f"e={e} outside 0..{sum(dims)}")
    return max(sum(x * (d - x) for x, d in zip(c, dims)) for c in bounded_compositions(dims, e))


@dataclass(frozen=True)
class SandwichReport:
    delta: JordanData
    gamma: Partition
    gamma_t: Partition
    centralizer_dim: int
    fixed_dims: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.delta.n

    def varieties(self) -> tuple[VarietyDescriptor, VarietyDescriptor, VarietyDescriptor]:
        return VarietyDescriptor.S(self.gamma_t), VarietyDescriptor.X(self.delta), VarietyDescriptor.U(self.gamma)

    def to_json(self) -> dict:
        return {
            "delta": self.delta.abstract().to_json(),
            "gamma": list(self.gamma),
            "gamma_t": list(self.gamma_t),
            "centralizer_dim": self.centralizer_dim,
            "fixed_dims": list(self.fixed_dims),
            "varieties": [v.label() for v in self.varieties()],
        }


def sandwich(delta: JordanData) -> SandwichReport:
    g = gamma(delta)
    gt = P.transpose(g)
    cdim = centralizer_dim(delta)
    assert cdim == sum(d * d for d in gt)
    n = delta.n
    fixed = tuple(fixed_dim_formula(gt, e) for e in range(1, n))
    return SandwichReport(delta.abstract(), g, gt, cdim, fixed)

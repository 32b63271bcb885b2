"""Explicit matrix families realizing the closure containments S(Γ') ⊇ X(Δ) ⊇ U(Γ)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Mapping, Sequence

from . import partitions as P
from .errors import FieldTooSmall, TypeMismatch
from .fields import QQ, Field, PrimeField
from .jordan import JordanData, centralizer_dim, gamma, jordan_type_of
from .linalg import ExactMatrix, block_diag, commutant_dim

MODES = ("ss-to-x", "x-to-u")


def regular_block(diagonal: Sequence[tuple[object, int]], field: Field = QQ) -> ExactMatrix:
    """Upper triangular matrix with the given diagonal runs and all-ones superdiagonal.

    With pairwise distinct values this is cyclic, with one Jordan block of
    size ``mult`` per value.
    """
    diag = []
    for value, mult in diagonal:
        if mult <= 0:
            raise ValueError("multiplicities must be positive")
        diag.extend([field(value)] * mult)
    n = len(diag)
    return ExactMatrix.from_rows(
        [[diag[i] if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)], field
    )


@dataclass(frozen=True)
class WitnessFamily:
    """Block-diagonal family of :func:`regular_block` pieces with symbolic diagonals.

    ``blocks[b]`` lists ``(slot, multiplicity)`` runs; ``specialization``
    maps each slot to the slot whose value it takes on the special fiber.
    """

    mode: str
    delta: JordanData
    blocks: tuple[tuple[tuple[str, int], ...], ...]
    slots: tuple[str, ...]
    specialization: tuple[tuple[str, str], ...]
    generic_type: JordanData
    special_type: JordanData

    @property
    def n(self) -> int:
        return sum(m for blk in self.blocks for _, m in blk)

    def rule(self) -> dict[str, str]:
        return dict(self.specialization)

    def specialize(self, assignment: Mapping[str, object], field: Field = QQ) -> ExactMatrix:
        return block_diag([regular_block([(assignment[s], m) for s, m in blk], field) for blk in self.blocks])

    def special_assignment(self, assignment: Mapping[str, object]) -> dict[str, object]:
        rule = self.rule()
        return {s: assignment[rule.get(s, s)] for s in self.slots}

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "delta": self.delta.to_json(),
            "slots": list(self.slots),
            "blocks": [[{"slot": s, "multiplicity": m} for s, m in blk] for blk in self.blocks],
            "specialization": dict(self.specialization),
            "generic_type": self.generic_type.to_json(),
            "special_type": self.special_type.to_json(),
        }


def family_semisimple_to_X(delta: JordanData) -> WitnessFamily:
    """Generic fiber semisimple in S(Γ'); collapsing each eigenvalue's slots gives X(Δ)."""
    blocks = []
    slots = []
    rule = []
    for j, lam in enumerate(delta.blocks, start=1):
        names = [f"a{j}_{t}" for t in range(1, lam[0] + 1)]
        slots.extend(names)
        rule.extend((s, names[0]) for s in names[1:])
        for part in lam:
            blocks.append(tuple((names[t], 1) for t in range(part)))
    gt = P.transpose(gamma(delta))
    generic = JordanData(tuple((1,) * d for d in gt))
    return WitnessFamily("ss-to-x", delta.abstract(), tuple(blocks), tuple(slots), tuple(rule),
                         generic, delta.abstract())


def family_X_to_U(delta: JordanData) -> WitnessFamily:
    """Generic fiber in X(Δ); setting all eigenvalues equal gives U(ΣΔ)."""
    g = gamma(delta)
    slots = tuple(f"alpha{i}" for i in range(1, delta.m + 1))
    blocks = []
    for col in range(len(g)):
        runs = tuple((slots[i], lam[col]) for i, lam in enumerate(delta.blocks) if col < len(lam))
        blocks.append(runs)
    rule = tuple((s, slots[0]) for s in slots[1:])
    return WitnessFamily("x-to-u", delta.abstract(), tuple(blocks), slots, rule,
                         delta.abstract(), JordanData((g,)))


def build_family(delta: JordanData, mode: str) -> WitnessFamily:
    if mode == "ss-to-x":
        return family_semisimple_to_X(delta)
    if mode == "x-to-u":
        return family_X_to_U(delta)
    raise ValueError(f"unknown witness mode {mode!r}; expected one of {MODES}")


def _draw(rng: random.Random, field: Field, count: int):
    if isinstance(field, PrimeField):
        return [rng.randrange(field.p) for _ in range(count)]
    bound = 5 * count + 5
    return [Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(count)]


def distinct_assignment(family: WitnessFamily, field: Field, rng: random.Random) -> dict[str, object]:
    """Random slot values, pairwise distinct (rejection sampling)."""
    k = len(family.slots)
    if isinstance(field, PrimeField) and field.p <= k:
        raise FieldTooSmall(f"GF({field.p}) has too few elements for {k} distinct slot values")
    while True:
        vals = [field(v) for v in _draw(rng, field, k)]
        if len(set(vals)) == k:
            return dict(zip(family.slots, vals))


@dataclass
class WitnessReport:
    family: WitnessFamily
    field: Field
    seed: int
    samples: list[dict] = dc_field(default_factory=list)
    centralizer_dim: int | None = None
    passed: bool = True

    def to_json(self) -> dict:
        return {
            "claim": "thm2.2-part1" if self.family.mode == "ss-to-x" else "thm2.2-part2",
            "family": self.family.to_json(),
            "field": self.field.to_json(),
            "seed": self.seed,
            "samples": self.samples,
            "centralizer_dim": self.centralizer_dim,
            "passed": self.passed,
        }


def _fmt(field: Field, assignment: Mapping[str, object]) -> dict[str, str]:
    return {s: field.format(v) for s, v in assignment.items()}


def verify_witness(family: WitnessFamily, field: Field = QQ, samples: int = 3, seed: int = 0,
                   curve_ts: Sequence[int] = ()) -> WitnessReport:
    """Check declared fiber types on random distinct parameters.

    ``curve_ts`` additionally walks the line from the special assignment to
    the generic one (slot = target + t * offset) and checks each nonzero t
    whose values remain distinct.  Raises TypeMismatch on any failure.
    """
    rng = random.Random(seed)
    report = WitnessReport(family, field, seed)
    expected_c = centralizer_dim(family.generic_type)
    if centralizer_dim(family.special_type) != expected_c:
        raise TypeMismatch("declared fiber types have different centralizer dimensions")
    report.centralizer_dim = expected_c
    for _ in range(samples):
        gen = distinct_assignment(family, field, rng)
        special = family.special_assignment(gen)
        fibers = [("generic", gen, family.generic_type), ("special", special, family.special_type)]
        for t in curve_ts:
            t = field(t)
            if t == 0:
                continue
            pt = {s: field.add(special[s], field.mul(t, field.sub(gen[s], special[s]))) for s in family.slots}
            if len(set(pt.values())) == len(pt):
                fibers.append((f"curve t={field.format(t)}", pt, family.generic_type))
        record = {"assignment": _fmt(field, gen)}
        for name, assignment, declared in fibers:
            A = family.specialize(assignment, field)
            found = jordan_type_of(A)
            if found != declared:
                raise TypeMismatch(
                    f"{name} fiber has type {found.abstract()}, declared {declared}", _fmt(field, assignment)
                )
            cdim = commutant_dim(A)
            if cdim != expected_c:
                raise TypeMismatch(f"{name} fiber has centralizer dim {cdim}, expected {expected_c}",
                                   _fmt(field, assignment))
            record[name] = found.abstract().to_json()["blocks"]
        report.samples.append(record)
    return report

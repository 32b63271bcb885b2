"""Counting A-invariant subspaces of GF(q)^n and reading off dimensions.

The count of invariant d-subspaces over GF(q) is a polynomial in q whose
degree is the dimension of the fixed-point variety on the Grassmannian.
:func:`dimension_by_interpolation` recovers that degree from exact counts
at several primes and certifies it on held-out primes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Callable, Sequence, Union

import numpy as np

from .errors import GuardrailExceeded, InfeasibleE, InsufficientSamples, NotPolynomial
from .fields import QQ, Polynomial, PrimeField, interpolate
from .jordan import JordanData, jordan_type_of
from .linalg import ExactMatrix, char_poly, row_echelon, split_roots
from .varieties import VarietyDescriptor, bounded_compositions, fixed_dim_formula

DEFAULT_MAX_ENUM = 50_000_000
_CHUNK = 1 << 18


def gaussian_binomial(n: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of GF(q)^n."""
    if not 0 <= d <= n:
        raise InfeasibleE(f"d={d} outside 0..{n}")
    num = den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (d - i) - 1
    assert num % den == 0
    return num // den


def gaussian_binomial_poly(n: int, d: int) -> Polynomial:
    """The Gaussian binomial as a polynomial in q (q-Pascal recurrence)."""
    if not 0 <= d <= n:
        raise InfeasibleE(f"d={d} outside 0..{n}")
    # table[k] holds coefficient list of [m choose k]_q for the current m
    table = [[1]] + [[0] for _ in range(d)]
    for m in range(1, n + 1):
        new = [[1]]
        for k in range(1, d + 1):
            a, b = table[k - 1], table[k]
            shifted = [0] * k + b
            size = max(len(a), len(shifted))
            new.append([(a[i] if i < len(a) else 0) + (shifted[i] if i < len(shifted) else 0)
                        for i in range(size)])
        table = new
    return Polynomial(table[d], QQ)


def semisimple_count_polynomial(dims: Sequence[int], d: int) -> Polynomial:
    """Number of invariant d-subspaces of a split semisimple matrix with
    eigenspace dimensions ``dims``, as a polynomial in q."""
    if d < 0 or d > sum(dims):
        raise InfeasibleE(f"d={d} outside 0..{sum(dims)}")
    total = Polynomial([], QQ)
    for comp in bounded_compositions(dims, d):
        term = Polynomial([1], QQ)
        for di, ei in zip(dims, comp):
            term = term * gaussian_binomial_poly(di, ei)
        total = total + term
    assert total.degree == fixed_dim_formula(dims, d)
    return total


# -- echelon enumeration ------------------------------------------------------

def _pattern_count(A: np.ndarray, q: int, pivots: tuple[int, ...]) -> int:
    """Invariant subspaces among those whose RREF has the given pivot columns."""
    n = A.shape[0]
    d = len(pivots)
    pset = set(pivots)
    free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pset]
    f = len(free)
    base = np.zeros((d, n), dtype=np.int64)
    for i, p in enumerate(pivots):
        base[i, p] = 1
    At = A.T.astype(np.int64)
    piv = list(pivots)
    rows = np.array([i for i, _ in free], dtype=np.int64)
    cols = np.array([c for _, c in free], dtype=np.int64)
    total = q ** f
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        B = np.broadcast_to(base, (len(idx), d, n)).copy()
        if f:
            rem = idx
            for k in range(f):
                B[:, rows[k], cols[k]] = rem % q
                rem = rem // q
        # A b_i must lie in W; W's RREF gives the coordinates of A b_i for free.
        # Filtering one basis vector at a time keeps later rows cheap.
        for i in range(d):
            image = (B[:, i, :] @ At) % q
            coeffs = image[:, piv]
            residual = (image - np.einsum("bj,bjk->bk", coeffs, B)) % q
            B = B[~residual.any(axis=1)]
            if not len(B):
                break
        count += len(B)
    return count


def _pattern_job(args):
    return _pattern_count(*args)


def _as_int_array(A: ExactMatrix) -> tuple[np.ndarray, int]:
    if not isinstance(A.field, PrimeField):
        raise ValueError("subspace counting needs a matrix over a prime field")
    if not A.is_square:
        raise ValueError("subspace counting needs a square matrix")
    return np.array(A.rows, dtype=np.int64), A.field.p


def _check_guardrail(n: int, d: int, q: int, max_enum: int | None):
    if max_enum is not None:
        size = gaussian_binomial(n, d, q)
        if size > max_enum:
            raise GuardrailExceeded(f"{size} subspaces of dimension {d} in GF({q})^{n} exceed max_enum={max_enum}")


def count_fixed_subspaces(A: ExactMatrix, d: int, *, method: str = "echelon",
                          max_enum: int | None = DEFAULT_MAX_ENUM, workers: int = 1) -> int:
    """Number of d-dimensional subspaces W of GF(q)^n with AW ⊆ W.

    ``method="echelon"`` streams every reduced echelon basis, grouped by
    pivot pattern, and tests each basis image for membership in W.
    ``method="extension"`` only visits invariant subspaces, growing them one
    eigenline at a time; it needs a split characteristic polynomial.
    """
    n = A.n_rows
    if not 0 <= d <= n:
        raise InfeasibleE(f"d={d} outside 0..{n}")
    if method == "extension":
        return _count_by_extension(A, d, max_enum)
    if method != "echelon":
        raise ValueError(f"unknown counting method {method!r}")
    arr, q = _as_int_array(A)
    _check_guardrail(n, d, q, max_enum)
    if d == 0 or d == n:
        return 1
    jobs = [(arr, q, piv) for piv in combinations(range(n), d)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_pattern_job, jobs))
    return sum(_pattern_job(j) for j in jobs)


# -- output-sensitive enumeration ---------------------------------------------

def _count_by_extension(A: ExactMatrix, d: int, max_enum: int | None) -> int:
    """Grow invariant subspaces by invariant lines of the quotient.

    With a split spectrum every invariant W of dim k+1 contains an invariant
    U of dim k (take a complete invariant flag of A|W), and W/U is an
    eigenline of the map induced on V/U.
    """
    F = A.field
    _, q = _as_int_array(A)
    n = A.n_rows
    eigs = list(split_roots(char_poly(A)))
    cols = [[A.rows[i][c] for i in range(n)] for c in range(n)]
    level = {((), ())}
    for _ in range(d):
        nxt = set()
        for rows, pivots in level:
            free = [c for c in range(n) if c not in pivots]

            def reduce(v):
                v = list(v)
                for r, p in zip(rows, pivots):
                    if v[p]:
                        f = v[p]
                        v = [(x - f * y) % q for x, y in zip(v, r)]
                return v

            induced = [[0] * len(free) for _ in free]
            for j, c in enumerate(free):
                img = reduce(cols[c])
                for i, c2 in enumerate(free):
                    induced[i][j] = img[c2]
            for alpha in eigs:
                shifted = [[(x - alpha) % q if i == j else x for j, x in enumerate(r)]
                           for i, r in enumerate(induced)]
                for vec in _projective_kernel(shifted, F, q):
                    lifted = [0] * n
                    for c, x in zip(free, vec):
                        lifted[c] = x
                    new_rows, new_piv = row_echelon([*rows, lifted], F)
                    nxt.add((tuple(tuple(r) for r in new_rows), tuple(new_piv)))
                    if max_enum is not None and len(nxt) > max_enum:
                        raise GuardrailExceeded(f"more than max_enum={max_enum} invariant subspaces")
        level = nxt
    return len(level)


def _projective_kernel(M: list[list[int]], F, q: int):
    """One normalized representative of every line in the kernel of M."""
    k = len(M)
    if k == 0:
        return
    ech, pivots = row_echelon(M, F)
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * k
        v[fc] = 1
        for r, p in zip(ech, pivots):
            v[p] = (-r[fc]) % q
        basis.append(v)
    # lines <-> coefficient vectors whose first nonzero entry is 1
    dim = len(basis)
    for lead in range(dim):
        tail = dim - lead - 1
        for code in range(q ** tail):
            coeffs = [0] * lead + [1]
            for _ in range(tail):
                coeffs.append(code % q)
                code //= q
            yield [sum(c * b[i] for c, b in zip(coeffs, basis)) % q for i in range(k)]


# -- interpolation ------------------------------------------------------------

@dataclass(frozen=True)
class FixedCountSample:
    label: str
    d: int
    q: int
    count: int

    def to_json(self) -> dict:
        return {"representative": self.label, "d": self.d, "q": self.q, "count": self.count}

    def to_tsv(self) -> str:
        return f"{self.label}\t{self.d}\t{self.q}\t{self.count}"


TSV_HEADER = "representative\td\tq\tcount"


@dataclass
class DimensionResult:
    label: str
    d: int
    dimension: int
    certified: bool
    polynomial: Polynomial
    degree_bound: int
    samples: list[FixedCountSample] = dc_field(default_factory=list)
    skipped_primes: list[int] = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "representative": self.label,
            "d": self.d,
            "dimension": self.dimension,
            "certified": self.certified,
            "count_polynomial": self.polynomial.to_str("q"),
            "degree_bound": self.degree_bound,
            "samples": [s.to_json() for s in self.samples],
            "skipped_primes": self.skipped_primes,
        }


def nilpotent_degree_bound(size: int, blocks: int, e: int) -> int:
    """Upper bound on the dimension of invariant e-subspaces of a nilpotent
    matrix of the given size with ``blocks`` Jordan blocks.

    Every invariant W contains a line of the kernel and W/L is invariant in
    V/L (which has at most as many blocks), so counts grow at most like
    q^(e(blocks-1)); annihilators give the dual bound.
    """
    return min(e * (blocks - 1), (size - e) * (blocks - 1), e * (size - e))


def refined_degree_bound(delta: JordanData, d: int) -> int:
    """Degree bound for the count polynomial of a matrix of type ``delta``.

    An invariant subspace splits along generalized eigenspaces, so the bound
    is the best sum of per-eigenvalue nilpotent bounds.
    """
    sizes = [sum(lam) for lam in delta.blocks]
    return max(
        sum(nilpotent_degree_bound(s, len(lam), e) for s, lam, e in zip(sizes, delta.blocks, comp))
        for comp in bounded_compositions(sizes, d)
    )


Target = Union[VarietyDescriptor, ExactMatrix, Callable[[int], ExactMatrix]]


def _matrix_source(target: Target):
    """(label, declared abstract type or None, q -> matrix over GF(q))."""
    if isinstance(target, VarietyDescriptor):
        return target.label(), target.jordan_data(), lambda q: target.representative(PrimeField(q))
    if isinstance(target, ExactMatrix):
        if isinstance(target.field, PrimeField):
            raise ValueError("pass a rational matrix; it is reduced modulo each prime")
        declared = jordan_type_of(target).abstract()
        return f"matrix{declared}", declared, target.reduce_mod
    return getattr(target, "__name__", "custom"), None, target


def dimension_by_interpolation(target: Target, d: int, primes: Sequence[int], *,
                               degree_bound: int | str | None = None, method: str = "echelon",
                               max_enum: int | None = DEFAULT_MAX_ENUM, strict: bool = True,
                               workers: int = 1) -> DimensionResult:
    """Dimension of the fixed-point variety on G_d, via exact point counts.

    Primes where the representative's Jordan type does not survive reduction
    are skipped (for canonical representatives: p <= number of eigenvalues).
    The first ``bound + 1`` counts fix the interpolating polynomial; every
    remaining count must be reproduced exactly for the result to be
    certified.  ``degree_bound`` is ``None`` for d(n-d), ``"refined"`` for
    :func:`refined_degree_bound`, or an explicit int.
    """
    label, declared, make = _matrix_source(target)
    matrices = []
    skipped = []
    n = None
    for q in sorted(set(primes)):
        try:
            A = make(q)
        except (ValueError, ZeroDivisionError):
            skipped.append(q)
            continue
        if declared is not None and jordan_type_of(A) != declared:
            skipped.append(q)
            continue
        n = A.n_rows
        matrices.append((q, A))
    if n is None:
        raise InsufficientSamples(f"no admissible primes among {list(primes)} for {label}")
    if not 0 <= d <= n:
        raise InfeasibleE(f"d={d} outside 0..{n}")
    if degree_bound is None:
        bound = d * (n - d)
    elif degree_bound == "refined":
        if declared is None:
            raise ValueError("refined degree bound needs a target with known Jordan type")
        bound = refined_degree_bound(declared, d)
    else:
        bound = int(degree_bound)
    if len(matrices) < bound + 2:
        raise InsufficientSamples(
            f"{label}, d={d}: need {bound + 2} admissible primes for degree bound {bound}, "
            f"have {[q for q, _ in matrices]}"
        )
    samples = [FixedCountSample(label, d, q, count_fixed_subspaces(A, d, method=method, max_enum=max_enum,
                                                                   workers=workers))
               for q, A in matrices]
    fit = interpolate([(s.q, s.count) for s in samples[: bound + 1]], QQ)
    certified = all(fit(s.q) == s.count for s in samples[bound + 1:])
    if not certified and strict:
        raise NotPolynomial(f"{label}, d={d}: counts {[(s.q, s.count) for s in samples]} "
                            f"are not fit by a polynomial of degree <= {bound}")
    return DimensionResult(label, d, fit.degree, certified, fit, bound, samples, skipped)


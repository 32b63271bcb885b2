"""Dense exact matrices: rank, characteristic polynomial, root splitting, commutants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonSplit
from .fields import QQ, Field, Polynomial, PrimeField


@dataclass(frozen=True)
class ExactMatrix:
    field: Field
    rows: tuple[tuple, ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ) -> ExactMatrix:
        return cls(field, tuple(tuple(field(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> ExactMatrix:
        return cls.scalar(n, 1, field)

    @classmethod
    def scalar(cls, n: int, value, field: Field = QQ) -> ExactMatrix:
        v = field(value)
        return cls(field, tuple(tuple(v if i == j else field.zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None, field: Field = QQ) -> ExactMatrix:
        n_cols = n_rows if n_cols is None else n_cols
        return cls(field, tuple((field.zero,) * n_cols for _ in range(n_rows)))

    @classmethod
    def diagonal(cls, values: Sequence, field: Field = QQ) -> ExactMatrix:
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.field, tuple(zip(*self.rows)))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        F = self.field
        return ExactMatrix(F, tuple(tuple(F.add(a, b) for a, b in zip(r, s))
                                    for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        F = self.field
        return ExactMatrix(F, tuple(tuple(F.sub(a, b) for a, b in zip(r, s))
                                    for r, s in zip(self.rows, other.rows)))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch")
        F = self.field
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = F.zero
                for a, b in zip(r, c):
                    if a != 0 and b != 0:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return ExactMatrix(F, tuple(out))

    def __pow__(self, k: int) -> ExactMatrix:
        if not self.is_square or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result = ExactMatrix.identity(self.n_rows, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def shift(self, alpha) -> ExactMatrix:
        """``self - alpha * I``."""
        F = self.field
        a = F(alpha)
        return ExactMatrix(F, tuple(tuple(F.sub(x, a) if i == j else x for j, x in enumerate(r))
                                    for i, r in enumerate(self.rows)))

    def reduce_mod(self, p: int) -> ExactMatrix:
        """Image of a rational matrix in GF(p)."""
        G = PrimeField(p)
        return ExactMatrix(G, tuple(tuple(G(x) for x in r) for r in self.rows))

    def to_json(self) -> dict:
        F = self.field
        return {"field": F.to_json(), "entries": [[F.format(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> ExactMatrix:
        field = Field.from_json(data.get("field", {"kind": "rational"}))
        return cls.from_rows(data["entries"], field)

    def __str__(self):
        F = self.field
        cells = [[F.format(x) for x in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)


def block_diag(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    if not blocks:
        raise ValueError("need at least one block")
    F = blocks[0].field
    n = sum(b.n_rows for b in blocks)
    rows = [[F.zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        if b.field != F:
            raise ValueError("blocks over different fields")
        for i, r in enumerate(b.rows):
            rows[off + i][off:off + b.n_cols] = r
        off += b.n_rows
    return ExactMatrix(F, tuple(tuple(r) for r in rows))


def jordan_block(size: int, eigenvalue, field: Field = QQ) -> ExactMatrix:
    return ExactMatrix.from_rows(
        [[eigenvalue if i == j else (1 if j == i + 1 else 0) for j in range(size)] for i in range(size)],
        field,
    )


def row_echelon(rows: Sequence[Sequence], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of ``rows``; returns (nonzero rows, pivot columns)."""
    F = field
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    n_cols = len(m[0]) if m else 0
    for c in range(n_cols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def inverse(M: ExactMatrix) -> ExactMatrix:
    if not M.is_square:
        raise ValueError("inverse needs a square matrix")
    F = M.field
    n = M.n_rows
    eye = ExactMatrix.identity(n, F).rows
    ech, pivots = row_echelon([list(r) + list(e) for r, e in zip(M.rows, eye)], F)
    if pivots[:n] != list(range(n)) or len(ech) < n:
        raise ZeroDivisionError("matrix is singular")
    return ExactMatrix(F, tuple(tuple(r[n:]) for r in ech))


def rank(M: ExactMatrix) -> int:
    return len(row_echelon(M.rows, M.field)[1])


def char_poly(M: ExactMatrix) -> Polynomial:
    """Monic characteristic polynomial det(xI - M), division-free (Berkowitz).

    Only ring operations are used, so the result is correct over any
    commutative ring, in particular over GF(p) with p <= n.
    """
    if not M.is_square:
        raise ValueError("char_poly needs a square matrix")
    F = M.field
    A = M.rows
    n = M.n_rows
    # coefficients high -> low of the char poly of the leading k x k block
    p = [F.one]
    for k in range(n):
        col = [A[i][k] for i in range(k)]
        row = [A[k][j] for j in range(k)]
        toeplitz = [F.one, F.neg(A[k][k])]
        v = col
        for _ in range(k):
            toeplitz.append(F.neg(_dot(F, row, v)))
            v = [_dot(F, A[i][:k], v) for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = F.zero
            for j in range(min(i, k) + 1):
                acc = F.add(acc, F.mul(toeplitz[i - j], p[j]))
            new.append(acc)
        p = new
    return Polynomial(reversed(p), F)


def _dot(F: Field, a, b):
    acc = F.zero
    for x, y in zip(a, b):
        acc = F.add(acc, F.mul(x, y))
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_root_candidates(f: Polynomial) -> list[Fraction]:
    scale = 1
    for c in f.coeffs:
        scale = scale * Fraction(c).denominator // math.gcd(scale, Fraction(c).denominator)
    ints = [int(Fraction(c) * scale) for c in f.coeffs]
    lead, const = ints[-1], ints[0]
    cands = set()
    for a in _divisors(const):
        for b in _divisors(lead):
            cands.add(Fraction(a, b))
            cands.add(Fraction(-a, b))
    return sorted(cands)


def split_roots(f: Polynomial) -> dict:
    """Roots of ``f`` with multiplicities, or raise :class:`NonSplit`.

    Over GF(p) every residue is tried; over the rationals the rational
    root theorem bounds the candidates.
    """
    F = f.field
    if f.degree < 1:
        raise ValueError("split_roots needs a polynomial of degree >= 1")
    if not f.is_monic():
        f = Polynomial([F.div(c, f.coeffs[-1]) for c in f.coeffs], F)
    roots: dict = {}

    def strip(g: Polynomial, r):
        while g.degree >= 1:
            q, rem = g.deflate(r)
            if rem != 0:
                break
            roots[r] = roots.get(r, 0) + 1
            g = q
        return g

    g = strip(f, F.zero)
    if g.degree >= 1:
        cands = F.elements() if isinstance(F, PrimeField) else _rational_root_candidates(g)
        for r in cands:
            if r == 0:
                continue
            g = strip(g, F(r))
            if g.degree < 1:
                break
    if g.degree >= 1:
        raise NonSplit(f"{f} does not split over {F!r}; irreducible remainder {g}")
    return dict(sorted(roots.items()))


def commutation_operator(A: ExactMatrix) -> ExactMatrix:
    """Matrix of X -> AX - XA on n x n matrices, X flattened row-major."""
    if not A.is_square:
        raise ValueError("commutant needs a square matrix")
    F = A.field
    n = A.n_rows
    a = A.rows
    N = n * n
    rows = [[F.zero] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            out = i * n + j
            # (AX)_{ij} = sum_k a_ik X_kj ; (XA)_{ij} = sum_k X_ik a_kj
            for k in range(n):
                if a[i][k] != 0:
                    rows[out][k * n + j] = F.add(rows[out][k * n + j], a[i][k])
                if a[k][j] != 0:
                    rows[out][i * n + k] = F.sub(rows[out][i * n + k], a[k][j])
    return ExactMatrix(F, tuple(tuple(r) for r in rows))


def commutant_dim(A: ExactMatrix) -> int:
    """Dimension of the centralizer {X : AX = XA}."""
    return A.n_rows ** 2 - rank(commutation_operator(A))

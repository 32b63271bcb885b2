"""Exact scalar fields (the rationals and prime fields) and dense polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def primes_above(lo: int, count: int) -> list[int]:
    """The first ``count`` primes strictly greater than ``lo``."""
    out = []
    c = lo + 1
    while len(out) < count:
        if is_prime(c):
            out.append(c)
        c += 1
    return out


def _parse_fraction(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise TypeError(f"cannot read exact scalar from {text!r}")


class Field:
    """Common interface of :class:`RationalField` and :class:`PrimeField`.

    Scalars are plain Python values: ``Fraction`` for the rationals and
    ``int`` in ``range(p)`` for prime fields.
    """

    characteristic: int = 0
    zero: object
    one: object

    def __call__(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return self(a + b)

    def sub(self, a, b):
        return self(a - b)

    def mul(self, a, b):
        return self(a * b)

    def neg(self, a):
        return self(-a)

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format(self, a) -> str:
        return str(a)

    def to_json(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_json(data: dict) -> Field:
        kind = data.get("kind")
        if kind == "rational":
            return QQ
        if kind == "prime":
            return PrimeField(int(data["p"]))
        raise ValueError(f"unknown field kind {kind!r}")

    @staticmethod
    def parse(text: str) -> Field:
        """Read ``"rational"``/``"QQ"`` or ``"prime:7"``/``"F7"``/``"GF(7)"``."""
        t = text.strip()
        if t.lower() in ("rational", "rationals", "qq", "q"):
            return QQ
        for prefix in ("prime:", "gf(", "f"):
            if t.lower().startswith(prefix):
                return PrimeField(int(t[len(prefix):].rstrip(")")))
        raise ValueError(f"cannot parse field spec {text!r}")


@dataclass(frozen=True)
class RationalField(Field):
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        return _parse_fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def format(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def to_json(self) -> dict:
        return {"kind": "rational"}

    def __repr__(self):
        return "QQ"


QQ = RationalField()


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def __call__(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        v = _parse_fraction(value)
        if v.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {value!r} vanishes mod {self.p}")
        return v.numerator * pow(v.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def elements(self) -> range:
        return range(self.p)

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __repr__(self):
        return f"GF({self.p})"


class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs: Iterable, field: Field = QQ):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots: dict, field: Field = QQ) -> Polynomial:
        f = cls([1], field)
        for r, mult in roots.items():
            for _ in range(mult):
                f = f * cls([field.neg(field(r)), 1], field)
        return f

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        F = self.field
        x = F(x)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def _check(self, other: Polynomial):
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (F.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (F.zero,) * (n - len(other.coeffs))
        return Polynomial([F.add(x, y) for x, y in zip(a, b)], F)

    def __neg__(self) -> Polynomial:
        return Polynomial([self.field.neg(c) for c in self.coeffs], self.field)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Polynomial([], F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(out, F)

    def deflate(self, root) -> tuple[Polynomial, object]:
        """Synthetic division by ``x - root``: returns (quotient, remainder)."""
        F = self.field
        if not self.coeffs:
            return self, F.zero
        acc = F.zero
        quotient = []
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, root), c)
            quotient.append(acc)
        remainder = quotient.pop()
        return Polynomial(reversed(quotient), F), remainder

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        F = self.field
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            text = F.format(c)
            if i == 0:
                terms.append(text)
                continue
            mono = var if i == 1 else f"{var}^{i}"
            if text == "1":
                terms.append(mono)
            elif text == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"{text}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, {self.field!r})"

    def to_json(self) -> list[str]:
        return [self.field.format(c) for c in self.coeffs]


def interpolate(points: Sequence[tuple], field: Field = QQ) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points`` (Newton form)."""
    xs = [field(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    coef = [field(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = field.div(field.sub(coef[i], coef[i - 1]), field.sub(xs[i], xs[i - j]))
    poly = Polynomial([coef[-1]] if n else [], field)
    for i in range(n - 2, -1, -1):
        poly = poly * Polynomial([field.neg(xs[i]), 1], field) + Polynomial([coef[i]], field)
    return poly

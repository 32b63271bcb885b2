import random

import pytest

from jordansandwich.fields import QQ, PrimeField
from jordansandwich.linalg import ExactMatrix


def random_matrix(rng, n, field, lo=-4, hi=4, n_cols=None):
    n_cols = n if n_cols is None else n_cols
    return ExactMatrix.from_rows([[rng.randint(lo, hi) for _ in range(n_cols)] for _ in range(n)], field)


def random_invertible(rng, n, field):
    """Unit lower times unit upper triangular: invertible over every field."""
    lower = ExactMatrix.from_rows(
        [[1 if i == j else (rng.randint(-3, 3) if j < i else 0) for j in range(n)] for i in range(n)], field)
    upper = ExactMatrix.from_rows(
        [[1 if i == j else (rng.randint(-3, 3) if j > i else 0) for j in range(n)] for i in range(n)], field)
    return lower @ upper


FIELDS = [QQ, PrimeField(2), PrimeField(3), PrimeField(7)]


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES = []


def record_criterion(name, passed, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {name}" + (f" - {detail}" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

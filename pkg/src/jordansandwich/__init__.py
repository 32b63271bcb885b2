"""Jordan types, their degeneration sandwiches, and finite-field verification."""

from .errors import (
    CounterexampleFound,
    FieldTooSmall,
    GuardrailExceeded,
    InfeasibleE,
    InsufficientSamples,
    JordanSandwichError,
    NonSplit,
    NotPolynomial,
    TypeMismatch,
)
from .fields import QQ, Field, Polynomial, PrimeField
from .jordan import JordanData, centralizer_dim, d_of, enumerate_jordan_data, gamma, jordan_type_of, min_poly_degree
from .linalg import ExactMatrix, char_poly, commutant_dim, rank, split_roots
from .varieties import SandwichReport, VarietyDescriptor, fixed_dim_formula, membership, sandwich

__version__ = "0.1.0"

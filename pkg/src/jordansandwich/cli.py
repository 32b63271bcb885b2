"""Command-line front end.

Exit codes: 0 all checks passed, 1 a check failed, 2 input outside the
supported regime (non-split spectrum, guardrail, too few primes), 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import partitions as P
from .checkers import SandwichCheckFailed, check_sandwich_full, exhaustive_sum_scan
from .errors import (
    CounterexampleFound,
    FieldTooSmall,
    GuardrailExceeded,
    InfeasibleE,
    InsufficientSamples,
    NonSplit,
    NotPolynomial,
    TypeMismatch,
)
from .fields import QQ, Field, PrimeField
from .grassmann import TSV_HEADER, FixedCountSample, count_fixed_subspaces, dimension_by_interpolation
from .jordan import (
    JordanData,
    centralizer_dim,
    d_of,
    enumerate_jordan_data,
    gamma,
    jordan_type_of,
    min_poly_degree,
    parse_delta,
)
from .linalg import ExactMatrix, commutant_dim
from .varieties import VarietyDescriptor, sandwich
from .witness import MODES, build_family, verify_witness

EXIT_OK, EXIT_FAIL, EXIT_UNSUPPORTED, EXIT_USAGE = 0, 1, 2, 64
DEFAULT_SEED = 0
DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_json(text: str):
    """Inline JSON, or a path to a JSON file."""
    try:
        if text.lstrip().startswith(("{", "[")):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from exc


def _matrix(text: str, field: Field | None) -> ExactMatrix:
    data = _load_json(text)
    if isinstance(data, list):
        data = {"entries": data}
    if "field" not in data and field is not None:
        data = {**data, "field": field.to_json()}
    try:
        return ExactMatrix.from_json(data)
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad matrix JSON: {exc}") from exc


def _delta(text: str) -> JordanData:
    try:
        return parse_delta(text)
    except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"bad Jordan data {text!r}: {exc}") from exc


def _descriptor(text: str) -> VarietyDescriptor:
    """``U:[3,1]``, ``S:[2,1,1]``, ``X:[[2],[1,1]]`` or descriptor JSON."""
    try:
        if text[:2] in ("U:", "S:", "X:"):
            kind, body = text[0], json.loads(text[2:])
            if kind == "X":
                return VarietyDescriptor.X(JordanData(tuple(tuple(b) for b in body)))
            return VarietyDescriptor(kind, sum(body), partition=tuple(body))
        return VarietyDescriptor.from_json(_load_json(text))
    except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"bad variety descriptor {text!r}: {exc}") from exc


def _field(text: str | None) -> Field | None:
    if text is None:
        return None
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _primes(text: str | None) -> tuple[int, ...]:
    if text is None:
        return DEFAULT_PRIMES
    try:
        primes = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise UsageError(f"bad prime list {text!r}") from exc
    for p in primes:
        try:
            PrimeField(p)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return primes


# -- subcommands: each returns (payload, passed) ----------------------------

def cmd_analyze(args):
    A = _matrix(args.matrix, _field(args.field))
    jd = jordan_type_of(A)
    rep = sandwich(jd)
    cdim = centralizer_dim(jd)
    oracle = commutant_dim(A)
    payload = {
        "jordan_data": jd.to_json(),
        "delta": jd.abstract().to_json(),
        "gamma": list(gamma(jd)),
        "gamma_t": list(P.transpose(gamma(jd))),
        "centralizer_dim": cdim,
        "commutant_dim": oracle,
        "d": d_of(jd),
        "min_poly_degree": min_poly_degree(jd),
        "fixed_dims": list(rep.fixed_dims),
        "claims": {"thm2.2-part3": cdim == oracle},
    }
    return payload, cdim == oracle


def cmd_sandwich(args):
    return {"claim": "thm2.2", **sandwich(_delta(args.delta)).to_json()}, True


def cmd_witness(args):
    delta = _delta(args.delta)
    fam = build_family(delta, args.mode)
    field = _field(args.field) or QQ
    try:
        report = verify_witness(fam, field, samples=args.samples, seed=args.seed,
                                curve_ts=tuple(range(1, args.curve + 1)))
    except TypeMismatch as exc:
        return {"family": fam.to_json(), "passed": False, "error": str(exc), "assignment": exc.assignment}, False
    return report.to_json(), report.passed


def cmd_count_fixed(args):
    if (args.matrix is None) == (args.descriptor is None):
        raise UsageError("give exactly one of --matrix or --descriptor")
    if args.descriptor is not None:
        if args.q is None:
            raise UsageError("--q is required with --descriptor")
        V = _descriptor(args.descriptor)
        A, label = V.representative(PrimeField(args.q)), V.label()
    else:
        A = _matrix(args.matrix, _field(args.field))
        if args.q is not None:
            if isinstance(A.field, PrimeField) and A.field.p != args.q:
                raise UsageError(f"matrix is over GF({A.field.p}) but --q {args.q} was given")
            if not isinstance(A.field, PrimeField):
                A = A.reduce_mod(args.q)
        elif not isinstance(A.field, PrimeField):
            raise UsageError("rational matrix needs --q")
        label = "matrix"
    count = count_fixed_subspaces(A, args.d, method=args.method, max_enum=args.max_enum)
    return {"rows": [FixedCountSample(label, args.d, A.field.p, count)]}, True


def cmd_dimension(args):
    V = _descriptor(args.descriptor)
    bound = args.degree_bound
    if bound not in (None, "refined"):
        try:
            bound = int(bound)
        except ValueError as exc:
            raise UsageError(f"bad --degree-bound {bound!r}") from exc
    res = dimension_by_interpolation(V, args.d, _primes(args.primes), degree_bound=bound,
                                     method=args.method, max_enum=args.max_enum, strict=False)
    return {"claim": "thm2.2-part4", **res.to_json(), "rows": res.samples}, res.certified


def cmd_verify_sum(args):
    try:
        summary = exhaustive_sum_scan(args.n, args.s, max_n=args.max_n, exclude_central=args.exclude_central)
    except CounterexampleFound as exc:
        return {"claim": "thm3.1", "n": args.n, "s": args.s, "counterexample": exc.instance.to_json()}, False
    return summary.to_json(), True


def cmd_verify_sandwich(args):
    field = _field(args.field)
    try:
        ver = check_sandwich_full(_delta(args.delta), field=field, primes=_primes(args.primes), seed=args.seed,
                                  samples=args.samples, method=args.method, max_enum=args.max_enum)
    except SandwichCheckFailed as exc:
        return exc.verification.to_json(), False
    return ver.to_json(), ver.passed


def cmd_enumerate_types(args):
    types = enumerate_jordan_data(args.n)
    return {"n": args.n, "count": len(types), "types": [t.to_json() for t in types]}, True


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="rational | prime:P (also QQ, F7, GF(7))")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--primes", help="comma-separated primes for interpolation")
    common.add_argument("--max-enum", type=int, default=50_000_000,
                        help="refuse enumerations larger than this (0 disables)")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "tsv"), default="json")

    parser = _Parser(prog="jordansandwich", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="Jordan invariants of a matrix")
    p.add_argument("--matrix", required=True, help="matrix JSON (inline or path)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sandwich", parents=[common], help="sandwich data for a Jordan type")
    p.add_argument("--delta", required=True, help='e.g. "[[2],[1,1]]"')
    p.set_defaults(func=cmd_sandwich)

    p = sub.add_parser("witness", parents=[common], help="verify a degeneration family")
    p.add_argument("--delta", required=True)
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--curve", type=int, default=0, help="also check curve points t=1..CURVE")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("count-fixed", parents=[common], help="count invariant d-subspaces over GF(q)")
    p.add_argument("--matrix")
    p.add_argument("--descriptor", help="U:[3,1] | S:[2,1,1] | X:[[2],[1,1]]")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--method", choices=("echelon", "extension"), default="echelon")
    p.set_defaults(func=cmd_count_fixed)

    p = sub.add_parser("dimension", parents=[common], help="fixed-space dimension by interpolation")
    p.add_argument("--descriptor", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--degree-bound", help="int or 'refined' (default d(n-d))")
    p.add_argument("--method", choices=("echelon", "extension"), default="echelon")
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("verify-sum", parents=[common], help="exhaustive check of the sum inequality")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True, choices=(2, 3))
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--exclude-central", action="store_true", help="skip scalar matrix types")
    p.set_defaults(func=cmd_verify_sum)

    p = sub.add_parser("verify-sandwich", parents=[common], help="run all four sandwich checks")
    p.add_argument("--delta", required=True)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--method", choices=("echelon", "extension"), default="echelon")
    p.set_defaults(func=cmd_verify_sandwich)

    p = sub.add_parser("enumerate-types", parents=[common], help="list all Jordan types of size n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate_types)
    return parser


def _render(command: str, args, payload: dict, passed: bool) -> str:
    if args.format == "tsv":
        rows = payload.get("rows")
        if rows is None:
            raise UsageError("--format tsv is only available for count-fixed and dimension")
        return "\n".join([TSV_HEADER, *(r.to_tsv() for r in rows)]) + "\n"
    if "rows" in payload:
        payload = {**payload, "rows": [r.to_json() for r in payload["rows"]]}
    envelope = {"command": command, "seed": args.seed, "passed": passed, "result": payload}
    return json.dumps(envelope, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.max_enum == 0:
        args.max_enum = None
    try:
        payload, passed = args.func(args)
        text = _render(args.command, args, payload, passed)
    except UsageError as exc:
        print(f"jordansandwich: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonSplit, GuardrailExceeded, FieldTooSmall, InsufficientSamples, InfeasibleE) as exc:
        print(f"jordansandwich: unsupported: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (CounterexampleFound, NotPolynomial, TypeMismatch) as exc:
        print(f"jordansandwich: check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

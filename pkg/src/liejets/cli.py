"""Batch command line front end.

Subcommands:

* ``validate`` -- Jacobi-check an algebra spec (file path or built-in name)
* ``mul``      -- multiply two jet files, engine selectable with --via
* ``bracket``  -- pointwise bracket of two jet files (monomial output)
* ``verify``   -- run a verification suite and print the JSON report

Exit codes: 0 all checks pass, 1 a mathematical check failed or the inputs
are incompatible, 2 usage or input error.  All input/output is JSON on the
standard streams.  Same seed and flags give identical reports;
``--no-timing`` drops the per-check timing fields so reports are
byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebras import AlgebraError, LieAlgebraSpec, validate_algebra
from .bch import bch_mul
from .catalog import resolve_algebra
from .checks import SUITE_NAMES, run_suite
from .jets import Jet, JetError, jet_bracket, jet_convert, jet_mul
from .matrices import MatrixError, builtin_rep, matrix_mul
from .scalars import SignatureError, SignatureMismatch

USAGE_ERROR = 2
CHECK_FAILED = 1


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_json(path: str):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise _CliUsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise _CliUsageError(f"{path} is not valid JSON: {exc}") from exc


class _CliUsageError(Exception):
    pass


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2))


def cmd_validate(args) -> int:
    try:
        if os.path.exists(args.spec):
            spec = LieAlgebraSpec.from_json(_load_json(args.spec))
        else:
            try:
                spec = resolve_algebra(args.spec)
            except AlgebraError:
                raise _CliUsageError(
                    f"{args.spec!r} is neither a readable file nor a built-in algebra"
                ) from None
    except (_CliUsageError, AlgebraError, SignatureError) as exc:
        return _fail(str(exc), USAGE_ERROR)
    report = validate_algebra(spec)
    _emit({"algebra": spec.name, **report.to_json()})
    return 0 if report.ok else CHECK_FAILED


def _load_jet(path: str) -> Jet:
    doc = _load_json(path)
    try:
        algebra = resolve_algebra(doc.get("algebra", ""))
    except AlgebraError as exc:
        raise _CliUsageError(str(exc)) from exc
    try:
        return Jet.from_json(doc, algebra)
    except (JetError, AlgebraError, SignatureError, SignatureMismatch, KeyError) as exc:
        raise _CliUsageError(f"{path}: {exc}") from exc


def cmd_mul(args) -> int:
    try:
        a = _load_jet(args.a)
        b = _load_jet(args.b)
    except _CliUsageError as exc:
        return _fail(str(exc), USAGE_ERROR)
    if args.order is not None and (a.order != args.order or b.order != args.order):
        return _fail(
            f"expected order {args.order}, got {a.order} and {b.order}", CHECK_FAILED
        )
    try:
        if args.via == "def61":
            product = jet_mul(a, b)
        elif args.via == "bch":
            product = bch_mul(a, b)
        else:
            try:
                rep = builtin_rep(a.algebra.name)
            except MatrixError as exc:
                return _fail(str(exc), USAGE_ERROR)
            product = matrix_mul(a, b, rep)
    except (JetError, AlgebraError, SignatureMismatch) as exc:
        return _fail(str(exc), CHECK_FAILED)
    _emit(product.to_json())
    return 0


def cmd_bracket(args) -> int:
    try:
        a = _load_jet(args.a)
        b = _load_jet(args.b)
    except _CliUsageError as exc:
        return _fail(str(exc), USAGE_ERROR)
    try:
        result = jet_bracket(jet_convert(a, "monomial"), jet_convert(b, "monomial"))
    except (JetError, AlgebraError, SignatureMismatch) as exc:
        return _fail(str(exc), CHECK_FAILED)
    _emit(result.to_json())
    return 0


def cmd_verify(args) -> int:
    algebras = None
    if args.algebra is not None:
        try:
            algebras = [
                resolve_algebra(args.algebra, args.generators, args.nilpotency_class)
            ]
        except AlgebraError as exc:
            return _fail(str(exc), USAGE_ERROR)
    try:
        report = run_suite(
            suite=args.suite,
            algebras=algebras,
            order=args.order,
            trials=args.trials,
            seed=args.seed,
        )
    except MatrixError as exc:
        return _fail(str(exc), USAGE_ERROR)
    _emit(report.to_json(include_timing=not args.no_timing))
    return 0 if report.all_passed else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liejets",
        description="Exact jet group laws with machine-checked verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="Jacobi-check an algebra spec")
    p_validate.add_argument("spec", help="path to a spec JSON, or a built-in name")
    p_validate.set_defaults(func=cmd_validate)

    p_mul = sub.add_parser("mul", help="multiply two jets from files")
    p_mul.add_argument("a")
    p_mul.add_argument("b")
    p_mul.add_argument("--via", choices=("def61", "bch", "matrix"), default="def61",
                       help="engine: closed form (default), series, or matrix exp/log")
    p_mul.add_argument("--order", type=int, default=None,
                       help="require both jets to have this order")
    p_mul.set_defaults(func=cmd_mul)

    p_bracket = sub.add_parser("bracket", help="pointwise bracket of two jets")
    p_bracket.add_argument("a")
    p_bracket.add_argument("b")
    p_bracket.set_defaults(func=cmd_bracket)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p_verify.add_argument("--algebra", default=None,
                          help="restrict random trials to one algebra")
    p_verify.add_argument("--generators", type=int, default=None,
                          help="generator count for --algebra free-nilpotent/abelian")
    p_verify.add_argument("--class", dest="nilpotency_class", type=int, default=None,
                          help="nilpotency class for --algebra free-nilpotent")
    p_verify.add_argument("--order", type=int, choices=(1, 2, 3), default=None)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--no-timing", action="store_true",
                          help="omit timing fields for byte-identical reports")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

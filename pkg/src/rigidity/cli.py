"""Command-line front end.

Subcommands wrap the library: ``classify``, ``verify-derivation``, ``gr``,
``mason``, ``obstruct``, ``param-verify``, ``search``.  Output is
human-readable by default; ``--json`` emits a versioned payload with
``schema_version``, ``command`` and either ``result`` or ``error``.
``--deterministic`` suppresses timing so JSON output is byte-stable.

Exit codes: 0 success, 1 usage or input error, 2 violated internal invariant
(the last should never happen).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .derivation import (
    DEFAULT_PROBE_BOUND,
    Derivation,
    IllDefinedDerivationError,
    NilpotencyReport,
    certify_by_negative_grading,
    make_derivation,
    probe_nilpotency,
)
from .families import InternalInvariantError, Verdict, classify, recognize_family
from .grading import derivation_degree_jump, gr_presentation
from .mason import mason_check, obstruction_check
from .oracle import (
    HOMOGENEOUS_ZERO,
    UNIT_TARGET,
    ParametrizationProblem,
    bounded_search,
    verify_parametrization,
)
from .parsing import ParseError, _tokenize, format_poly, parse_poly
from .poly import Polynomial
from .quotient import RingPresentation

SCHEMA_VERSION = "1"
DEFAULT_VARIABLES = ("X", "Y", "Z", "T")


class CliInputError(Exception):
    """Bad flags or bad input text; reported on exit code 1."""


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; 2 is reserved here for
    # internal invariant violations, so route usage problems through our own
    # error type instead.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliInputError(message)


def _split_csv(text: str, flag: str) -> list[str]:
    items = [piece.strip() for piece in text.split(",")]
    if any(not piece for piece in items):
        raise CliInputError(f"{flag} expects a comma-separated list, got {text!r}")
    return items


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(piece) for piece in _split_csv(text, flag)]
    except ValueError as exc:
        raise CliInputError(f"{flag}: {exc}") from None


def _infer_variables(relation_text: str) -> tuple[str, ...]:
    """Default variable list: the X,Y,Z,T prefix covering every name used."""
    names = {
        token.text
        for token in _tokenize(relation_text)
        if token.kind == "name" and token.text != "i"
    }
    if not names:
        return DEFAULT_VARIABLES[:1]
    arity = 0
    for name in names:
        if name not in DEFAULT_VARIABLES:
            raise CliInputError(
                f"variable {name!r} is outside the default X,Y,Z,T; pass --vars"
            )
        arity = max(arity, DEFAULT_VARIABLES.index(name) + 1)
    return DEFAULT_VARIABLES[:arity]


def _resolve_variables(args: argparse.Namespace) -> tuple[str, ...]:
    if args.vars is not None:
        names = tuple(_split_csv(args.vars, "--vars"))
        if len(set(names)) != len(names):
            raise CliInputError(f"--vars has repeated names: {args.vars!r}")
        return names
    return _infer_variables(args.relation)


def _parse_assignments(
    pairs: Sequence[str], variables: tuple[str, ...], flag: str
) -> dict[str, str]:
    images: dict[str, str] = {}
    for pair in pairs:
        name, eq, text = pair.partition("=")
        name = name.strip()
        if not eq or not name:
            raise CliInputError(f"{flag} expects VAR=POLY, got {pair!r}")
        if name not in variables:
            raise CliInputError(f"{flag}: {name!r} is not one of {', '.join(variables)}")
        if name in images:
            raise CliInputError(f"{flag}: duplicate assignment for {name!r}")
        images[name] = text
    return images


def _probe_payload(report: NilpotencyReport) -> dict:
    payload = {
        "status": report.status,
        "certificate": report.certificate,
        "steps_per_generator": (
            list(report.steps_per_generator)
            if report.steps_per_generator is not None
            else None
        ),
        "bound_used": report.bound_used,
        "detail": report.detail,
    }
    if report.weights is not None:
        payload["weights"] = list(report.weights)
        payload["degree_drop"] = report.degree_drop
    return payload


def _witness_payload(witness: Derivation) -> dict[str, str]:
    return {
        var: format_poly(image.rep)
        for var, image in zip(witness.presentation.variables, witness.images)
    }


def _reverify_witness(verdict: Verdict) -> None:
    """Independently re-check a published witness before printing it."""
    witness = verdict.witness
    if witness is None:
        return
    if witness.is_zero:
        raise InternalInvariantError("published witness is the zero derivation")
    bound = max(DEFAULT_PROBE_BOUND, witness.presentation.relation.total_degree() + 2)
    report = probe_nilpotency(witness, bound=bound)
    if report.status != "certified":
        raise InternalInvariantError(
            f"published witness failed re-verification: {report.detail}"
        )


def cmd_classify(args: argparse.Namespace) -> dict:
    variables = _resolve_variables(args)
    relation = parse_poly(args.relation, variables)
    descriptor = recognize_family(relation)
    verdict = classify(descriptor)
    _reverify_witness(verdict)
    result = {
        "family": {
            "kind": descriptor.kind,
            "exponents": list(descriptor.exponents),
            "variables": list(descriptor.variables),
            "roles": list(descriptor.roles),
        },
        "status": verdict.status,
        "citation": verdict.citation,
        "notes": list(verdict.notes),
        "witness": None,
    }
    if verdict.witness is not None:
        result["witness"] = _witness_payload(verdict.witness)
        if verdict.witness_report is not None:
            result["witness_steps"] = list(verdict.witness_report.steps_per_generator)
    return result


def cmd_verify_derivation(args: argparse.Namespace) -> dict:
    variables = _resolve_variables(args)
    relation = parse_poly(args.relation, variables)
    presentation = RingPresentation(variables, relation)
    assignments = _parse_assignments(args.image or (), variables, "--image")
    images = [
        parse_poly(assignments[v], variables) if v in assignments
        else Polynomial.zero(variables)
        for v in variables
    ]
    try:
        derivation = make_derivation(presentation, images)
    except IllDefinedDerivationError as exc:
        return {"well_defined": False, "detail": str(exc)}
    result = {
        "well_defined": True,
        "nonzero": not derivation.is_zero,
        "probe": _probe_payload(probe_nilpotency(derivation, bound=args.probe_bound)),
    }
    if args.weights is not None:
        weights = _parse_int_list(args.weights, "--weights")
        try:
            result["negative_grading"] = _probe_payload(
                certify_by_negative_grading(derivation, weights)
            )
        except ValueError as exc:
            result["negative_grading"] = {"status": "inapplicable", "detail": str(exc)}
        try:
            result["degree_jump"] = derivation_degree_jump(derivation, weights).jump
        except ValueError as exc:
            result["degree_jump"] = None
            result["degree_jump_detail"] = str(exc)
    return result


def cmd_gr(args: argparse.Namespace) -> dict:
    variables = _resolve_variables(args)
    relation = parse_poly(args.relation, variables)
    presentation = RingPresentation(variables, relation)
    weights = _parse_int_list(args.weights, "--weights")
    graded = gr_presentation(presentation, weights)
    top = graded.quotient.relation
    return {
        "relation": format_poly(relation),
        "weights": list(graded.weights),
        "top_part": format_poly(top),
        "homogeneous": top == relation,
        "variables": list(variables),
    }


def cmd_mason(args: argparse.Namespace) -> dict:
    pieces = [piece.strip() for piece in args.polys.split(";")]
    if any(not piece for piece in pieces):
        raise CliInputError(f"--polys expects 'p1;p2;...', got {args.polys!r}")
    polys = [parse_poly(piece, (args.var,)) for piece in pieces]
    report = mason_check(polys)
    return {
        "hypotheses_ok": report.hypotheses_ok,
        "violation": report.violation,
        "max_degree": report.max_degree,
        "distinct_roots_each": list(report.distinct_roots_each),
        "distinct_roots_product": report.distinct_roots_product,
        "bound_product": report.bound_product,
        "bound_sum": report.bound_sum,
        "holds_product": report.holds_product,
        "holds_sum": report.holds_sum,
        "all_constant": report.all_constant,
    }


def cmd_obstruct(args: argparse.Namespace) -> dict:
    params: dict[str, int] = {}
    for piece in _split_csv(args.params, "--params"):
        name, eq, value = piece.partition("=")
        if not eq:
            raise CliInputError(f"--params expects k=v pairs, got {piece!r}")
        try:
            params[name.strip()] = int(value)
        except ValueError:
            raise CliInputError(f"--params: {value!r} is not an integer") from None
    verdict = obstruction_check(args.pattern, params)
    return {"status": verdict.status, "rule": verdict.rule, "detail": verdict.detail}


def cmd_param_verify(args: argparse.Namespace) -> dict:
    variables = _resolve_variables(args)
    relation = parse_poly(args.relation, variables)
    problem = ParametrizationProblem(relation, args.constraint)
    assignments = _parse_assignments(args.sub or (), variables, "--sub")
    parameter = (args.param_var,)
    candidates = [
        parse_poly(assignments[v], parameter) if v in assignments
        else Polynomial.zero(parameter)
        for v in variables
    ]
    check = verify_parametrization(problem, candidates)
    return {
        "constraint": args.constraint,
        "ok": check.ok,
        "residual": format_poly(check.residual),
    }


def cmd_search(args: argparse.Namespace) -> dict:
    variables = _resolve_variables(args)
    relation = parse_poly(args.relation, variables)
    bounds = _parse_int_list(args.max_deg, "--max-deg")
    if len(bounds) != len(variables):
        raise CliInputError(
            f"--max-deg needs {len(variables)} entries for {', '.join(variables)}"
        )
    problem = ParametrizationProblem(relation, args.constraint, tuple(bounds))
    outcome = bounded_search(
        problem,
        coefficient_window=args.coeff_window,
        gaussian=args.gaussian,
        variable=args.param_var,
    )
    result = {
        "status": outcome.status,
        "examined": outcome.examined,
        "candidates": None,
    }
    if outcome.candidates is not None:
        result["candidates"] = {
            var: format_poly(p) for var, p in zip(variables, outcome.candidates)
        }
    return result


def _human_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_human_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_human_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _scalar(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[]"
    if isinstance(value, dict):
        return "{}"
    return str(value)


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="rigidity", description=__doc__)
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON payload")
    common.add_argument(
        "--deterministic",
        action="store_true",
        help="omit timing so the output is byte-stable",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a hypersurface relation")
    p.add_argument("--relation", required=True)
    p.add_argument("--vars", default=None, help="comma-separated variable names")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser(
        "verify-derivation", parents=[common], help="check generator images for a quotient"
    )
    p.add_argument("--relation", required=True)
    p.add_argument("--vars", default=None)
    p.add_argument("--image", action="append", metavar="VAR=POLY")
    p.add_argument("--probe-bound", type=int, default=DEFAULT_PROBE_BOUND)
    p.add_argument("--weights", default=None, help="comma-separated integer weights")
    p.set_defaults(handler=cmd_verify_derivation)

    p = sub.add_parser("gr", parents=[common], help="top part and graded presentation")
    p.add_argument("--relation", required=True)
    p.add_argument("--vars", default=None)
    p.add_argument("--weights", required=True)
    p.set_defaults(handler=cmd_gr)

    p = sub.add_parser("mason", parents=[common], help="degree bounds for a zero-sum tuple")
    p.add_argument("--polys", required=True, help="semicolon-separated polynomials")
    p.add_argument("--var", default="S")
    p.set_defaults(handler=cmd_mason)

    p = sub.add_parser("obstruct", parents=[common], help="closed-form obstruction patterns")
    p.add_argument("--pattern", required=True)
    p.add_argument("--params", required=True, help="comma-separated k=v integers")
    p.set_defaults(handler=cmd_obstruct)

    p = sub.add_parser("param-verify", parents=[common], help="check a candidate parametrization")
    p.add_argument("--relation", required=True)
    p.add_argument("--vars", default=None)
    p.add_argument("--sub", action="append", metavar="VAR=POLY")
    p.add_argument("--constraint", choices=(HOMOGENEOUS_ZERO, UNIT_TARGET), default=HOMOGENEOUS_ZERO)
    p.add_argument("--param-var", default="S")
    p.set_defaults(handler=cmd_param_verify)

    p = sub.add_parser("search", parents=[common], help="bounded search for parametrizations")
    p.add_argument("--relation", required=True)
    p.add_argument("--vars", default=None)
    p.add_argument("--max-deg", required=True, help="comma-separated degree bounds")
    p.add_argument("--coeff-window", type=int, default=2)
    p.add_argument("--gaussian", action="store_true")
    p.add_argument("--constraint", choices=(HOMOGENEOUS_ZERO, UNIT_TARGET), default=HOMOGENEOUS_ZERO)
    p.add_argument("--param-var", default="S")
    p.set_defaults(handler=cmd_search)

    return parser


def _emit(payload: dict, as_json: bool, stream) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=stream)
    else:
        body = payload.get("result", payload.get("error"))
        print("\n".join(_human_lines(body)), file=stream)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    as_json = getattr(args, "json", False)
    deterministic = getattr(args, "deterministic", False)
    started = time.perf_counter()
    try:
        result = args.handler(args)
    except InternalInvariantError as exc:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "error": {"type": "internal_invariant", "message": str(exc)},
        }
        _emit(payload, as_json, sys.stderr if not as_json else sys.stdout)
        return 2
    except (CliInputError, ParseError, ValueError, ArithmeticError) as exc:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        _emit(payload, as_json, sys.stderr if not as_json else sys.stdout)
        return 1
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "result": result,
    }
    if as_json and not deterministic:
        payload["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)
    _emit(payload, as_json, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands::

    availkit eval   MODEL   evaluate and print the availability report
    availkit check  MODEL   parse + validate only, report diagnostics
    availkit oracle MODEL   cross-check evaluation against a brute-force
                            oracle (exhaustive enumeration or Monte Carlo)
    availkit whatif MODEL --set id.field=value [...]
                            compare the model before and after overrides

Exit codes: 0 success, 1 validation or evaluation failure, 2 I/O
failure, 3 oracle disagreement, 4 enumeration cap exceeded. Reports go
to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Sequence

from .components import (
    Component,
    DirectAvailability,
    MtbfMaintainability,
    MtbfMdt,
    derive_environment,
)
from .evaluate import EvaluationError, eval_block
from .model import Diagnostic, Model, validate
from .modelfile import ParseDiagnostic, parse_model
from .network import Network, PivotDepthError, eval_network
from .oracle import EnumerationCapError, enumerate_availability, monte_carlo_availability
from .probability import Probability
from .report import MINUTES_PER_YEAR, _json_num, _nines_json, build_report, render_json, render_text

__all__ = ["main"]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_MISMATCH = 3
EXIT_CAP = 4

ENUMERATION_TOLERANCE = 1e-9
MC_HALF_WIDTHS = 4.0

_OVERRIDE_FIELDS = frozenset(
    {"availability", "mtbf_h", "mdt_h", "mttres_h", "mldt_h", "madt_h", "pnrs", "tat_h"}
)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits 2 on usage problems; here 2 means an I/O failure,
    so bad invocations are reported as validation failures instead."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("model", help="path to a model file")
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    parser.add_argument(
        "--minutes-per-year",
        type=int,
        default=int(MINUTES_PER_YEAR),
        help="calendar used for downtime minutes (default 525600)",
    )
    parser.add_argument(
        "--enum-cap",
        type=int,
        default=20,
        help="largest instance count the enumeration oracle will accept",
    )
    parser.add_argument(
        "--pivot-depth",
        type=int,
        default=30,
        help="pivot recursion budget for network factoring",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="availkit", description="steady-state availability models")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    _add_common(sub.add_parser("eval", help="evaluate a model"))
    _add_common(sub.add_parser("check", help="parse and validate a model"))

    oracle = sub.add_parser("oracle", help="cross-check the evaluation")
    _add_common(oracle)
    oracle.add_argument("--mode", choices=("enumerate", "mc"), default="enumerate")
    oracle.add_argument("--samples", type=int, default=1_000_000)
    oracle.add_argument("--seed", type=int, default=1)

    whatif = sub.add_parser("whatif", help="compare against overridden parameters")
    _add_common(whatif)
    whatif.add_argument(
        "--set",
        dest="overrides",
        action="append",
        required=True,
        metavar="ID.FIELD=VALUE",
        help="override a component field before derivation (repeatable)",
    )
    return parser


def _print_diagnostics(
    path: str, parse_diags: Sequence[ParseDiagnostic], model_diags: Sequence[Diagnostic]
) -> None:
    for d in parse_diags:
        print(
            f"{path}:{d.span.line}:{d.span.column}: {d.severity}: {d.message}",
            file=sys.stderr,
        )
    for d in model_diags:
        print(f"{path}: {d.severity}: {d.message} (at {d.path})", file=sys.stderr)


def _diag_rows(
    parse_diags: Sequence[ParseDiagnostic], model_diags: Sequence[Diagnostic]
) -> list[tuple[str, str, str]]:
    rows = [
        (d.severity, f"line {d.span.line}, col {d.span.column}", d.message)
        for d in parse_diags
    ]
    rows.extend((d.severity, d.path, d.message) for d in model_diags)
    return rows


def _evaluate(model: Model, env, pivot_depth: int) -> Probability:
    if isinstance(model.system, Network):
        return eval_network(model.system, env, max_pivots=pivot_depth)
    return eval_block(model.system, env)


def _json_str(text: str) -> str:
    return json.dumps(text)


def _cmd_check(args, parse_diags, model_diags) -> int:
    rows = _diag_rows(parse_diags, model_diags)
    errors = sum(1 for severity, _, _ in rows if severity == "error")
    warnings = len(rows) - errors
    if args.format == "json":
        lines = [
            "{",
            f'  "valid": {"true" if errors == 0 else "false"},',
            f'  "errors": {errors},',
            f'  "warnings": {warnings},',
        ]
        if rows:
            lines.append('  "diagnostics": [')
            for i, (severity, where, message) in enumerate(rows):
                sep = "," if i + 1 < len(rows) else ""
                lines.append(
                    f'    {{"severity": {_json_str(severity)}, "where": {_json_str(where)}, '
                    f'"message": {_json_str(message)}}}{sep}'
                )
            lines.append("  ]")
        else:
            lines.append('  "diagnostics": []')
        lines.append("}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        verdict = "valid" if errors == 0 else "invalid"
        sys.stdout.write(f"{verdict}: {errors} error(s), {warnings} warning(s)\n")
        for severity, where, message in rows:
            sys.stdout.write(f"  {severity}: {message} ({where})\n")
    return EXIT_OK if errors == 0 else EXIT_VALIDATION


def _cmd_eval(args, model: Model, env) -> int:
    availability = _evaluate(model, env, args.pivot_depth)
    report = build_report(model, env, availability, float(args.minutes_per_year))
    text = render_json(report) if args.format == "json" else render_text(report)
    sys.stdout.write(text)
    return EXIT_OK


def _cmd_oracle(args, model: Model, env) -> int:
    exact = _evaluate(model, env, args.pivot_depth)
    if args.mode == "enumerate":
        estimate = enumerate_availability(model.system, env, cap=args.enum_cap)
        tolerance = ENUMERATION_TOLERANCE
        extra: list[tuple[str, str]] = []
    else:
        estimate, half_width = monte_carlo_availability(
            model.system, env, args.samples, args.seed
        )
        tolerance = MC_HALF_WIDTHS * half_width
        extra = [
            ("samples", str(args.samples)),
            ("seed", str(args.seed)),
            ("half_width_95", _json_num(half_width)),
        ]
    difference = abs(float(exact) - float(estimate))
    within = difference <= tolerance
    if args.format == "json":
        lines = [
            "{",
            f'  "mode": {_json_str(args.mode)},',
            f'  "exact": {_json_num(float(exact))},',
            f'  "oracle": {_json_num(float(estimate))},',
            f'  "abs_difference": {_json_num(difference)},',
        ]
        for key, value in extra:
            lines.append(f'  "{key}": {value},')
        lines.append(f'  "tolerance": {_json_num(tolerance)},')
        lines.append(f'  "within_tolerance": {"true" if within else "false"}')
        lines.append("}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        rows = [f"mode        {args.mode}"]
        rows.append(f"exact       {float.__repr__(float(exact))}")
        rows.append(f"oracle      {float.__repr__(float(estimate))}")
        rows.append(f"difference  {float.__repr__(difference)}")
        for key, value in extra:
            rows.append(f"{key.ljust(11)} {value}")
        rows.append(f"within tolerance: {'yes' if within else 'no'}")
        sys.stdout.write("\n".join(rows) + "\n")
    return EXIT_OK if within else EXIT_MISMATCH


def _parse_override(text: str) -> tuple[str, str, float]:
    lhs, eq, value_text = text.partition("=")
    cid, dot, field = lhs.partition(".")
    if not eq or not dot or not cid or not field:
        raise ValueError(f"override {text!r} must look like id.field=value")
    if field not in _OVERRIDE_FIELDS:
        raise ValueError(f"unknown field {field!r} in override {text!r}")
    try:
        value = float(value_text)
    except ValueError:
        raise ValueError(f"override value {value_text!r} is not a number") from None
    return cid, field, value


def _apply_override(component: Component, field: str, value: float) -> Component:
    spec = component.spec
    if field == "availability":
        return Component.direct(component.id, value)
    if isinstance(spec, MtbfMdt):
        if field == "mtbf_h":
            return Component.from_mtbf_mdt(component.id, value, spec.mdt_h)
        if field == "mdt_h":
            return Component.from_mtbf_mdt(component.id, spec.mtbf_h, value)
    if isinstance(spec, MtbfMaintainability):
        if field == "mtbf_h":
            return Component.from_maintainability(component.id, value, spec.maint)
        if field in ("mttres_h", "mldt_h", "madt_h", "tat_h"):
            maint = dataclasses.replace(spec.maint, **{field: value})
            return Component.from_maintainability(component.id, spec.mtbf_h, maint)
        if field == "pnrs":
            maint = dataclasses.replace(spec.maint, pnrs=Probability(value))
            return Component.from_maintainability(component.id, spec.mtbf_h, maint)
    form = {
        DirectAvailability: "direct availability",
        MtbfMdt: "mtbf/mdt",
        MtbfMaintainability: "mtbf/maintainability",
    }[type(spec)]
    raise ValueError(
        f"field {field!r} does not apply to component {component.id!r} ({form} form)"
    )


def _summary_json(label: str, report) -> list[str]:
    return [
        f'  "{label}": {{',
        f'    "availability": {_json_num(report.availability)},',
        f'    "unavailability": {_json_num(report.unavailability)},',
        f'    "nines": {_nines_json(report.nines)},',
        f'    "downtime_minutes_per_year": {_json_num(report.downtime_minutes_per_year)}',
        "  },",
    ]


def _cmd_whatif(args, model: Model, env) -> int:
    try:
        parsed = [_parse_override(text) for text in args.overrides]
        components = dict(model.components)
        for cid, field, value in parsed:
            if cid not in components:
                raise ValueError(f"unknown component {cid!r} in override")
            components[cid] = _apply_override(components[cid], field, value)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    modified = Model(components=components, system=model.system)
    modified_env = derive_environment(components)
    minutes = float(args.minutes_per_year)
    base = build_report(model, env, _evaluate(model, env, args.pivot_depth), minutes)
    after = build_report(
        modified, modified_env, _evaluate(modified, modified_env, args.pivot_depth), minutes
    )
    delta = after.downtime_minutes_per_year - base.downtime_minutes_per_year
    if args.format == "json":
        lines = ["{"]
        joined = ", ".join(_json_str(o) for o in args.overrides)
        lines.append(f'  "overrides": [{joined}],')
        lines.extend(_summary_json("baseline", base))
        lines.extend(_summary_json("modified", after))
        lines.append(f'  "downtime_delta_minutes_per_year": {_json_num(delta)}')
        lines.append("}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        rows = [
            f"overrides                {'; '.join(args.overrides)}",
            f"baseline availability    {float.__repr__(base.availability)}",
            f"modified availability    {float.__repr__(after.availability)}",
            f"downtime delta (min/yr)  {float.__repr__(delta)}",
        ]
        sys.stdout.write("\n".join(rows) + "\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        text = Path(args.model).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.model!r}: {exc}", file=sys.stderr)
        return EXIT_IO
    except UnicodeDecodeError as exc:
        print(f"error: {args.model!r} is not UTF-8: {exc}", file=sys.stderr)
        return EXIT_IO

    model, parse_diags = parse_model(text)
    model_diags = validate(model) if model is not None else []
    _print_diagnostics(args.model, parse_diags, model_diags)

    if args.command == "check":
        return _cmd_check(args, parse_diags, model_diags)
    if model is None or any(d.severity == "error" for d in model_diags):
        return EXIT_VALIDATION

    try:
        env = derive_environment(model.components)
        if args.command == "eval":
            return _cmd_eval(args, model, env)
        if args.command == "oracle":
            return _cmd_oracle(args, model, env)
        return _cmd_whatif(args, model, env)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PivotDepthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (EvaluationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())

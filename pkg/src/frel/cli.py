"""Command-line front end: CSV ingestion, solver commands, report emission.

Matrix files are UTF-8 comma-separated rows, one matrix row per line; blank
lines and ``#`` comment lines are ignored.  Right-hand-side files carry one
decimal per line.  Payloads go to stdout as text (4 decimals) or JSON
(round-trip-safe floats); diagnostics go to stderr.  Exit codes: 0 for
success/consistent, 1 for usage, parse, or domain errors, 2 for an
inconsistent system (check and solve only).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .algebra import DomainError, TNorm
from .chebyshev import UnsupportedTNormError, report_from_delta, row_deltas
from .oracle import (
    InstanceTooLargeError,
    OracleConfig,
    delta_by_bisection,
    delta_by_grid,
    row_deltas_by_bisection,
)
from .system import (
    DimensionMismatchError,
    System,
    as_unit_matrix,
    as_unit_vector,
    check_consistency,
)

COMMANDS = ("check", "solve", "distance", "approx", "oracle")


class ParseError(ValueError):
    """Malformed input file."""


class UsageError(ValueError):
    """Bad command line."""


@dataclass
class RunRequest:
    """One CLI invocation, decoupled from argparse for library callers."""

    command: str
    matrix_path: str
    rhs_path: str
    tnorm: TNorm
    tolerance: float = 1e-9
    output_format: str = "text"
    seed: int | None = None


@dataclass
class ExitReport:
    """Outcome of a run: exit code, stdout payload, optional stderr message."""

    exit_code: int
    payload: dict | None
    message: str | None = None


def _data_lines(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8 ({exc})") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_matrix_file(path: str) -> np.ndarray:
    """Parse comma-separated decimal rows into a unit matrix."""
    rows: list[list[float]] = []
    for lineno, line in _data_lines(path):
        try:
            row = [float(token) for token in line.split(",")]
        except ValueError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from exc
        if rows and len(row) != len(rows[0]):
            raise ParseError(
                f"{path}:{lineno}: expected {len(rows[0])} values, got {len(row)}"
            )
        rows.append(row)
    if not rows:
        raise ParseError(f"{path}: no data rows")
    return as_unit_matrix(rows)


def parse_vector_file(path: str) -> np.ndarray:
    """Parse a column vector file, one decimal per line."""
    values: list[float] = []
    for lineno, line in _data_lines(path):
        if "," in line:
            raise ParseError(f"{path}:{lineno}: expected a single value per line")
        try:
            values.append(float(line))
        except ValueError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from exc
    if not values:
        raise ParseError(f"{path}: no data lines")
    return as_unit_vector(values)


def format_matrix(matrix: np.ndarray) -> str:
    """Matrix file content whose parse round-trips bit-exactly."""
    rows = np.asarray(matrix, dtype=float)
    return "\n".join(",".join(repr(float(v)) for v in row) for row in rows) + "\n"


def format_vector(vector: np.ndarray) -> str:
    """Vector file content whose parse round-trips bit-exactly."""
    return "\n".join(repr(float(v)) for v in np.asarray(vector, dtype=float)) + "\n"


def _floats(values) -> list[float]:
    return [float(v) for v in np.asarray(values)]


def _run_check(system: System, request: RunRequest) -> ExitReport:
    verdict = check_consistency(system, request.tolerance)
    payload = {
        "tnorm": system.tnorm.value,
        "consistent": verdict.consistent,
        "residual": verdict.residual,
        "greatest_solution": _floats(verdict.candidate),
    }
    return ExitReport(0 if verdict.consistent else 2, payload)


def _run_solve(system: System, request: RunRequest) -> ExitReport:
    verdict = check_consistency(system, request.tolerance)
    if not verdict.consistent:
        return ExitReport(
            2,
            None,
            message=(
                f"system is inconsistent: residual {verdict.residual:.6g} exceeds "
                f"tolerance {request.tolerance:.6g}"
            ),
        )
    payload = {
        "tnorm": system.tnorm.value,
        "consistent": True,
        "residual": verdict.residual,
        "greatest_solution": _floats(verdict.candidate),
    }
    return ExitReport(0, payload)


def _row_shifts(system: System) -> tuple[np.ndarray, float, str]:
    # The minimum t-norm has no closed form here; fall back to bisection.
    if system.tnorm is TNorm.MINIMUM:
        shifts = row_deltas_by_bisection(system)
        return shifts, float(shifts.max()), "bisection"
    shifts = row_deltas(system)
    return shifts, float(shifts.max()), "closed-form"


def _run_distance(system: System, request: RunRequest) -> ExitReport:
    shifts, delta, method = _row_shifts(system)
    payload = {
        "delta": delta,
        "row_deltas": _floats(shifts),
        "tnorm": system.tnorm.value,
        "method": method,
    }
    return ExitReport(0, payload)


def _run_approx(system: System, request: RunRequest) -> ExitReport:
    shifts, delta, method = _row_shifts(system)
    report = report_from_delta(system, delta, shifts)
    report.validate(system)
    verdict = check_consistency(system, request.tolerance)
    payload = {
        "delta": report.delta,
        "row_deltas": _floats(report.row_deltas),
        "greatest_approx": _floats(report.greatest_approx),
        "greatest_solution": _floats(report.greatest_solution),
        "tnorm": system.tnorm.value,
        "consistent": verdict.consistent,
        "residual": verdict.residual,
        "method": method,
    }
    return ExitReport(0, payload)


def _run_oracle(system: System, request: RunRequest) -> ExitReport:
    cfg = OracleConfig()
    payload = {
        "delta": delta_by_bisection(system, cfg),
        "tnorm": system.tnorm.value,
        "method": "bisection",
    }
    if system.shape[0] <= 3:
        payload["grid_delta"] = delta_by_grid(system, cfg)
    return ExitReport(0, payload)


_HANDLERS = {
    "check": _run_check,
    "solve": _run_solve,
    "distance": _run_distance,
    "approx": _run_approx,
    "oracle": _run_oracle,
}


def run(request: RunRequest) -> ExitReport:
    """Execute a request against the files it names."""
    if request.command not in COMMANDS:
        raise UsageError(f"unknown command {request.command!r}")
    if request.tolerance < 0.0:
        raise UsageError("tolerance must be >= 0")
    system = System(
        parse_matrix_file(request.matrix_path),
        parse_vector_file(request.rhs_path),
        request.tnorm,
    )
    return _HANDLERS[request.command](system, request)


def _render_number(value: float) -> str:
    return f"{value:.4f}"


def _render_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = _render_number(value)
        elif isinstance(value, list):
            text = " ".join(_render_number(v) for v in value)
        else:
            text = str(value)
        lines.append(f"{key}: {text}")
    return "\n".join(lines)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2; the contract wants 1
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="frel",
        description="Check, solve, and repair max-T relational equation systems on [0, 1].",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    help_texts = {
        "check": "consistency verdict, greatest potential solution, residual",
        "solve": "greatest solution (fails with exit 2 if inconsistent)",
        "distance": "Chebyshev distance of the rhs and per-row shifts",
        "approx": "distance plus the greatest repaired rhs and its solution",
        "oracle": "bisection distance (and grid distance when n <= 3)",
    }
    for name in COMMANDS:
        sub = subparsers.add_parser(name, help=help_texts[name])
        sub.add_argument("-A", "--matrix", required=True, help="CSV matrix file")
        sub.add_argument("-b", "--rhs", required=True, help="rhs file, one value per line")
        sub.add_argument(
            "--tnorm", required=True, choices=[kind.value for kind in TNorm],
            help="t-norm of the system",
        )
        sub.add_argument("--tolerance", type=float, default=1e-9, help="consistency tolerance")
        sub.add_argument(
            "--format", dest="output_format", choices=("text", "json"), default="text",
            help="payload format on stdout",
        )
        sub.add_argument(
            "--seed", type=int, default=None,
            help="reserved for instance-generation workflows; ignored by these commands",
        )
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        request = RunRequest(
            command=args.command,
            matrix_path=args.matrix,
            rhs_path=args.rhs,
            tnorm=TNorm(args.tnorm),
            tolerance=args.tolerance,
            output_format=args.output_format,
            seed=args.seed,
        )
        report = run(request)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (
        ParseError,
        DomainError,
        DimensionMismatchError,
        UnsupportedTNormError,
        InstanceTooLargeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if report.message:
        print(report.message, file=sys.stderr)
    if report.payload is not None:
        if request.output_format == "json":
            print(json.dumps(report.payload))
        else:
            print(_render_text(report.payload))
    return report.exit_code

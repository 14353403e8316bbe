"""``qrat`` command line.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input or I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import ConsistencyError
from .figures import FigureOptions, snake_figure
from .finschubert import SUPPORTED_PRIMES, as_field, verify_main_theorem
from .qpoly import render
from .qrational import qrational
from .ratcf import cf_expand, cf_grassmannian_params, parse_rational
from .snakegraph import enumerate_paths, lambda_mu_explicit, snake_of
from .sweep import SweepConfig, run_sweep

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Anything that should end the command with exit code 2."""


@dataclass
class CommandRequest:
    subcommand: str
    rational: str | None = None
    fields: tuple[int, ...] = (2,)
    fmt: str = "text"
    output: str | None = None
    shade: bool = False
    paths: bool = False
    max_r: int = 0


def parse_fields(text: str) -> tuple[int, ...]:
    try:
        ps = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"field sizes must be comma-separated integers, got {text!r}") from None
    for p in ps:
        if p not in SUPPORTED_PRIMES:
            raise InputError(f"unsupported field size {p}; choose from {', '.join(map(str, SUPPORTED_PRIMES))}")
    return ps


def _rational(req: CommandRequest):
    try:
        return parse_rational(req.rational or "")
    except ValueError as e:
        raise InputError(str(e)) from None


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot write {path}: {e}") from None


def cmd_compute(req: CommandRequest) -> int:
    x = _rational(req)
    v = qrational(x)
    if req.fmt == "json":
        _emit(json.dumps(v.to_json()) + "\n", req.output)
        return EXIT_OK
    cf = cf_expand(x)
    lam, mu = lambda_mu_explicit(cf)
    k, n = cf_grassmannian_params(cf)
    g = snake_of(cf)
    lines = [
        f"r/s = {x}",
        f"cf = {cf}",
        f"R(q) = {render(v.numerator)}",
        f"S(q) = {render(v.denominator)}",
        f"lambda = {lam}",
        f"mu = {mu}",
        f"(k, n) = ({k}, {n})",
        f"snake word = {g.word or '(empty)'}",
        f"paths = {len(enumerate_paths(g))}",
    ]
    _emit("\n".join(lines) + "\n", req.output)
    return EXIT_OK


def cmd_verify(req: CommandRequest) -> int:
    x = _rational(req)
    reports = []
    for p in req.fields:
        try:
            reports.append(verify_main_theorem(x, as_field(p)))
        except ConsistencyError:
            raise
        except ValueError as e:
            raise InputError(str(e)) from None
    if req.fmt == "json":
        _emit(json.dumps([r.to_json() for r in reports]) + "\n", req.output)
    else:
        _emit("\n".join(r.to_text() for r in reports) + "\n", req.output)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def cmd_snake(req: CommandRequest) -> int:
    x = _rational(req)
    fmt = "ascii" if req.fmt == "text" else req.fmt
    text = snake_figure(cf_expand(x), fmt, FigureOptions(shade=req.shade, paths=req.paths))
    _emit(text, req.output)
    return EXIT_OK


def cmd_sweep(req: CommandRequest) -> int:
    if req.max_r < 0:
        raise InputError(f"--max-r must be nonnegative, got {req.max_r}")
    summary = run_sweep(SweepConfig(max_r=req.max_r, fields=req.fields))
    _emit(summary.matrix() + "\n", req.output)
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def cmd_selftest(req: CommandRequest) -> int:
    """Quick end-to-end check on a few hand-verified instances."""
    expected = {
        "5/2": ((1, 2, 1, 1), (1, 1)),
        "10/7": ((1, 1, 2, 3, 2, 1), (1, 1, 2, 2, 1)),
        "7/3": ((1, 2, 2, 1, 1), (1, 1, 1)),
    }
    ok = True
    for text, (num, den) in expected.items():
        v = qrational(parse_rational(text))
        good = v.numerator.coeffs == num and v.denominator.coeffs == den
        ok &= good
        print(f"{'PASS' if good else 'FAIL'} [{text}]_q")
    for text, p, count in (("7/3", 2, 148), ("4/1", 2, 15), ("7/3", 3, 1197)):
        rep = verify_main_theorem(parse_rational(text), p)
        good = rep.ok and rep.rhs == count
        ok &= good
        print(f"{'PASS' if good else 'FAIL'} {text} over F_{p}: {rep.lhs} = {rep.rhs}")
    summary = run_sweep(SweepConfig(max_r=10, fields=(2, 3)))
    ok &= summary.ok
    print(f"{'PASS' if summary.ok else 'FAIL'} sweep r <= 10 over F_2, F_3")
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "snake": cmd_snake,
    "sweep": cmd_sweep,
    "selftest": cmd_selftest,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qrat", description="q-rationals, snake graphs and Schubert cell counts")
    sub = ap.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="q-rational and combinatorial data for R/S")
    c.add_argument("rational")
    c.add_argument("--json", action="store_true")
    c.add_argument("-o", "--output")

    v = sub.add_parser("verify", help="finite-field point count check for R/S")
    v.add_argument("rational")
    v.add_argument("--fields", default="2")
    v.add_argument("--json", action="store_true")
    v.add_argument("-o", "--output")

    s = sub.add_parser("snake", help="draw the snake graph of R/S")
    s.add_argument("rational")
    s.add_argument("--format", choices=("ascii", "svg", "tikz", "dot"), default="ascii")
    s.add_argument("--shade", action="store_true", help="shade mu")
    s.add_argument("--paths", action="store_true", help="draw every lattice path")
    s.add_argument("-o", "--output")

    w = sub.add_parser("sweep", help="run the invariant suite for all s < r <= N")
    w.add_argument("--max-r", type=int, required=True)
    w.add_argument("--fields", default="2")
    w.add_argument("-o", "--output")

    sub.add_parser("selftest", help="quick end-to-end check")
    return ap


def request_from_args(ns: argparse.Namespace) -> CommandRequest:
    fmt = "text"
    if getattr(ns, "json", False):
        fmt = "json"
    elif getattr(ns, "format", None):
        fmt = ns.format
    return CommandRequest(
        subcommand=ns.subcommand,
        rational=getattr(ns, "rational", None),
        fields=parse_fields(ns.fields) if hasattr(ns, "fields") else (2,),
        fmt=fmt,
        output=getattr(ns, "output", None),
        shade=getattr(ns, "shade", False),
        paths=getattr(ns, "paths", False),
        max_r=getattr(ns, "max_r", 0),
    )


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    ns = build_parser().parse_args(argv)
    try:
        req = request_from_args(ns)
        return COMMANDS[req.subcommand](req)
    except InputError as e:
        print(f"qrat: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as e:
        print(f"qrat: consistency failure: {e}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())

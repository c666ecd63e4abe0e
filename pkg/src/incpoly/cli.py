"""Command-line front end: ``incpoly table|eval|verify|series``.

Exit status is 0 on success, 1 when a check is falsified and 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .families import fib, lucas
from .identities import CATALOG, IdentityReport, verify_catalog
from .incomplete import IndexOutOfRange, Kind, fib_incomplete, lucas_incomplete, max_l
from .polynomial import X, Polynomial, PolynomialSyntaxError, eval_int, format_poly, parse, to_json
from .series import (
    Variant,
    adjudicate_lucas,
    compare_gf_to_sequence,
    default_order,
    fib_complete_gf,
    fib_incomplete_direct,
    gf_fib_incomplete_closed,
    gf_lucas_incomplete_closed,
    lucas_incomplete_direct,
)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2

DEFAULT_H_SAMPLE = ("1", "2", "x", "x^2 + 1", "3*x")
FORMATS = ("markdown", "latex", "json", "csv")


@dataclass
class CliConfig:
    command: str
    kind: str | None = None
    h_text: list[str] = field(default_factory=lambda: ["x"])
    n_max: int | None = None
    n: int | None = None
    l: int | None = None
    order: int | None = None
    at: int = 1
    format: str = "markdown"
    variant: str = "both"
    literal_x: bool = False
    out: str | None = None

    @property
    def h(self) -> Polynomial:
        return parse(self.h_text[0])


# -- rendering -------------------------------------------------------------

def _cell_text(p: Polynomial, h_letter: bool) -> str:
    if h_letter:
        return format_poly(p, var="h", times="")
    return format_poly(p)


def _render(header: list[str], rows: list[list[str]], fmt: str, math_cols=()) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "latex":
        lines = [r"\begin{tabular}{" + "c|" + "l" * (len(header) - 1) + "}",
                 " & ".join(header) + r" \\", r"\hline"]
        for row in rows:
            cells = [f"${c}$" if (i in math_cols and c) else c for i, c in enumerate(row)]
            lines.append(" & ".join(cells) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------

def table_rows(kind: str, h: Polynomial, n_max: int) -> list[list[Polynomial]]:
    """Triangular array: row ``n`` holds the incomplete values for ``l = 0..max``."""
    k = Kind(kind)
    f = fib_incomplete if k is Kind.FIBONACCI else lucas_incomplete
    return [[f(h, n, l) for l in range(max_l(k, n) + 1)] for n in range(1, n_max + 1)]


def cmd_table(cfg: CliConfig) -> tuple[str, int]:
    kind = cfg.kind
    h = cfg.h
    n_max = cfg.n_max if cfg.n_max is not None else (10 if kind == "fib" else 9)
    rows = table_rows(kind, h, n_max)
    h_letter = h == X and not cfg.literal_x
    if cfg.format == "json":
        doc = {
            "kind": kind,
            "h": format_poly(h),
            "n_max": n_max,
            "rows": [
                {"n": n, "cells": [{"l": l, "text": format_poly(p), "poly": to_json(p)}
                                   for l, p in enumerate(row)]}
                for n, row in enumerate(rows, start=1)
            ],
        }
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    width = max(len(r) for r in rows) if rows else 0
    header = ["n \\ l"] + [str(l) for l in range(width)]
    body = []
    for n, row in enumerate(rows, start=1):
        cells = [_cell_text(p, h_letter) for p in row]
        body.append([str(n)] + cells + [""] * (width - len(cells)))
    return _render(header, body, cfg.format, math_cols=range(1, width + 1)), EXIT_OK


def _eval_points(cfg: CliConfig):
    kind = cfg.kind
    ns = [cfg.n] if cfg.n is not None else range(1, (cfg.n_max or 10) + 1)
    if kind in ("fib", "lucas"):
        for n in ns:
            if n < 0:
                raise IndexOutOfRange(f"n must be nonnegative, got {n}")
            yield n, None
        return
    k = Kind.FIBONACCI if kind == "fib_incomplete" else Kind.LUCAS
    for n in ns:
        if cfg.l is not None:
            if cfg.n is None and not (0 <= cfg.l <= max_l(k, n)):
                continue
            yield n, cfg.l
        else:
            for l in range(max_l(k, n) + 1):
                yield n, l


def cmd_eval(cfg: CliConfig) -> tuple[str, int]:
    h = cfg.h
    funcs = {
        "fib": lambda n, l: fib(h, n),
        "lucas": lambda n, l: lucas(h, n),
        "fib_incomplete": lambda n, l: fib_incomplete(h, n, l),
        "lucas_incomplete": lambda n, l: lucas_incomplete(h, n, l),
    }
    f = funcs[cfg.kind]
    values = [(n, l, eval_int(f(n, l), cfg.at)) for n, l in _eval_points(cfg)]
    if cfg.format == "json":
        doc = {
            "kind": cfg.kind,
            "h": format_poly(h),
            "at": cfg.at,
            "values": [{"n": n, "l": l, "value": str(v)} for n, l, v in values],
        }
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    header = ["n", "l", "value"]
    rows = [[str(n), "" if l is None else str(l), str(v)] for n, l, v in values]
    return _render(header, rows, cfg.format), EXIT_OK


def run_suite(h_texts, n_max: int, identities=None) -> list[IdentityReport]:
    reports = []
    for text in h_texts:
        reports.extend(verify_catalog(parse(text), n_max, identities))
    return reports


def cmd_verify(cfg: CliConfig, identities=None) -> tuple[str, int]:
    n_max = cfg.n_max if cfg.n_max is not None else 25
    reports = run_suite(cfg.h_text, n_max, identities)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FALSIFIED
    if cfg.format == "json":
        doc = {"n_max": n_max, "all_pass": code == EXIT_OK,
               "reports": [r.to_json() for r in reports]}
        return json.dumps(doc, indent=2) + "\n", code
    header = ["identity", "h", "points", "status", "first counterexample"]
    rows = []
    for r in reports:
        first = ""
        if r.counterexamples:
            c = r.counterexamples[0]
            args = ", ".join(f"{k}={v}" for k, v in c.args.items())
            first = f"{args}: {format_poly(c.lhs)} != {format_poly(c.rhs)}"
        rows.append([r.identity.value, r.h_description, str(r.points), r.status, first])
    text = _render(header, rows, cfg.format)
    if cfg.format == "markdown":
        bad = sum(not r.passed for r in reports)
        text += f"\n{len(reports) - bad}/{len(reports)} reports all_pass\n"
    return text, code


def cmd_series(cfg: CliConfig) -> tuple[str, int]:
    h = cfg.h
    kind = cfg.kind
    if kind != "fib_complete" and cfg.l is None:
        raise UsageError(f"series {kind} needs --l")
    l = cfg.l if cfg.l is not None else 0
    order = cfg.order if cfg.order is not None else default_order(l)

    results: list[tuple[str, list[Polynomial], object]] = []
    if kind == "fib_complete":
        closed = fib_complete_gf(h, order)
        direct = [fib(h, n) for n in range(order + 1)]
        results.append(("closed", list(closed.coeffs), compare_gf_to_sequence(closed, lambda n: direct[n])))
    elif kind == "fib_incomplete":
        closed = gf_fib_incomplete_closed(h, l, order)
        d = fib_incomplete_direct(h, l)
        direct = [d(n) for n in range(order + 1)]
        results.append(("closed", list(closed.coeffs), compare_gf_to_sequence(closed, lambda n: direct[n])))
    else:
        d = lucas_incomplete_direct(h, l)
        direct = [d(n) for n in range(order + 1)]
        variants = list(Variant) if cfg.variant == "both" else [Variant(cfg.variant)]
        for v in variants:
            closed = gf_lucas_incomplete_closed(h, l, order, v)
            results.append((v.value, list(closed.coeffs),
                            compare_gf_to_sequence(closed, lambda n: direct[n])))

    code = EXIT_OK if all(c.all_match for _, _, c in results) else EXIT_FALSIFIED
    if cfg.format == "json":
        doc = {
            "kind": kind,
            "h": format_poly(h),
            "l": cfg.l,
            "order": order,
            "direct": [to_json(p) for p in direct],
            "expansions": [
                {"variant": name, "coeffs": [to_json(p) for p in coeffs], "comparison": comp.to_json()}
                for name, coeffs, comp in results
            ],
        }
        return json.dumps(doc, indent=2) + "\n", code
    header = ["n", "direct"] + [name for name, _, _ in results]
    rows = [[str(n), format_poly(direct[n])] + [format_poly(coeffs[n]) for _, coeffs, _ in results]
            for n in range(order + 1)]
    text = _render(header, rows, cfg.format)
    if cfg.format in ("markdown", "latex"):
        lines = []
        for name, _, comp in results:
            if comp.all_match:
                lines.append(f"{name}: all_match through order {comp.order}")
            else:
                lines.append(f"{name}: first mismatch at n={comp.first_mismatch}: "
                             f"closed {format_poly(comp.closed)} vs direct {format_poly(comp.direct)}")
        sep = "\n" if cfg.format == "markdown" else "\n% "
        text += sep + sep.join(lines) + "\n"
    return text, code


class UsageError(Exception):
    pass


# -- argument parsing ------------------------------------------------------

def _common(p: argparse.ArgumentParser, multi_h: bool = False):
    if multi_h:
        p.add_argument("--h", dest="h_text", action="append", metavar="EXPR",
                       help="h(x); repeat for several (default: 1, 2, x, x^2+1, 3*x)")
    else:
        p.add_argument("--h", dest="h_text", default="x", metavar="EXPR", help="h(x) (default x)")
    p.add_argument("--n-max", type=int, metavar="N")
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="incpoly",
        description="Incomplete h(x)-Fibonacci and h(x)-Lucas polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="triangular table of incomplete polynomials")
    p.add_argument("kind", choices=("fib", "lucas"))
    p.add_argument("--literal-x", action="store_true",
                   help="print cells in x even when h = x (default prints h)")
    _common(p)

    p = sub.add_parser("eval", help="evaluate polynomials at an integer")
    p.add_argument("kind", choices=("fib", "lucas", "fib_incomplete", "lucas_incomplete"))
    p.add_argument("--at", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    _common(p)

    p = sub.add_parser("verify", help="check the identity catalog over a grid")
    _common(p, multi_h=True)

    p = sub.add_parser("series", help="expand a closed-form generating function")
    p.add_argument("kind", choices=("fib_complete", "fib_incomplete", "lucas_incomplete"))
    p.add_argument("--l", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--variant", choices=("printed", "candidate", "both"), default="both")
    _common(p)
    return parser


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    h_text = ns.h_text
    if h_text is None:
        h_text = list(DEFAULT_H_SAMPLE)
    elif isinstance(h_text, str):
        h_text = [h_text]
    cfg = CliConfig(
        command=ns.command,
        kind=getattr(ns, "kind", None),
        h_text=h_text,
        n_max=ns.n_max,
        n=getattr(ns, "n", None),
        l=getattr(ns, "l", None),
        order=getattr(ns, "order", None),
        at=getattr(ns, "at", 1),
        format=ns.format,
        variant=getattr(ns, "variant", "both"),
        literal_x=getattr(ns, "literal_x", False),
        out=ns.out,
    )
    if cfg.n_max is not None and cfg.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    for text in cfg.h_text:
        parse(text)
    return cfg


COMMANDS = {"table": cmd_table, "eval": cmd_eval, "verify": cmd_verify, "series": cmd_series}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        text, code = COMMANDS[cfg.command](cfg)
    except (PolynomialSyntaxError, IndexOutOfRange, UsageError, ValueError) as exc:
        print(f"incpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

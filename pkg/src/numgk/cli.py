"""Command-line surface: tables, entropy reports, diagnostics, word search.

Exit codes: 0 success, 1 usage/parse error, 2 computation or
token/model-incompatibility error. JSON output is byte-stable for fixed
inputs and tool version; markdown tables mirror the classification and
spectral-radius tables for eyeball diffing.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .actions import (
    ActionMatrix,
    IncompatibleTokenError,
    compose,
    fiber_projection_check,
    is_numerical_isometry,
    parse_word,
    Tag,
)
from .algebraic import RealAlgebraicEnclosure
from .entropy import GYStatus, gy_gap_report
from .explorer import SearchConfig, SearchHit, canonical_key, search
from .matrices import Matrix
from .minpoly import factor_int_poly
from .polynomials import IntPolynomial
from .spectral import spectral_radius
from .surfaces import (
    BIELLIPTIC_TABLE,
    SurfaceKind,
    SurfaceModel,
    bielliptic,
    parse_surface_spec,
)

DEFAULT_DIGITS = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise UsageError(message)


@dataclass(frozen=True)
class OutputDocument:
    format: str
    payload: dict
    text: str

    def render(self) -> str:
        return self.text


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=True)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _md_table(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# exact root labels (for eyeball-diffable eigenvalue tables)
# ---------------------------------------------------------------------------

def _sqrt_free(n: int) -> tuple[int, int]:
    """n = m**2 * f with f square-free; returns (m, f) for n >= 1."""
    m, f = 1, 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        m *= d ** (e // 2)
        if e % 2:
            f *= d
        d += 1
    return m, f * n


def _radical_text(coef: int, imaginary: bool, f: int) -> str:
    mag = "" if coef == 1 else str(coef)
    i = "i" if imaginary else ""
    if f == 1:
        return f"{mag}{i}" if (mag or i) else "1"
    return f"{mag}{i}√{f}"


def root_label(poly: IntPolynomial) -> str:
    """Human-readable exact root description of an irreducible factor."""
    if poly.degree == 1:
        return str(Fraction(-poly.coeffs[0], poly.coeffs[1]))
    if poly.degree == 2:
        c, b, a = poly.coeffs[0], poly.coeffs[1], poly.coeffs[2]
        disc = b * b - 4 * a * c
        m, f = _sqrt_free(abs(disc))
        g = math.gcd(math.gcd(abs(b), m), 2 * a)
        bq, mq, den = -b // g, m // g, 2 * a // g
        rad = _radical_text(mq, disc < 0, f)
        if bq == 0:
            num = f"±{rad}"
        else:
            num = f"{bq} ± {rad}"
        return num if den == 1 else f"({num})/{den}"
    return f"roots of {poly}"


def rho_label(enc: RealAlgebraicEnclosure) -> str:
    """Exact surd string for the radius when it is rational or quadratic."""
    if enc.is_point:
        return str(enc.lo)
    poly = enc.poly
    if poly.degree == 2:
        c, b, a = poly.coeffs[0], poly.coeffs[1], poly.coeffs[2]
        disc = b * b - 4 * a * c
        if disc > 0:
            m, f = _sqrt_free(disc)
            g = math.gcd(math.gcd(abs(b), m), 2 * a)
            bq, mq, den = -b // g, m // g, 2 * a // g
            rad = _radical_text(mq, False, f)
            # the radius is the larger root: the + branch (den > 0)
            num = f"{bq} + {rad}" if bq else rad
            return num if den == 1 else f"({num})/{den}"
    return f"largest root of {poly}"


def _rho_json(enc: RealAlgebraicEnclosure, digits: int) -> dict:
    return {
        "min_poly": str(enc.poly),
        "interval": [str(enc.lo), str(enc.hi)],
        "decimal": enc.decimal(digits),
        "label": rho_label(enc),
        "exact_rational": str(enc.lo) if enc.is_point else None,
    }


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_table1(fmt: str = "markdown") -> OutputDocument:
    """The classification of bielliptic surfaces: (type, G_S, ord(K_S), n, k)."""
    rows = [
        {"type": t, "G": g, "ord_K": n, "n": n, "k": k}
        for t, (n, k, g) in sorted(BIELLIPTIC_TABLE.items())
    ]
    payload = {"rows": rows}
    if fmt == "json":
        text = _json_text(payload)
    elif fmt == "csv":
        text = _csv_text(
            ["type", "G", "ord_K", "n", "k"],
            [[r["type"], r["G"], r["ord_K"], r["n"], r["k"]] for r in rows],
        )
    else:
        text = _md_table(
            ["Type", "G_S", "ord(K_S)", "n", "k"],
            [[r["type"], r["G"], r["ord_K"], r["n"], r["k"]] for r in rows],
        )
    return OutputDocument(fmt, payload, text)


def _table2_row(type_id: int, digits: int) -> dict:
    model = bielliptic(type_id)
    word = parse_word("fm_p;tensorH(-1)", model)
    act = compose(word, model)
    from .matrices import char_poly

    p = char_poly(act.matrix)
    factors = factor_int_poly(p)
    rho = spectral_radius(act.matrix)
    return {
        "type": type_id,
        "n": model.n,
        "k": model.k,
        "matrix": [[int(x) for x in row] for row in act.matrix.rows],
        "char_poly": str(p),
        "eigenvalues": [
            {"min_poly": str(f), "multiplicity": mult, "label": root_label(f)}
            for f, mult in factors
        ],
        "rho": _rho_json(rho, digits),
    }


def cmd_table2(type_filter: int | None = None, fmt: str = "markdown", digits: int = DEFAULT_DIGITS) -> OutputDocument:
    """Spectral radii of the fm_p-after-anti-ample-twist composites."""
    if type_filter is not None and type_filter not in BIELLIPTIC_TABLE:
        raise UsageError(f"unknown bielliptic type {type_filter}")
    types = [type_filter] if type_filter else sorted(BIELLIPTIC_TABLE)
    rows = [_table2_row(t, digits) for t in types]
    payload = {"rows": rows}
    if fmt == "json":
        text = _json_text(payload)
    elif fmt == "csv":
        text = _csv_text(
            ["type", "n", "k", "char_poly", "eigenvalues", "rho_min_poly", "rho", "rho_decimal"],
            [
                [
                    r["type"],
                    r["n"],
                    r["k"],
                    r["char_poly"],
                    "; ".join(f'{e["label"]} (x{e["multiplicity"]})' for e in r["eigenvalues"]),
                    r["rho"]["min_poly"],
                    r["rho"]["label"],
                    r["rho"]["decimal"],
                ]
                for r in rows
            ],
        )
    else:
        text = _md_table(
            ["Type", "eigenvalues", "rho", "rho (decimal)"],
            [
                [
                    r["type"],
                    ", ".join(
                        e["label"] if e["multiplicity"] == 1 else f'{e["label"]} (x{e["multiplicity"]})'
                        for e in r["eigenvalues"]
                    ),
                    r["rho"]["label"],
                    r["rho"]["decimal"],
                ]
                for r in rows
            ],
        )
    return OutputDocument(fmt, payload, text)


def cmd_entropy(surface_spec: str, word_text: str, digits: int = DEFAULT_DIGITS, fmt: str = "json") -> OutputDocument:
    """Entropy report for a word on a surface."""
    model = parse_surface_spec(surface_spec)
    word = parse_word(word_text, model)
    act = compose(word, model)
    report = gy_gap_report(act, digits)
    payload = {
        "surface": model.to_json(),
        "word": word_text.strip(),
        "report": report.to_json(digits),
    }
    if fmt == "json":
        text = _json_text(payload)
    elif fmt == "csv":
        r = payload["report"]
        text = _csv_text(
            ["surface", "word", "rho_min_poly", "rho_decimal", "log_rho", "positive", "gy_status"],
            [
                [
                    model.describe(),
                    payload["word"],
                    r["rho"]["min_poly"],
                    r["rho"]["decimal"],
                    r["log_rho"],
                    r["positive"],
                    r["gy_status"],
                ]
            ],
        )
    else:
        r = payload["report"]
        lines = [
            f"surface: {model.describe()}",
            f"word: {payload['word']}",
            f"rho: {rho_label(report.rho)}  (min poly {r['rho']['min_poly']}, ~ {r['rho']['decimal']})",
            f"h_cat lower bound log(rho): {r['log_rho']}",
            f"positive entropy certified: {r['positive']}",
            f"Gromov-Yomdin status: {r['gy_status']}",
            "citations: " + "; ".join(r["citations"]),
        ]
        text = "\n".join(lines)
    return OutputDocument(fmt, payload, text)


def cmd_check(surface_spec: str, word_text: str, fmt: str = "json") -> OutputDocument:
    """Isometry, determinant, and fiber-projection diagnostics for a word."""
    model = parse_surface_spec(surface_spec)
    word = parse_word(word_text, model)
    act = compose(word, model)
    det = act.matrix.det()
    verdict = is_numerical_isometry(act)
    fiber: bool | None = None
    if model.kind == SurfaceKind.BIELLIPTIC and word and all(t.tag == Tag.RELATIVE_FM_POTTER and not t.inverted for t in word):
        m = len(word)
        fiber = fiber_projection_check(act, Matrix.from_rows([[1, m], [0, 1]]))
    payload = {
        "surface": model.to_json(),
        "word": word_text.strip(),
        "det": str(det),
        "det_is_unit": abs(det) == 1,
        "isometry": {
            "ok": verdict.ok,
            "witness": list(verdict.witness) if verdict.witness else None,
            "expected": None if verdict.expected is None else str(verdict.expected),
            "actual": None if verdict.actual is None else str(verdict.actual),
        },
        "fiber_projection": fiber,
    }
    if fmt == "json":
        text = _json_text(payload)
    elif fmt == "csv":
        text = _csv_text(
            ["surface", "word", "det", "det_is_unit", "isometry_ok", "witness", "fiber_projection"],
            [
                [
                    parse_surface_spec(surface_spec).describe(),
                    payload["word"],
                    payload["det"],
                    payload["det_is_unit"],
                    verdict.ok,
                    " ".join(verdict.witness) if verdict.witness else "",
                    "" if fiber is None else fiber,
                ]
            ],
        )
    else:
        lines = [
            f"surface: {model.describe()}",
            f"word: {payload['word']}",
            f"det: {payload['det']} (unit: {payload['det_is_unit']})",
            f"Euler-pairing isometry: {verdict.ok}"
            + (
                ""
                if verdict.ok
                else f"  [witness chi({verdict.witness[0]},{verdict.witness[1]}): {verdict.expected} -> {verdict.actual}]"
            ),
            f"fiber projection (f = nB): {'n/a' if fiber is None else fiber}",
        ]
        text = "\n".join(lines)
    return OutputDocument(fmt, payload, text)


def _default_generators(model: SurfaceModel) -> str:
    if model.kind == SurfaceKind.BIELLIPTIC:
        return "fm_p;tensorH(-1)"
    if model.kind == SurfaceKind.K3:
        return "twistO;tensorHK3(-1)"
    if model.base is not None and model.base.kind == SurfaceKind.K3:
        return "twistO;tensorHK3(-1)"
    return "fm_p;tensorH(-1)"


def cmd_search(
    surface_spec: str,
    max_len: int = 3,
    max_states: int = 10000,
    generators_text: str | None = None,
    report_all: bool = False,
    include_inverses: bool = False,
    workers: int = 1,
    digits: int = DEFAULT_DIGITS,
) -> OutputDocument:
    """Search generator words; streams one JSON hit per line plus a summary."""
    model = parse_surface_spec(surface_spec)
    gen_text = generators_text if generators_text is not None else _default_generators(model)
    if model.is_block:
        # parse each generator separately so each becomes its own lift token
        tokens = tuple(parse_word(part, model)[0] for part in gen_text.split(";") if part.strip())
    else:
        tokens = parse_word(gen_text, model)
    config = SearchConfig(
        generators=tokens,
        max_len=max_len,
        max_states=max_states,
        report_all=report_all,
        include_inverses=include_inverses,
    )
    result = search(model, config, workers=workers)
    hit_objs = [h.to_json(digits) for h in result.hits]
    summary = {"summary": result.summary_json()}
    payload = {"hits": hit_objs, **summary}
    lines = [json.dumps(h, sort_keys=True, ensure_ascii=True) for h in hit_objs]
    lines.append(json.dumps(summary, sort_keys=True, ensure_ascii=True))
    return OutputDocument("jsonl", payload, "\n".join(lines))


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="numgk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, digits=True):
        p.add_argument("--format", choices=["json", "csv", "markdown"], default="json")
        if digits:
            p.add_argument("--digits", type=int, default=None, help="decimal digits (default 12, env NUMGK_DIGITS)")

    p1 = sub.add_parser("table1", help="classification of bielliptic surfaces")
    p1.add_argument("--format", choices=["json", "csv", "markdown"], default="markdown")

    p2 = sub.add_parser("table2", help="spectral radii of the fm_p * tensorH(-1) composites")
    p2.add_argument("--type", type=int, default=None, dest="type_filter")
    p2.add_argument("--format", choices=["json", "csv", "markdown"], default="markdown")
    p2.add_argument("--digits", type=int, default=None)

    pe = sub.add_parser("entropy", help="entropy report for a word on a surface")
    pe.add_argument("surface")
    pe.add_argument("word")
    add_common(pe)

    ps = sub.add_parser("search", help="search generator words with rho > 1")
    ps.add_argument("surface")
    ps.add_argument("--max-len", type=int, default=3)
    ps.add_argument("--max-states", type=int, default=10000)
    ps.add_argument("--generators", default=None, help="';'-separated generator tokens")
    ps.add_argument("--report-all", action="store_true")
    ps.add_argument("--inverses", action="store_true", help="include formal inverses")
    ps.add_argument("--workers", type=int, default=1)
    ps.add_argument("--digits", type=int, default=None)

    pc = sub.add_parser("check", help="isometry / determinant / fiber diagnostics")
    pc.add_argument("surface")
    pc.add_argument("word")
    pc.add_argument("--format", choices=["json", "csv", "markdown"], default="json")

    return parser


def _resolve_digits(value: int | None) -> int:
    if value is not None:
        digits = value
    else:
        env = os.environ.get("NUMGK_DIGITS")
        try:
            digits = int(env) if env else DEFAULT_DIGITS
        except ValueError:
            raise UsageError(f"NUMGK_DIGITS must be an integer, got {env!r}")
    if not 1 <= digits <= 60:
        raise UsageError("digits must be between 1 and 60")
    return digits


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "table1":
            doc = cmd_table1(args.format)
        elif args.command == "table2":
            doc = cmd_table2(args.type_filter, args.format, _resolve_digits(args.digits))
        elif args.command == "entropy":
            doc = cmd_entropy(args.surface, args.word, _resolve_digits(args.digits), args.format)
        elif args.command == "search":
            doc = cmd_search(
                args.surface,
                max_len=args.max_len,
                max_states=args.max_states,
                generators_text=args.generators,
                report_all=args.report_all,
                include_inverses=args.inverses,
                workers=args.workers,
                digits=_resolve_digits(args.digits),
            )
        elif args.command == "check":
            doc = cmd_check(args.surface, args.word, args.format)
        else:  # pragma: no cover
            raise UsageError(f"unknown command {args.command}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except IncompatibleTokenError as exc:
        print(f"incompatibility error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:  # pragma: no cover
        print(f"computation error: {exc}", file=sys.stderr)
        return 2
    print(doc.render())
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

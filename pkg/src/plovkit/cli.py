"""Command-line interface.

Input documents are JSON of the form

    {"name": "optional label", "matrix": [[1, "1/2"], [0, 1]]}

with integer or "p/q" string entries; floating-point literals are
rejected so that every number stays exact end to end.  Reports are JSON
on stdout (or --out FILE) with rationals serialized as integers or "p/q"
strings, plus a short human-readable summary on stderr.

Exit codes: 0 success, 1 invalid input, 2 precondition violated,
3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__, randgen
from .cohomology import TwoForm, plov_via_model, vanishing_scan
from .cyclotomic import QuasiUnipotencyVerdict, unipotent_power
from .errors import (
    CrossCheckError,
    InputFormatError,
    PlovkitError,
    PreconditionError,
)
from .exact import RatMatrix, UniPoly
from .jordan import HalfProfile, JordanProfile
from .plov import AnalysisReport, analyze, growth_exponent
from .powersum import power_sum_brute, power_sum_det
from .selfcheck import SELFTEST_SUITE_SIZE, run_selftest

_ENTRY_RE = r"^[+-]?\d+(/\d+)?$"


# ---------------------------------------------------------------------------
# input parsing


def parse_entry(raw, row: int, col: int) -> Fraction:
    position = f"row {row + 1}, column {col + 1}"
    if isinstance(raw, bool):
        raise InputFormatError(f"boolean entry at {position}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        raise InputFormatError(
            f"floating-point entry at {position}; use an integer or 'p/q' string"
        )
    if isinstance(raw, str):
        import re

        if not re.match(_ENTRY_RE, raw):
            raise InputFormatError(
                f"unparseable entry {raw!r} at {position}; expected 'p' or 'p/q'"
            )
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"bad rational {raw!r} at {position}: {exc}")
    raise InputFormatError(
        f"entry of type {type(raw).__name__} at {position}; "
        "expected an integer or 'p/q' string"
    )


def parse_input(data: bytes | str) -> tuple[Optional[str], RatMatrix]:
    """Parse an input document into (name, matrix) with exact entries."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputFormatError(f"input is not valid UTF-8: {exc}")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputFormatError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        )
    if not isinstance(doc, dict):
        raise InputFormatError("input document must be a JSON object")
    unknown = set(doc) - {"name", "matrix"}
    if unknown:
        raise InputFormatError(f"unknown fields: {sorted(unknown)}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputFormatError("field 'name' must be a string")
    grid = doc.get("matrix")
    if not isinstance(grid, list) or not grid:
        raise InputFormatError("field 'matrix' must be a nonempty 2D array")
    k = len(grid)
    rows = []
    for i, row in enumerate(grid):
        if not isinstance(row, list):
            raise InputFormatError(f"row {i + 1} is not an array")
        if len(row) != k:
            raise InputFormatError(
                f"non-square matrix: row {i + 1} has {len(row)} entries, "
                f"expected {k}"
            )
        rows.append([parse_entry(x, i, j) for j, x in enumerate(row)])
    return name, RatMatrix.from_rows(rows)


# ---------------------------------------------------------------------------
# JSON encoding of exact values


def enc_frac(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def enc_matrix(m: RatMatrix):
    return [[enc_frac(x) for x in row] for row in m.entries]


def enc_poly(p: UniPoly):
    return {
        "variable": p.var,
        "coefficients": [enc_frac(c) for c in p.coeffs],
        "degree": None if p.is_zero() else int(p.degree()),
        "text": str(p),
    }


def enc_verdict(v: QuasiUnipotencyVerdict):
    out = {"is_quasi_unipotent": v.is_quasi_unipotent}
    if v.is_quasi_unipotent:
        out["order"] = v.order
        out["cyclotomic_factorization"] = [
            {"order": n, "multiplicity": m} for n, m in v.cyclotomic_factorization
        ]
    else:
        out["residual"] = enc_poly(v.residual)
    return out


def enc_profile(p: JordanProfile):
    return {
        "dimension": p.dimension,
        "entries": [
            {"order": n, "size": k, "multiplicity": m} for n, k, m in p.entries
        ],
    }


def enc_half(h: HalfProfile):
    return {
        "genus": h.genus,
        "entries": [
            {"order": n, "size": k, "count": c} for n, k, c in h.entries
        ],
    }


def enc_analysis(report: AnalysisReport):
    return {
        "dimension": report.dimension,
        "genus": report.genus,
        "verdict": enc_verdict(report.verdict),
        "profile": enc_profile(report.profile),
        "pseudo_analytic": report.pseudo_analytic,
        "half_profile": enc_half(report.half) if report.half else None,
        "plov": report.plov,
        "kJ": report.kJ,
        "kf": report.kf,
        "max_block_n1": report.max_block_n1,
        "max_block_compound2": report.max_block_compound2,
        "exponents": {str(r): e for r, e in sorted(report.exponents.items())},
        "bound_checks": [
            {"name": c.name, "law": c.law, "holds": c.holds}
            for c in report.bound_checks
        ],
    }


def base_report(command: str, name: Optional[str], matrix: Optional[RatMatrix]):
    report = {
        "tool": {"name": "plovkit", "version": __version__},
        "command": command,
    }
    if matrix is not None:
        report["input"] = {
            "name": name,
            "dimension": matrix.dimension,
            "matrix": enc_matrix(matrix),
        }
    return report


def emit(report: dict, out_path: Optional[str]) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def summary(lines: list[str]) -> None:
    for line in lines:
        print(line, file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands


def _load(path: str) -> tuple[Optional[str], RatMatrix]:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read input file: {exc}")
    return parse_input(data)


def _parse_degrees(text: Optional[str], dimension: int) -> Optional[list[int]]:
    if text is None:
        return None
    try:
        degrees = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputFormatError(f"bad degree list {text!r}")
    if not degrees:
        raise InputFormatError("empty degree list")
    for r in degrees:
        if not 1 <= r <= dimension:
            raise InputFormatError(
                f"degree {r} out of range 1..{dimension}"
            )
    return degrees


def cmd_analyze(args) -> int:
    name, matrix = _load(args.input)
    degrees = _parse_degrees(args.degrees, matrix.dimension)
    report = base_report("analyze", name, matrix)
    result = analyze(matrix, degrees)
    report["analysis"] = enc_analysis(result)
    emit(report, args.out)
    lines = [
        f"dimension {result.dimension} (g = {result.genus}): quasi-unipotent, "
        f"order {result.verdict.order}",
        f"pseudo-analytic: {result.pseudo_analytic}",
    ]
    if result.pseudo_analytic:
        lines.append(
            f"plov = {result.plov}, kJ = {result.kJ}, kf = {result.kf}, "
            f"max block on degree-2 cohomology = {result.max_block_n1}"
        )
    held = sum(1 for c in result.bound_checks if c.holds)
    lines.append(f"bound checks: {held}/{len(result.bound_checks)} hold")
    summary(lines)
    return 0 if result.all_bounds_hold() else 3


def cmd_powersum(args) -> int:
    name, matrix = _load(args.input)
    order, u = unipotent_power(matrix)
    k = u.dimension
    if args.h == "identity":
        h = RatMatrix.identity(k)
        h_desc = "identity"
    else:
        import random

        h = randgen.random_spd(random.Random(args.seed), k)
        h_desc = f"random (G^T G + I, seed {args.seed})"
    result = power_sum_det(u, h)
    checks = []
    for n in range(1, args.samples + 1):
        brute = power_sum_brute(u, h, n)
        checks.append(
            {"n": n, "value": enc_frac(brute), "matches": result.poly(n) == brute}
        )
    report = base_report("powersum", name, matrix)
    report["powersum"] = {
        "unipotent_order": order,
        "form": h_desc,
        "form_matrix": enc_matrix(h),
        "poly": enc_poly(result.poly),
        "degree": result.degree,
        "leading_coeff": enc_frac(result.leading_coeff),
        "profile_degree": result.profile_degree,
        "brute_force_checks": checks,
    }
    emit(report, args.out)
    all_match = all(c["matches"] for c in checks)
    summary(
        [
            f"power-sum determinant degree {result.degree} "
            f"(leading coefficient {enc_frac(result.leading_coeff)})",
            f"brute-force agreement at n = 1..{args.samples}: {all_match}",
        ]
    )
    if not all_match:
        raise CrossCheckError("symbolic power sum disagrees with brute force")
    return 0


def cmd_growth(args) -> int:
    name, matrix = _load(args.input)
    degrees = _parse_degrees(args.degrees, matrix.dimension)
    if degrees is None:
        raise InputFormatError("--degrees is required for the growth command")
    order, _ = unipotent_power(matrix)
    exponents = {r: growth_exponent(matrix, r) for r in degrees}
    report = base_report("growth", name, matrix)
    report["growth"] = {
        "unipotent_order": order,
        "exponents": {str(r): e for r, e in sorted(exponents.items())},
    }
    emit(report, args.out)
    summary(
        [
            "growth exponents along the unipotent iterate: "
            + ", ".join(f"r={r}: n^{e}" for r, e in sorted(exponents.items()))
        ]
    )
    return 0


def cmd_model(args) -> int:
    name, matrix = _load(args.input)
    order, u = unipotent_power(matrix)
    if u.dimension % 2:
        raise PreconditionError(f"dimension {u.dimension} is odd; expected 2g")
    genus = u.dimension // 2
    if args.form == "standard":
        form = TwoForm.standard(genus)
        form_desc = "standard (sum of e_j ^ e_{g+j} in input coordinates)"
    else:
        import random

        from .selfcheck import randgen_two_form

        form = randgen_two_form(random.Random(args.seed), genus)
        form_desc = f"random (seed {args.seed})"
    model = plov_via_model(u, form)
    scan = vanishing_scan(u, form)
    report = base_report("model", name, matrix)
    report["model"] = {
        "unipotent_order": order,
        "form": form_desc,
        "form_coefficients": [
            {"i": i, "j": j, "value": enc_frac(v)} for (i, j), v in form.items()
        ],
        "intersection_poly": enc_poly(model.poly),
        "degree": model.degree,
        "profile_plov": model.profile_plov,
        "matches_profile": model.matches_profile,
        "vanishing_scan": {
            "kf": scan.kf,
            "scanned": [
                {"tuple": list(t), "value": enc_frac(v)} for t, v in scan.scanned
            ],
            "violations": [list(t) for t in scan.violations],
        },
    }
    emit(report, args.out)
    summary(
        [
            f"model growth degree {model.degree} "
            f"(profile value {model.profile_plov}, equality: {model.matches_profile})",
            f"vanishing scan: {len(scan.scanned)} products above threshold, "
            f"{len(scan.violations)} violations",
        ]
    )
    return 0


def cmd_selftest(args) -> int:
    results = run_selftest(max_size=args.max_size, cases=args.cases, seed=args.seed)
    passed = sum(1 for r in results if r.passed)
    report = base_report("selftest", None, None)
    report["selftest"] = {
        "max_size": args.max_size,
        "cases": args.cases,
        "seed": args.seed,
        "suite_size": SELFTEST_SUITE_SIZE,
        "passed": passed,
        "checks": [
            {"name": r.name, "passed": r.passed, "cases": r.cases}
            for r in results
        ],
    }
    emit(report, args.out)
    for r in results:
        summary([f"[{'PASS' if r.passed else 'FAIL'}] {r.name} ({r.cases} cases)"])
    summary([f"passed {passed}/{SELFTEST_SUITE_SIZE} checks"])
    if passed != SELFTEST_SUITE_SIZE:
        raise CrossCheckError("self-test failures")
    return 0


# ---------------------------------------------------------------------------
# argument parsing and dispatch


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default; bad flags are invalid input
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="plovkit",
        description="Exact dynamical invariants of quasi-unipotent rational matrices.",
    )
    parser.add_argument("--version", action="version", version=f"plovkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant pipeline")
    p.add_argument("--input", required=True, help="input JSON file")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--degrees", help="comma-separated exterior degrees (default 1..2g)")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("powersum", help="determinant of the transpose power sum")
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.add_argument("--h", choices=["identity", "random"], default="identity")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=9)
    p.set_defaults(fn=cmd_powersum)

    p = sub.add_parser("growth", help="growth exponents in chosen exterior degrees")
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.add_argument("--degrees", required=True)
    p.set_defaults(fn=cmd_growth)

    p = sub.add_parser("model", help="exterior-algebra intersection model")
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.add_argument("--form", choices=["standard", "random"], default="standard")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_model)

    p = sub.add_parser("selftest", help="run the documented randomized check suite")
    p.add_argument("--out")
    p.add_argument("--max-size", type=int, default=8, dest="max_size")
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PlovkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

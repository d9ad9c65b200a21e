"""Command-line front end.

Every command builds a report with the keys ``problem``, ``value``,
``regime``, ``proven``, ``method`` and ``checks`` and prints it either as
plain text or as JSON. Numbers are always printed as decimal strings.

Exit codes: 0 success, 1 a cross-check failed, 2 invalid input, 64 bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import crosscheck
from .cps import CpsProblem, cps_degree, recursion_check
from .crosscheck import Check, check
from .errors import CapExceeded, InvalidK, LincountError, NotBalanced, PartitionError
from .partitions import BoxShape, format_partition, parse_partition
from .schubert import CohomologyClass, integrate, lr_multiply, pair_with_special_sum, schubert_class, sigma1r_power_table
from .tableaux import count_by_red_shape, count_fillings, iter_fillings
from .tevelev import (
    REGIME_PRIORITY,
    UNPROVEN_NOTE,
    Regime,
    castelnuovo,
    classify,
    classify_ramified,
    pullback_degree,
    r1_closed_forms,
    ramified_integral,
    ramified_large_d,
    tevelev_integral,
    tevelev_large_d,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_USAGE = 64

DEFAULT_MAX_G = 16
DEFAULT_MAX_R = 4

CPS_INDEXING = (
    "Indexing: (g, d, k) means genus g, degree d to P^1, and k of the "
    "n = 2d + 1 - g marked points sharing one image; 1 <= k <= min(d, n). "
    "Tables indexed differently elsewhere must be converted to this convention; "
    "no other convention is accepted."
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


# ---------------------------------------------------------------- parsing


def _nonneg_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return value


def _box(text: str) -> BoxShape:
    m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"box must be K,M: {text!r}")
    return BoxShape(int(m.group(1)), int(m.group(2)))


def _range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"range must be A..B: {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return range(lo, hi + 1)


_TOKEN = re.compile(r"\s*s\[([0-9,\s]*)\]\s*(?:\^\s*(\d+))?\s*")


def parse_expression(text: str, box: BoxShape) -> CohomologyClass:
    """Evaluate a product like ``"s[1]^6 * s[2,1]"`` in the cohomology of ``box``."""
    factors = text.split("*")
    result = CohomologyClass.one(box)
    for factor in factors:
        m = _TOKEN.fullmatch(factor)
        if not m:
            raise PartitionError(f"cannot parse factor {factor.strip()!r}; expected s[a,b,...] or s[a,b,...]^n")
        lam = box.check(parse_partition(m.group(1).replace(" ", "")))
        power = int(m.group(2)) if m.group(2) is not None else 1
        result = result * schubert_class(lam, box) ** power
    return result


def _caps(args) -> tuple[int, int]:
    max_g = args.max_g if args.max_g is not None else int(os.environ.get("LINCOUNT_MAX_G", DEFAULT_MAX_G))
    max_r = args.max_r if args.max_r is not None else int(os.environ.get("LINCOUNT_MAX_R", DEFAULT_MAX_R))
    return max_g, max_r


def _enforce_caps(args, g: int | None = None, r: int | None = None) -> None:
    max_g, max_r = _caps(args)
    if g is not None and g > max_g:
        raise CapExceeded(f"g={g} exceeds the cap {max_g}; raise it with --max-g or LINCOUNT_MAX_G")
    if r is not None and r > max_r:
        raise CapExceeded(f"r={r} exceeds the cap {max_r}; raise it with --max-r or LINCOUNT_MAX_R")


# ---------------------------------------------------------------- reports


def report(problem: dict, value, regime, proven: bool, method: str, checks: Sequence[Check] = (), **extra) -> dict:
    out = {
        "problem": problem,
        "value": value,
        "regime": None if regime is None else str(regime),
        "proven": proven,
        "method": method,
        "checks": [c.as_dict() for c in checks],
    }
    if not proven:
        out["note"] = UNPROVEN_NOTE
    out.update(extra)
    return out


def _failed(rep: dict) -> bool:
    return any(not c["passed"] for c in rep["checks"])


def render_json(rep) -> str:
    return json.dumps(rep, indent=2, ensure_ascii=False) + "\n"


def _plain_value(value) -> str:
    if isinstance(value, list):
        return "\n".join(_plain_value(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={v}" for k, v in value.items())
    return str(value)


def render_plain(rep: dict) -> str:
    lines = []
    lines.append(", ".join(f"{k}={' '.join(map(str, v)) or '-' if isinstance(v, list) else v}" for k, v in rep["problem"].items()))
    value = rep["value"]
    if value is not None:
        text = _plain_value(value)
        if not rep["proven"]:
            text += f"  [{UNPROVEN_NOTE}]"
        lines.append(f"value: {text}")
    tags = [f"method: {rep['method']}", f"proven: {'yes' if rep['proven'] else 'no'}"]
    if rep["regime"] is not None:
        tags.insert(0, f"regime: {rep['regime']}")
    lines.append("  ".join(tags))
    for key in rep:
        if key in ("problem", "value", "regime", "proven", "method", "checks", "note"):
            continue
        lines.append(f"{key}:")
        body = rep[key]
        if isinstance(body, list) and all(isinstance(item, str) for item in body):
            lines.append("\n\n".join(body))  # rendered fillings
        elif isinstance(body, list):
            lines.extend(_plain_value(item) for item in body)
        else:
            lines.append(_plain_value(body))
    for c in rep["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"{mark} {c['name']}: {c['lhs']} vs {c['rhs']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands


def cmd_tevelev(args) -> dict:
    _enforce_caps(args, g=args.g, r=args.r)
    p = classify(args.g, args.r, args.d)
    integral = tevelev_integral(p)
    checks = []
    if Regime.LARGE_D in p.tags:
        checks.append(check("integral = (r+1)^g", integral.value, tevelev_large_d(p)))
    if p.r == 1 and 2 * p.d - 2 - p.g >= 0:
        forms = r1_closed_forms(p.g, p.d)
        checks.append(check("integral = pairing sum", integral.value, forms.sum_form))
        checks.append(check("integral = binomial sum", integral.value, forms.binomial_form))
        checks.append(check("integral = 2^g-form", integral.value, forms.cps_form))
    problem = {"g": p.g, "r": p.r, "d": p.d, "n": p.n, "rho": p.rho}
    return report(problem, str(integral.value), p.regime, integral.proven, "integral", checks)


def cmd_cps(args) -> dict:
    _enforce_caps(args, g=args.g)
    p = CpsProblem(args.g, args.d, args.k)
    value = cps_degree(p)
    checks = []
    if p.k == 1:
        checks.append(check("L'(g,d,1) = L(g,1,d)", value, tevelev_integral(classify(p.g, 1, p.d)).value))
    if p.n >= p.d + p.k + 1:
        checks.append(check("stable range = 2^g", value, 2**p.g))
    if p.g >= 1:
        try:
            sides = recursion_check(p.g, p.d, p.k)
        except InvalidK:
            pass
        else:
            checks.append(check("recursion", sides.lhs, sides.rhs))
    problem = {"g": p.g, "d": p.d, "k": p.k, "n": p.n}
    return report(problem, str(value), Regime.RANK_ONE, True, "integral", checks)


def cmd_ramified(args) -> dict:
    _enforce_caps(args, g=args.g, r=args.r)
    rp = classify_ramified(args.g, args.r, args.d, args.ram)
    integral = ramified_integral(rp)
    checks = []
    if rp.large_d:
        checks.append(check("integral = (r+1)^g * prod deg", integral.value, ramified_large_d(rp)))
    if not rp.ramification:
        try:
            plain = tevelev_integral(classify(rp.g, rp.r, rp.d)).value
        except NotBalanced:
            pass
        else:
            checks.append(check("no ramification = L(g,r,d)", integral.value, plain))
    rho = rp.g - (rp.r + 1) * (rp.g - rp.d + rp.r) - rp.lambda_tot
    tags = set()
    if rp.large_d:
        tags.add(Regime.LARGE_D)
    if rp.n == rp.r + 2:
        tags.add(Regime.MINIMAL_N)
    if rho < 0:
        tags.add(Regime.EMPTY)
    if rp.r == 1:
        tags.add(Regime.RANK_ONE)
    regime = next((t for t in REGIME_PRIORITY if t in tags), Regime.UNPROVEN)
    problem = {
        "g": rp.g,
        "r": rp.r,
        "d": rp.d,
        "ramification": [format_partition(lam) for lam in rp.ramification],
        "lambda_tot": rp.lambda_tot,
        "n": rp.n,
    }
    return report(problem, str(integral.value), regime, integral.proven or rho < 0, "integral", checks)


def cmd_pullback(args) -> dict:
    _enforce_caps(args, r=args.r)
    value = pullback_degree(args.lam, args.r, args.d)
    problem = {"r": args.r, "d": args.d, "lambda": format_partition(args.lam)}
    return report(problem, str(value), None, True, "integral")


def cmd_castelnuovo(args) -> dict:
    if args.r < 1 or args.s < 1:
        raise LincountError("need r >= 1 and s >= 1")
    g = (args.r + 1) * args.s
    d = args.r * args.s + args.r
    _enforce_caps(args, g=g, r=args.r)
    value = castelnuovo(args.r, args.s)
    integral = tevelev_integral(classify(g, args.r, d)).value
    checks = [check("product formula = integral", value, integral)]
    problem = {"r": args.r, "s": args.s, "g": g, "d": d}
    return report(problem, str(value), Regime.MINIMAL_N, True, "closed-form", checks)


def cmd_schubert(args) -> dict:
    box = args.box
    if args.op == "mul":
        lhs = parse_expression(args.lhs, box)
        rhs = parse_expression(args.rhs, box)
        product = lr_multiply(lhs, rhs)
        problem = {"box": f"{box.rows},{box.cols}", "lhs": str(lhs), "rhs": str(rhs)}
        terms = [{"partition": format_partition(p), "coefficient": str(c)} for p, c in product.items()]
        return report(problem, str(product), None, True, "integral", terms=terms)
    c = parse_expression(args.expr, box)
    problem = {"box": f"{box.rows},{box.cols}", "expr": args.expr}
    return report(problem, str(integrate(c)), None, True, "integral")


def cmd_tableaux(args) -> dict:
    _enforce_caps(args, g=args.g, r=args.r)
    g, r, d = args.g, args.r, args.d
    n = count_fillings(g, r, d)
    box = BoxShape(r + 1, d - r)
    integral = pair_with_special_sum(sigma1r_power_table(g, box), box.dimension - r * g)
    checks = [check("fillings = integral", n, integral)]
    if d >= g + r:
        checks.append(check("fillings = (r+1)^g", n, (r + 1) ** g))
    extra = {}
    if args.by_shape:
        shapes = count_by_red_shape(g, r, d)
        checks.append(check("sum of red*blue = fillings", sum(s.red * s.blue for s in shapes.values()), n))
        extra["by_shape"] = [
            {"shape": format_partition(mu), "red": str(s.red), "blue": str(s.blue)} for mu, s in shapes.items()
        ]
    if args.list is not None:
        fillings = []
        for f in iter_fillings(g, r, d):
            if len(fillings) == args.list:
                break
            fillings.append(f.render())
        extra["fillings"] = fillings
    problem = {"g": g, "r": r, "d": d}
    return report(problem, str(n), None, True, "oracle", checks, **extra)


def cmd_crosscheck(args) -> dict:
    max_g, max_r = _caps(args)
    if args.max_g is None:
        max_g = None
    if args.max_r is None:
        max_r = None
    checks = crosscheck.run_suite(args.suite, max_g, max_r)
    passed = sum(c.passed for c in checks)
    problem = {"suite": args.suite, "max_g": "default" if max_g is None else max_g, "max_r": "default" if max_r is None else max_r}
    return report(problem, f"{passed}/{len(checks)}", None, True, "oracle", checks)


# ---------------------------------------------------------------- tables


def _tevelev_cell(g: int, r: int, d: int) -> tuple[str, bool]:
    try:
        p = classify(g, r, d)
    except (NotBalanced, ValueError):
        return "—", True
    if p.regime is Regime.EMPTY:
        return "0", True
    value = tevelev_integral(p)
    return (str(value.value) if value.proven else f"{value.value}*"), value.proven


def _cps_cell(g: int, d: int, k: int) -> tuple[str, bool]:
    try:
        p = CpsProblem(g, d, k)
    except InvalidK:
        return "—", True
    return str(cps_degree(p)), True


def build_table(kind: str, g_range: range, d_range: range, fixed: int) -> tuple[list[str], list[list[str]], bool]:
    if kind == "tevelev":
        header = ["g", "r", "d", "L"]
        cell = lambda g, d: _tevelev_cell(g, fixed, d)  # noqa: E731
    else:
        header = ["g", "d", "k", "L'"]
        cell = lambda g, d: _cps_cell(g, d, fixed)  # noqa: E731
    rows = []
    all_proven = True
    for g in g_range:
        for d in d_range:
            text, proven = cell(g, d)
            all_proven &= proven
            keys = [g, fixed, d] if kind == "tevelev" else [g, d, fixed]
            rows.append([str(x) for x in keys] + [text])
    return header, rows, all_proven


def render_table(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        return "\n".join(",".join(row) for row in [header] + rows) + "\n"
    widths = [max(len(row[i]) for row in [header] + rows) for i in range(len(header))]
    line = lambda row: "| " + " | ".join(c.rjust(w) for c, w in zip(row, widths)) + " |"  # noqa: E731
    sep = "|" + "|".join("-" * (w + 1) + ":" for w in widths) + "|"
    return "\n".join([line(header), sep] + [line(row) for row in rows]) + "\n"


def cmd_table(args) -> tuple[dict, str | None]:
    kind = args.kind
    if kind == "tevelev" and args.k is not None:
        raise UsageError("lincount table tevelev: error: --k applies to cps tables")
    if kind == "cps" and args.r is not None:
        raise UsageError("lincount table cps: error: --r applies to tevelev tables")
    fixed = (args.r if kind == "tevelev" else args.k) or 1
    _enforce_caps(args, g=args.g_range[-1], r=fixed if kind == "tevelev" else None)
    header, rows, all_proven = build_table(kind, args.g_range, args.d_range, fixed)
    problem = {
        "table": kind,
        "g_range": f"{args.g_range[0]}..{args.g_range[-1]}",
        "d_range": f"{args.d_range[0]}..{args.d_range[-1]}",
        ("r" if kind == "tevelev" else "k"): fixed,
    }
    value = [dict(zip(header, row)) for row in rows]
    rep = report(problem, value, None, all_proven, "integral")
    text = None if args.format == "json" else render_table(header, rows, args.format)
    return rep, text


# ---------------------------------------------------------------- entry


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lincount", description="Exact counts of linear series and Schubert calculus on Grassmannians.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("plain", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--max-g", type=_nonneg_int, default=None, help=f"cap on g (default {DEFAULT_MAX_G})")
        p.add_argument("--max-r", type=_nonneg_int, default=None, help=f"cap on r (default {DEFAULT_MAX_R})")
        return p

    p = common(sub.add_parser("tevelev", help="L(g,r,d): maps to P^r through n general points"))
    p.add_argument("--g", type=_nonneg_int, required=True)
    p.add_argument("--r", type=_nonneg_int, required=True)
    p.add_argument("--d", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_tevelev)

    p = common(sub.add_parser("cps", help="L'(g,d,k): k points share an image", description=CPS_INDEXING))
    p.add_argument("--g", type=_nonneg_int, required=True)
    p.add_argument("--d", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_cps)

    p = common(sub.add_parser("ramified", help="counts with prescribed ramification"))
    p.add_argument("--g", type=_nonneg_int, required=True)
    p.add_argument("--r", type=_nonneg_int, required=True)
    p.add_argument("--d", type=_nonneg_int, required=True)
    p.add_argument("--ram", type=str, action="append", default=[], metavar='"a,b,..."')
    p.set_defaults(func=cmd_ramified)

    p = common(sub.add_parser("pullback-degree", help="degree of a pulled-back Schubert cycle"))
    p.add_argument("--r", type=_nonneg_int, required=True)
    p.add_argument("--d", type=_nonneg_int, required=True)
    p.add_argument("--lambda", dest="lam", type=str, required=True, metavar='"a,b,..."')
    p.set_defaults(func=cmd_pullback)

    p = common(sub.add_parser("castelnuovo", help="number of g^r_d when the Brill-Noether number is zero"))
    p.add_argument("--r", type=_nonneg_int, required=True)
    p.add_argument("--s", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_castelnuovo)

    p = sub.add_parser("schubert", help="Schubert calculus on Gr(K, K+M)")
    ops = p.add_subparsers(dest="op", required=True, parser_class=_Parser)
    q = common(ops.add_parser("mul", help="product of two expressions"))
    q.add_argument("--box", type=_box, required=True, metavar="K,M")
    q.add_argument("lhs")
    q.add_argument("rhs")
    q.set_defaults(func=cmd_schubert)
    q = common(ops.add_parser("integrate", help='degree of an expression like "s[1]^6 * s[2,1]"'))
    q.add_argument("--box", type=_box, required=True, metavar="K,M")
    q.add_argument("expr")
    q.set_defaults(func=cmd_schubert)

    p = common(sub.add_parser("tableaux", help="red/blue grid fillings"))
    p.add_argument("--g", type=_nonneg_int, required=True)
    p.add_argument("--r", type=_nonneg_int, required=True)
    p.add_argument("--d", type=_nonneg_int, required=True)
    p.add_argument("--list", type=_nonneg_int, default=None, metavar="N")
    p.add_argument("--by-shape", action="store_true")
    p.set_defaults(func=cmd_tableaux)

    p = common(sub.add_parser("crosscheck", help="compare independent computations"))
    p.add_argument("--suite", choices=[*crosscheck.SUITES, "all"], required=True)
    p.set_defaults(func=cmd_crosscheck)

    p = common(
        sub.add_parser("table", help="tables of L or L' over ranges", description=CPS_INDEXING),
        formats=("markdown", "csv", "json"),
    )
    p.add_argument("kind", choices=["tevelev", "cps"])
    p.add_argument("--g-range", type=_range, required=True, metavar="A..B")
    p.add_argument("--d-range", type=_range, required=True, metavar="A..B")
    p.add_argument("--r", type=_nonneg_int, default=None)
    p.add_argument("--k", type=_nonneg_int, default=None)
    p.set_defaults(func=cmd_table)
    return parser


def _parse_partitions(args) -> None:
    # validate every partition argument before anything is computed
    if hasattr(args, "ram"):
        args.ram = [parse_partition(text) for text in args.ram]
    if hasattr(args, "lam"):
        args.lam = parse_partition(args.lam)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        _parse_partitions(args)
        if args.command == "table":
            rep, text = cmd_table(args)
        else:
            rep, text = args.func(args), None
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except ValueError as exc:
        # LincountError and plain range errors from the counting modules
        print(f"lincount: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    if text is None:
        text = render_json(rep) if args.format == "json" else render_plain(rep)
    out.write(text)
    return EXIT_CHECK_FAILED if _failed(rep) else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

"""Suites that compute the same numbers by independent routes and compare them."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

from .cps import CpsProblem, cps_degree, recursion_check
from .errors import GridTooSmall, InvalidK, NotBalanced
from .partitions import BoxShape, Partition
from .schubert import integrate, intersection_number, sigma1r_power_table, special_sum
from .tableaux import count_fillings, hook_length_count
from .tevelev import (
    boundary_value,
    castelnuovo,
    classify,
    classify_ramified,
    degeneration_sum,
    gr2_pairing,
    pullback_degree,
    r1_closed_forms,
    ramified_integral,
    ramified_large_d,
    tevelev_integral,
    tevelev_large_d,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: int
    rhs: int

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "lhs": str(self.lhs), "rhs": str(self.rhs)}


def check(name: str, lhs: int, rhs: int) -> Check:
    return Check(name, lhs == rhs, lhs, rhs)


def suite_r1(max_g: int = 14) -> list[Check]:
    out = []
    for g in range(1, max_g + 1):
        out.append(check(f"L({g},1,{g + 1}) = 2^{g}", tevelev_integral(classify(g, 1, g + 1)).value, 2**g))
        out.append(check(f"L({g},1,{g}) = 2^g-g-1", tevelev_integral(classify(g, 1, g)).value, 2**g - g - 1))
        out.append(check(f"boundary({g},1) = L({g},1,{g})", boundary_value(g, 1), 2**g - g - 1))
        for d in range(math.ceil((g + 2) / 2), g + 5):
            integral = tevelev_integral(classify(g, 1, d)).value
            forms = r1_closed_forms(g, d)
            out.append(check(f"L({g},1,{d}) integral = pairing sum", integral, forms.sum_form))
            out.append(check(f"L({g},1,{d}) integral = binomial sum", integral, forms.binomial_form))
            out.append(check(f"L({g},1,{d}) integral = 2^g-form", integral, forms.cps_form))
            top = 2 * d - 2 - g
            for b in range(top // 2 + 1):
                a = top - b
                if a <= d - 1:
                    # gr2_pairing raises on a nonzero remainder or disagreeing forms
                    value = gr2_pairing(a, b, g, d)
                    out.append(check(f"pairing({a},{b},{g},{d}) clears", value, value))
    return out


def suite_large_d(max_g: int = 6, max_r: int = 3) -> list[Check]:
    out = []
    for r in range(1, max_r + 1):
        for g in range(max_g + 1):
            for d in range(r * g + r, r * g + r + 3):
                try:
                    p = classify(g, r, d)
                except NotBalanced:
                    continue
                expected = (r + 1) ** g
                out.append(check(f"L({g},{r},{d}) large-d = (r+1)^g", tevelev_large_d(p), expected))
                out.append(check(f"L({g},{r},{d}) integral = (r+1)^g", tevelev_integral(p).value, expected))
                out.append(check(f"L({g},{r},{d}) degeneration = (r+1)^g", degeneration_sum(p), expected))
    for r in range(1, max_r + 2):
        for d in range(2 * r, 13):
            out.append(check(f"deg pullback 1^{r} in Gr({r + 1},{d + 1}) = r+1", pullback_degree((1,) * r, r, d), r + 1))
    return out


def suite_tableaux(max_g: int = 6, max_r: int = 3) -> list[Check]:
    out = [check("fillings(6,2,15) = 3^6", count_fillings(6, 2, 15), 729)] if max_g >= 6 and max_r >= 2 else []
    for g in range(max_g + 1):
        for r in range(1, max_r + 1):
            for d in range(r + 1, g + r + 3):
                try:
                    n = count_fillings(g, r, d)
                except GridTooSmall:
                    continue
                box = BoxShape(r + 1, d - r)
                # balancing plays no role in the combinatorial identity
                total = box.dimension - r * g
                integral = intersection_number(sigma1r_power_table(g, box), special_sum(total, box))
                out.append(check(f"fillings({g},{r},{d}) = integral", n, integral))
                if d >= g + r:
                    out.append(check(f"fillings({g},{r},{d}) = (r+1)^g", n, (r + 1) ** g))
    return out


def _valid_cps(g: int, d: int, k: int) -> bool:
    try:
        CpsProblem(g, d, k)
    except InvalidK:
        return False
    return True


def suite_cps(max_g: int = 10) -> list[Check]:
    out = []
    for g in range(max_g + 1):
        for d in range(1, g + 4):
            for k in range(1, d + 1):
                if not _valid_cps(g, d, k):
                    continue
                if k == 1:
                    out.append(
                        check(
                            f"L'({g},{d},1) = L({g},1,{d})",
                            cps_degree(CpsProblem(g, d, 1)),
                            tevelev_integral(classify(g, 1, d)).value,
                        )
                    )
                subs = ((g - 1, d - 1, max(k - 1, 1)), (g - 1, d, k + 1))
                if g >= 1 and all(_valid_cps(*s) for s in subs):
                    sides = recursion_check(g, d, k)
                    out.append(check(f"L'({g},{d},{k}) recursion", sides.lhs, sides.rhs))
        for d in range(1, g + 8):
            for k in range(1, d + 1):
                if _valid_cps(g, d, k) and 2 * d + 1 - g >= d + k + 1:
                    out.append(check(f"L'({g},{d},{k}) stable = 2^g", cps_degree(CpsProblem(g, d, k)), 2**g))
    return out


def _ramification_lists(r: int, max_size: int, max_m: int):
    parts = [
        Partition(p)
        for size in range(1, max_size + 1)
        for p in BoxShape(r, size).partitions(size)
    ]
    for m in range(max_m + 1):
        yield from itertools.combinations_with_replacement(parts, m)


def suite_ramified(max_g: int = 4, max_r: int = 2) -> list[Check]:
    out = []
    for r in range(1, max_r + 1):
        for g in range(max_g + 1):
            for d in range(1, r * g + r + 6):
                try:
                    p = classify(g, r, d)
                except NotBalanced:
                    continue
                rp = classify_ramified(g, r, d, ())
                out.append(
                    check(f"ramified m=0 ({g},{r},{d}) = L", ramified_integral(rp).value, tevelev_integral(p).value)
                )
    for r in range(1, max_r + 1):
        for g in range(max_g + 1):
            for lams in _ramification_lists(r, 3, 2):
                tot = sum(sum(lam) for lam in lams)
                for d in range(r * g + r + tot, r * g + r + tot + 3):
                    try:
                        rp = classify_ramified(g, r, d, lams)
                    except NotBalanced:
                        continue
                    label = ";".join(",".join(map(str, lam)) for lam in lams)
                    out.append(
                        check(
                            f"ramified ({g},{r},{d}) [{label}] large-d = integral",
                            ramified_large_d(rp),
                            ramified_integral(rp).value,
                        )
                    )
    return out


def suite_castelnuovo(max_r: int = 3, max_s: int = 3) -> list[Check]:
    out = []
    for r in range(1, max_r + 1):
        for s in range(1, max_s + 1):
            g, d = r * s + s, r * s + r
            value = castelnuovo(r, s)
            box = BoxShape(r + 1, d - r)
            out.append(check(f"castelnuovo({r},{s}) = integral", value, integrate(sigma1r_power_table(g, box))))
            out.append(check(f"castelnuovo({r},{s}) = SYT of {r + 1}x{s}", value, hook_length_count((s,) * (r + 1))))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "r1": lambda max_g=None, max_r=None: suite_r1(max_g if max_g is not None else 14),
    "large-d": lambda max_g=None, max_r=None: suite_large_d(
        max_g if max_g is not None else 6, max_r if max_r is not None else 3
    ),
    "tableaux": lambda max_g=None, max_r=None: suite_tableaux(
        max_g if max_g is not None else 6, max_r if max_r is not None else 3
    ),
    "cps": lambda max_g=None, max_r=None: suite_cps(max_g if max_g is not None else 10),
    "ramified": lambda max_g=None, max_r=None: suite_ramified(
        max_g if max_g is not None else 4, max_r if max_r is not None else 2
    ),
    "castelnuovo": lambda max_g=None, max_r=None: suite_castelnuovo(max_r if max_r is not None else 3),
}


def run_suite(name: str, max_g: int | None = None, max_r: int | None = None) -> list[Check]:
    if name == "all":
        return [c for key in SUITES for c in SUITES[key](max_g, max_r)]
    return SUITES[name](max_g, max_r)

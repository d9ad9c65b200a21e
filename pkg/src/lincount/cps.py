"""Counts of maps to P^1 where the first k marked points share one image."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidK
from .partitions import BoxShape
from .schubert import pair_with_special_sum, pieri_row, sigma1r_power_table


@dataclass(frozen=True)
class CpsProblem:
    g: int
    d: int
    k: int

    def __post_init__(self) -> None:
        if self.g < 0 or self.d < 1:
            raise InvalidK(f"need g >= 0 and d >= 1, got g={self.g}, d={self.d}")
        if not 1 <= self.k <= min(self.d, self.n):
            raise InvalidK(f"k={self.k} outside 1..min(d={self.d}, n={self.n})")

    @property
    def n(self) -> int:
        return 2 * self.d + 1 - self.g


def _term(g: int, d: int, k: int) -> int:
    # integral over Gr(2, d+1) of sigma_1^g sigma_{k-1} against the degree
    # 2(d-1) - g - (k-1) special-class sum
    total = 2 * (d - 1) - g - (k - 1)
    if total < 0:
        return 0
    box = BoxShape(2, d - 1)
    return pair_with_special_sum(pieri_row(sigma1r_power_table(g, box), k - 1), total)


def cps_formula(g: int, d: int, k: int) -> int:
    """The two-integral difference with no range check on k.

    Grassmannians Gr(2, m) with m < 2 are empty and contribute zero.
    """
    if d < 1:
        return 0
    value = _term(g, d, k)
    if k > 1 and d >= 2:
        value -= _term(g, d - 1, k - 1)
    return value


def cps_degree(p: CpsProblem) -> int:
    value = cps_formula(p.g, p.d, p.k)
    if value < 0:
        raise ArithmeticError(f"negative count {value} for {p}")
    return value


class RecursionSides(NamedTuple):
    lhs: int
    rhs: int


def recursion_check(g: int, d: int, k: int, extended: bool = False) -> RecursionSides:
    """Both sides of L'(g,d,k) = L'(g-1,d-1,k-1) + L'(g-1,d,k+1) (k-1 -> 1 when k = 1).

    By default every subproblem must be in range. With ``extended=True``
    the right-hand subproblems that fall outside 1 <= k <= min(d, n) are
    evaluated by :func:`cps_formula` instead of raising.
    """
    lhs = cps_degree(CpsProblem(g, d, k))
    rhs = 0
    for sub in ((g - 1, d - 1, max(k - 1, 1)), (g - 1, d, k + 1)):
        try:
            rhs += cps_degree(CpsProblem(*sub))
        except InvalidK:
            if not extended or sub[0] < 0:
                raise
            rhs += cps_formula(*sub)
    return RecursionSides(lhs, rhs)

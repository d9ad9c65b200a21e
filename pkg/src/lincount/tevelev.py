"""Counts of maps from a general pointed curve to P^r through general points.

For a general genus-g curve with n general marked points, L(g, r, d) is
the number of degree-d maps to P^r sending the marked points to n fixed
general points, where n = (dr + d + r - rg) / r. The functions here give
that number by several independent routes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import CodimTooLarge, DegreeMismatch, NotBalanced, PartitionError, PartitionOutsideBox, RegimeViolation
from .partitions import BoxShape, Partition
from .schubert import (
    CohomologyClass,
    lr_multiply,
    pair_with_special_sum,
    schubert_class,
    sigma1r_power_table,
)


class Regime(str, enum.Enum):
    LARGE_D = "LargeD"
    MINIMAL_N = "MinimalN"
    EMPTY = "Empty"
    RANK_ONE = "RankOne"
    UNPROVEN = "Unproven"

    def __str__(self) -> str:
        return self.value


# Highest first. Empty outranks RankOne so that r = 1 problems with
# negative Brill-Noether number report as Empty.
REGIME_PRIORITY = (Regime.LARGE_D, Regime.MINIMAL_N, Regime.EMPTY, Regime.RANK_ONE, Regime.UNPROVEN)

UNPROVEN_NOTE = "formula value; enumerativity open"


class IntegralValue(NamedTuple):
    value: int
    proven: bool


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def brill_noether(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def grassmannian_box(r: int, d: int) -> BoxShape | None:
    """The (r+1) x (d-r) box of Gr(r+1, d+1), or None when d < r."""
    if d < r:
        return None
    return BoxShape(r + 1, d - r)


@dataclass(frozen=True)
class CountProblem:
    g: int
    r: int
    d: int
    n: int
    rho: int
    regime: Regime
    tags: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self) -> None:
        if self.n * self.r != self.d * self.r + self.d + self.r - self.r * self.g:
            raise NotBalanced(f"n={self.n} does not balance (g,r,d)=({self.g},{self.r},{self.d})")
        if self.rho != brill_noether(self.g, self.r, self.d):
            raise ValueError("rho does not match g - (r+1)(g-d+r)")

    @property
    def box(self) -> BoxShape | None:
        return grassmannian_box(self.r, self.d)

    @property
    def special_total(self) -> int:
        """(r+1)(d-r) - rg, the degree of the special-class sum."""
        return (self.r + 1) * (self.d - self.r) - self.r * self.g

    @property
    def proven(self) -> bool:
        return self.regime is not Regime.UNPROVEN


def _regime_tags(g: int, r: int, d: int, n: int, rho: int) -> frozenset:
    tags = set()
    if d >= r * g + r:
        tags.add(Regime.LARGE_D)
    if n == r + 2:
        tags.add(Regime.MINIMAL_N)
    if r == 1:
        tags.add(Regime.RANK_ONE)
    if rho < 0:
        tags.add(Regime.EMPTY)
    if not tags:
        tags.add(Regime.UNPROVEN)
    return frozenset(tags)


def classify(g: int, r: int, d: int) -> CountProblem:
    """Validate (g, r, d) and attach n, the Brill-Noether number and the regime."""
    if g < 0 or r < 1 or d < 1:
        raise ValueError(f"need g >= 0, r >= 1, d >= 1; got ({g}, {r}, {d})")
    n, rem = divmod(d * r + d + r - r * g, r)
    if rem:
        raise NotBalanced(f"r={r} does not divide dr+d+r-rg={d * r + d + r - r * g}")
    rho = brill_noether(g, r, d)
    tags = _regime_tags(g, r, d, n, rho)
    regime = next(t for t in REGIME_PRIORITY if t in tags)
    return CountProblem(g, r, d, n, rho, regime, tags)


def tevelev_large_d(p: CountProblem) -> int:
    """(r+1)^g, valid once d >= rg + r."""
    if p.d < p.r * p.g + p.r:
        raise RegimeViolation(f"d={p.d} < rg+r={p.r * p.g + p.r}")
    return (p.r + 1) ** p.g


def _integral_with_special_sum(c: CohomologyClass, total: int) -> int:
    return pair_with_special_sum(c, total)


def tevelev_integral(p: CountProblem) -> IntegralValue:
    """Intersect sigma_{1^r}^g with the degree-(rho) special-class sum on Gr(r+1, d+1).

    ``proven`` is False in the regime where the integral is not known to be
    the actual count (r > 1, intermediate d).
    """
    total = p.special_total
    if total < 0 or p.box is None:
        return IntegralValue(0, p.proven)
    value = _integral_with_special_sum(sigma1r_power_table(p.g, p.box), total)
    return IntegralValue(value, p.proven)


def boundary_value(g: int, r: int) -> int:
    """The count just below the large-d range, at d = rg: (r+1)^g - (rg+1)."""
    if r * g == 0:
        raise RegimeViolation("boundary value needs d = rg >= 1")
    classify(g, r, r * g)
    return (r + 1) ** g - (r * g + 1)


def gr2_pairing(a: int, b: int, g: int, d: int) -> int:
    """Integral of sigma_{a,b} * sigma_1^g over Gr(2, d+1) in closed form.

    Evaluates (a-b+1)/(g+1) * C(g+1, d-b) and checks it against
    C(g, d-b-1) - C(g, d-b).
    """
    if a + b + g != 2 * (d - 1):
        raise DegreeMismatch(f"a+b+g={a + b + g} but 2(d-1)={2 * (d - 1)}")
    if not a >= b >= 0:
        raise PartitionError(f"need a >= b >= 0, got ({a}, {b})")
    if a > d - 1:
        raise PartitionOutsideBox(f"a={a} exceeds d-1={d - 1}")
    value = exact_div((a - b + 1) * binom(g + 1, d - b), g + 1)
    alt = binom(g, d - b - 1) - binom(g, d - b)
    if value != alt:
        raise ArithmeticError(f"closed forms disagree: {value} != {alt}")
    return value


class RankOneForms(NamedTuple):
    sum_form: int
    binomial_form: int
    cps_form: int


def r1_closed_forms(g: int, d: int) -> RankOneForms:
    """Three closed-form evaluations of L(g, 1, d) for 2d - 2 - g >= 0."""
    top = 2 * d - 2 - g
    if top < 0:
        raise RegimeViolation(f"need d >= (g+2)/2, got g={g}, d={d}")

    # sum over ordered (a0, a1) of sigma_a0 sigma_a1, each expanded by Pieri
    # into sigma_{a,b} and paired with sigma_1^g in closed form
    sum_form = 0
    for a0 in range(top + 1):
        p, q = max(a0, top - a0), min(a0, top - a0)
        for b in range(q + 1):
            a = p + q - b
            if a <= d - 1:
                sum_form += gr2_pairing(a, b, g, d)

    binomial_form = 0
    for i in range(top // 2 + 1):
        binomial_form += exact_div((2 * d - g - 2 * i - 1) ** 2 * binom(g + 1, d - i), g + 1)

    cps_form = (
        2**g
        - 2 * sum(binom(g, i) for i in range(g - d))
        + (g - d - 1) * binom(g, g - d)
        + (d - g - 1) * binom(g, g - d + 1)
    )
    return RankOneForms(sum_form, binomial_form, cps_form)


def pullback_degree(lam: Iterable[int], r: int, d: int) -> int:
    """Degree in P^{(r+1)(d+1)-1} of the closure of the preimage of Sigma_lam.

    Pairs sigma_lam with the special-class sum of degree (r+1)(d-r) - |lam|.
    """
    lam = Partition(lam)
    box = grassmannian_box(r, d)
    if box is None:
        raise RegimeViolation(f"d={d} < r={r}")
    box.check(lam)
    if lam.size > d - r:
        raise CodimTooLarge(f"|lam|={lam.size} > d-r={d - r}")
    return _integral_with_special_sum(schubert_class(lam, box), box.dimension - lam.size)


def degeneration_sum(p: CountProblem) -> int:
    """Sum of beta_lam * deg(pullback of Sigma_lam) over |lam| = rg."""
    if p.regime is not Regime.LARGE_D and Regime.LARGE_D not in p.tags:
        raise RegimeViolation("degeneration sum is only identified with the count for d >= rg + r")
    betas = sigma1r_power_table(p.g, p.box)
    return sum(beta * pullback_degree(lam, p.r, p.d) for lam, beta in betas.items())


def castelnuovo(r: int, s: int) -> int:
    """g! * prod_{i<=r} i! / prod_{j=0..r} (s+j)! with g = (r+1)s."""
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    g = r * s + s
    num = math.factorial(g)
    for i in range(1, r + 1):
        num *= math.factorial(i)
    den = 1
    for j in range(r + 1):
        den *= math.factorial(s + j)
    return exact_div(num, den)


@dataclass(frozen=True)
class RamifiedProblem:
    g: int
    r: int
    d: int
    ramification: tuple
    lambda_tot: int
    n: int

    @property
    def box(self) -> BoxShape | None:
        return grassmannian_box(self.r, self.d)

    @property
    def large_d(self) -> bool:
        return self.d >= self.r * self.g + self.r + self.lambda_tot


def classify_ramified(g: int, r: int, d: int, ramification: Sequence[Iterable[int]] = ()) -> RamifiedProblem:
    if g < 0 or r < 1 or d < 1:
        raise ValueError(f"need g >= 0, r >= 1, d >= 1; got ({g}, {r}, {d})")
    parts = tuple(Partition(lam) for lam in ramification)
    for lam in parts:
        if len(lam) > r:
            raise PartitionError(f"{tuple(lam)} has more than r={r} nonzero parts")
    tot = sum(lam.size for lam in parts)
    n, rem = divmod(d * r + d + r - tot - g * r, r)
    if rem:
        raise NotBalanced(f"r={r} does not divide dr+d+r-lambda_tot-gr={d * r + d + r - tot - g * r}")
    return RamifiedProblem(g, r, d, parts, tot, n)


def ramified_large_d(rp: RamifiedProblem) -> int:
    """(r+1)^g times the product of pullback degrees, for d >= rg + r + lambda_tot."""
    if not rp.large_d:
        raise RegimeViolation(f"d={rp.d} < rg+r+lambda_tot={rp.r * rp.g + rp.r + rp.lambda_tot}")
    value = (rp.r + 1) ** rp.g
    for lam in rp.ramification:
        value *= pullback_degree(lam, rp.r, rp.d)
    return value


def ramified_integral(rp: RamifiedProblem) -> IntegralValue:
    proven = rp.large_d or rp.n == rp.r + 2 or rp.r == 1
    box = rp.box
    total = (rp.r + 1) * (rp.d - rp.r) - rp.r * rp.g - rp.lambda_tot
    if box is None or total < 0:
        return IntegralValue(0, proven)
    c = sigma1r_power_table(rp.g, box)
    for lam in rp.ramification:
        c = lr_multiply(c, schubert_class(lam, box))
    return IntegralValue(_integral_with_special_sum(c, total), proven)

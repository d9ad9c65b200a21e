"""Exact cohomology ring of the Grassmannian Gr(k, k+m).

Classes are sparse integer combinations of Schubert classes indexed by
partitions in a k x m box. Products are truncated to the box as they are
formed, so a class never holds an out-of-box term.
"""

from __future__ import annotations

from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from . import kernels
from .errors import BoxMismatch
from .partitions import BoxShape, Partition, complement_in_box, format_partition, ssyt_count


def _order(p: tuple) -> tuple:
    return (sum(p), p)


def _canon(p: tuple) -> Partition:
    # kernel output is already weakly decreasing with no trailing zeros
    return p if type(p) is Partition else tuple.__new__(Partition, p)


class CohomologyClass:
    """An element of H*(Gr(rows, rows+cols)) with arbitrary-precision coefficients."""

    __slots__ = ("box", "_terms")

    def __init__(self, box: BoxShape, terms: Mapping[Iterable[int], int] | None = None):
        self.box = box
        clean: dict[Partition, int] = {}
        for key, coeff in (terms or {}).items():
            p = box.check(key)
            coeff = int(coeff)
            if coeff:
                clean[p] = clean.get(p, 0) + coeff
        self._terms = {p: c for p, c in clean.items() if c}

    @classmethod
    def _raw(cls, box: BoxShape, terms: dict) -> "CohomologyClass":
        # terms: canonical in-box tuples -> int; zeros dropped here
        self = object.__new__(cls)
        self.box = box
        self._terms = {_canon(p): c for p, c in terms.items() if c}
        return self

    @classmethod
    def zero(cls, box: BoxShape) -> "CohomologyClass":
        return cls._raw(box, {})

    @classmethod
    def one(cls, box: BoxShape) -> "CohomologyClass":
        return cls._raw(box, {(): 1})

    @property
    def terms(self) -> Mapping[Partition, int]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms in a fixed order: by degree, then lexicographically."""
        return sorted(self._terms.items(), key=lambda kv: _order(kv[0]))

    def __getitem__(self, p: Iterable[int]) -> int:
        return self._terms.get(Partition(p), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(p for p, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.box == other.box and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.box, frozenset(self._terms.items())))

    def _same_box(self, other: "CohomologyClass") -> None:
        if self.box != other.box:
            raise BoxMismatch(f"{self.box} vs {other.box}")

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        self._same_box(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, 0) + c
        return CohomologyClass._raw(self.box, out)

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass._raw(self.box, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CohomologyClass):
            return lr_multiply(self, other)
        if isinstance(other, int):
            return CohomologyClass._raw(self.box, {p: c * other for p, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "CohomologyClass":
        if n < 0:
            raise ValueError("negative power")
        result = CohomologyClass.one(self.box)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def homogeneous_part(self, degree: int) -> "CohomologyClass":
        return CohomologyClass._raw(self.box, {p: c for p, c in self._terms.items() if sum(p) == degree})

    def __repr__(self) -> str:
        return f"CohomologyClass({self.box.rows}x{self.box.cols}: {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for p, c in self.items():
            term = f"s[{format_partition(p)}]"
            if c == 1:
                pieces.append(term)
            elif c == -1:
                pieces.append(f"-{term}")
            else:
                pieces.append(f"{c}*{term}")
        return " + ".join(pieces).replace("+ -", "- ")


def schubert_class(p: Iterable[int], box: BoxShape) -> CohomologyClass:
    """The Schubert class sigma_p; zero if ``p`` does not fit in ``box``."""
    p = Partition(p)
    if not box.contains(p):
        return CohomologyClass.zero(box)
    return CohomologyClass._raw(box, {p: 1})


def special(a: int, box: BoxShape) -> CohomologyClass:
    """sigma_a, the single-row special class."""
    return schubert_class((a,) if a else (), box)


def special_col(b: int, box: BoxShape) -> CohomologyClass:
    """sigma_{1^b}, the single-column special class."""
    return schubert_class((1,) * b, box)


def _apply_strips(c: CohomologyClass, size: int, strips) -> CohomologyClass:
    box = c.box
    out: dict[tuple, int] = {}
    for lam, coeff in c.items():
        for nu in strips(lam, size, box.rows, box.cols):
            out[nu] = out.get(nu, 0) + coeff
    return CohomologyClass._raw(box, out)


def pieri_row(c: CohomologyClass, a: int) -> CohomologyClass:
    """Multiply by sigma_a: add horizontal strips of size ``a``."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    return _apply_strips(c, a, kernels.horizontal_strips)


def pieri_col(c: CohomologyClass, b: int) -> CohomologyClass:
    """Multiply by sigma_{1^b}: add vertical strips of size ``b``."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    return _apply_strips(c, b, kernels.vertical_strips)


@lru_cache(maxsize=1 << 16)
def _lr(lam: tuple, mu: tuple, rows: int, cols: int) -> dict:
    # c^nu_{lam,mu} = c^nu_{mu,lam}; enumerate with the smaller content
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    return kernels.lr_coefficients(lam, mu, rows, cols)


def lr_multiply(c1: CohomologyClass, c2: CohomologyClass) -> CohomologyClass:
    """Product via Littlewood-Richardson tableaux, truncated to the box."""
    c1._same_box(c2)
    box = c1.box
    out: dict[tuple, int] = {}
    for lam, x in c1.items():
        for mu, y in c2.items():
            for nu, coeff in _lr(tuple(lam), tuple(mu), box.rows, box.cols).items():
                out[nu] = out.get(nu, 0) + x * y * coeff
    return CohomologyClass._raw(box, out)


def integrate(c: CohomologyClass) -> int:
    """Degree of ``c``: its coefficient on the class of a point."""
    return c[c.box.full]


def intersection_number(c1: CohomologyClass, c2: CohomologyClass) -> int:
    """``integrate(c1 * c2)``, enumerating only LR tableaux that reach the full box."""
    c1._same_box(c2)
    box = c1.box
    full = tuple(box.full)
    dim = box.dimension
    total = 0
    by_degree: dict[int, list] = {}
    for mu, y in c2.items():
        by_degree.setdefault(sum(mu), []).append((mu, y))
    for lam, x in c1.items():
        for mu, y in by_degree.get(dim - sum(lam), ()):
            a, b = (tuple(lam), tuple(mu)) if sum(mu) <= sum(lam) else (tuple(mu), tuple(lam))
            coeff = kernels.lr_coefficient(a, b, full, box.rows, box.cols)
            if coeff:
                total += x * y * coeff
    return total


@lru_cache(maxsize=256)
def sigma1r_power_table(g: int, box: BoxShape) -> CohomologyClass:
    """sigma_{1^r}^g with r = rows - 1; the coefficients are the beta_lambda."""
    r = box.rows - 1
    if r < 1:
        raise ValueError("need at least two rows")
    c = CohomologyClass.one(box)
    for _ in range(g):
        c = pieri_col(c, r)
    return c


@lru_cache(maxsize=256)
def special_sum(total: int, box: BoxShape) -> CohomologyClass:
    """Sum over compositions (a_0..a_{rows-1}) of ``total`` of prod sigma_{a_i}.

    Computed as the degree-``total`` part of (sigma_0 + ... + sigma_cols)^rows.
    A negative total gives zero and total 0 gives the unit.
    """
    if total < 0 or total > box.dimension:
        return CohomologyClass.zero(box)
    cur: dict[tuple, int] = {(): 1}
    for step in range(box.rows):
        later = (box.rows - step - 1) * box.cols
        nxt: dict[tuple, int] = {}
        for lam, coeff in cur.items():
            size = sum(lam)
            for a in range(max(0, total - later - size), min(box.cols, total - size) + 1):
                for nu in kernels.horizontal_strips(lam, a, box.rows, box.cols):
                    nxt[nu] = nxt.get(nu, 0) + coeff
        cur = nxt
    return CohomologyClass._raw(box, {p: c for p, c in cur.items() if sum(p) == total})


def pair_with_special_sum(c: CohomologyClass, total: int) -> int:
    """``intersection_number(c, special_sum(total, c.box))`` without expanding the sum.

    The sum is the degree-``total`` part of h(x_0) ... h(x_r) with one
    complete-symmetric series per row, so its coefficient on sigma_nu is
    s_nu(1, ..., 1) with ``rows`` ones. Only the duals of the terms of ``c``
    are needed.
    """
    box = c.box
    if total < 0 or total > box.dimension:
        return 0
    out = 0
    for lam, x in c.terms.items():
        if lam.size + total == box.dimension:
            out += x * ssyt_count(complement_in_box(lam, box), box.rows)
    return out

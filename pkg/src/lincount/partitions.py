"""Partitions, boxes and the small amount of bookkeeping around them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import PartitionError, PartitionOutsideBox


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and also compares and hashes equal to the
    plain tuple ``(2, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        for i, p in enumerate(parts):
            if p < 0:
                raise PartitionError(f"negative part in {parts}")
            if i and p > parts[i - 1]:
                raise PartitionError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form, e.g. ``"3,1,1"``; ``""`` is empty."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise PartitionError(f"not a partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise PartitionError(f"partition text takes positive parts only: {text!r}")
    return Partition(parts)


def format_partition(p: Iterable[int]) -> str:
    return ",".join(str(x) for x in p)


def conjugate(p: Iterable[int]) -> Partition:
    """Transpose the Young diagram of ``p``."""
    p = tuple(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


@dataclass(frozen=True)
class BoxShape:
    """A ``rows`` x ``cols`` rectangle: the partitions indexing Gr(rows, rows+cols).

    ``cols == 0`` is allowed and stands for the one-point Grassmannian Gr(k, k).
    """

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 0:
            raise ValueError(f"invalid box {self.rows}x{self.cols}")

    @property
    def dimension(self) -> int:
        return self.rows * self.cols

    @property
    def full(self) -> Partition:
        return Partition((self.cols,) * self.rows if self.cols else ())

    def contains(self, p: Iterable[int]) -> bool:
        p = tuple(p)
        return len(p) <= self.rows and (not p or p[0] <= self.cols)

    def check(self, p: Iterable[int]) -> Partition:
        p = Partition(p)
        if not self.contains(p):
            raise PartitionOutsideBox(f"{tuple(p)} does not fit in a {self.rows}x{self.cols} box")
        return p

    def partitions(self, size: int | None = None) -> Iterator[Partition]:
        """All partitions in the box (of the given size), in reverse lexicographic order."""

        def rec(prefix: list[int], bound: int, remaining_rows: int) -> Iterator[list[int]]:
            if remaining_rows == 0:
                yield prefix
                return
            for part in range(bound, -1, -1):
                yield from rec(prefix + [part], part, remaining_rows - 1)

        for parts in rec([], self.cols, self.rows):
            if size is None or sum(parts) == size:
                yield Partition(parts)


def complement_in_box(p: Iterable[int], box: BoxShape) -> Partition:
    """Return ``(cols - p[rows-1], ..., cols - p[0])``, the complement of ``p`` in ``box``."""
    p = box.check(p)
    padded = tuple(p) + (0,) * (box.rows - len(p))
    return Partition(box.cols - x for x in reversed(padded))


def reversal(p: Iterable[int], length: int) -> tuple[int, ...]:
    """Nondecreasing presentation of ``p`` padded to ``length`` entries.

    This is how ramification sequences are written; internally every
    partition stays nonincreasing.
    """
    p = tuple(p)
    if len(p) > length:
        raise PartitionError(f"{p} has more than {length} parts")
    return tuple(reversed(p + (0,) * (length - len(p))))


def _hooks(shape: Partition) -> Iterator[tuple[int, int, int]]:
    conj = conjugate(shape)
    for i, row in enumerate(shape):
        for j in range(row):
            yield i, j, row - j + conj[j] - i - 1


def syt_count(shape: Iterable[int]) -> int:
    """Standard Young tableaux of ``shape`` (hook length formula)."""
    shape = Partition(shape)
    den = 1
    for _, _, hook in _hooks(shape):
        den *= hook
    return math.factorial(shape.size) // den


def ssyt_count(shape: Iterable[int], n: int) -> int:
    """Semistandard tableaux of ``shape`` with entries from n values (hook-content formula)."""
    num = den = 1
    for i, j, hook in _hooks(Partition(shape)):
        num *= n + j - i
        den *= hook
    return num // den

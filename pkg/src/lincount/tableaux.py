"""Red/blue grid fillings, counted without any Schubert calculus.

A filling of an (r+1) x (d-r) grid places rg red entries from 1..g, each
value exactly r times, and blue entries from 0..r everywhere else:

* red cells are top- and left-justified (red above blue in a column, red
  left of blue in a row), so the red cells form a Young diagram;
* red entries strictly increase along rows and weakly increase down columns;
* blue entries weakly increase along rows and strictly increase down columns.

No red cell can sit right of column g, so every column past the g-th is
the forced blue column 0, 1, ..., r and the search runs on at most g columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import kernels
from .errors import GridTooSmall
from .partitions import Partition, conjugate, ssyt_count, syt_count


class Cell(NamedTuple):
    color: str  # "R" or "B"
    value: int

    def __str__(self) -> str:
        return f"{self.color}{self.value}"


@dataclass(frozen=True)
class FillingGrid:
    g: int
    r: int
    d: int

    def __post_init__(self) -> None:
        if self.g < 0 or self.r < 1:
            raise ValueError("need g >= 0 and r >= 1")
        if self.d < self.r + 1:
            raise GridTooSmall(f"d={self.d} leaves no columns (need d >= r+1)")
        if self.r * self.g > self.rows * self.cols:
            raise GridTooSmall(f"{self.r * self.g} red cells do not fit in {self.rows}x{self.cols}")

    @property
    def rows(self) -> int:
        return self.r + 1

    @property
    def cols(self) -> int:
        return self.d - self.r

    @property
    def width(self) -> int:
        """Columns that can hold red entries."""
        return min(self.cols, self.g)


@dataclass(frozen=True)
class TableauFilling:
    cells: tuple  # rows of Cell

    def render(self) -> str:
        return "\n".join(" ".join(str(c) for c in row) for row in self.cells)

    @property
    def red_shape(self) -> Partition:
        return Partition(sum(1 for c in row if c.color == "R") for row in self.cells)


def check_filling(f: TableauFilling, g: int, r: int) -> list[str]:
    """Return the list of rules ``f`` breaks; empty means valid."""
    problems = []
    rows = f.cells
    if len(rows) != r + 1 or len({len(row) for row in rows}) != 1:
        return ["grid must have r+1 rows of equal length"]
    ncols = len(rows[0])
    counts = [0] * (g + 1)
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if cell.color == "R":
                if not 1 <= cell.value <= g:
                    problems.append(f"red value {cell.value} out of range at ({i},{j})")
                    continue
                counts[cell.value] += 1
                if i and rows[i - 1][j].color != "R":
                    problems.append(f"red below blue at ({i},{j})")
                if j and row[j - 1].color != "R":
                    problems.append(f"red right of blue at ({i},{j})")
            elif cell.color == "B":
                if not 0 <= cell.value <= r:
                    problems.append(f"blue value {cell.value} out of range at ({i},{j})")
            else:
                problems.append(f"unknown color at ({i},{j})")
    for v in range(1, g + 1):
        if counts[v] != r:
            problems.append(f"red {v} appears {counts[v]} times, not {r}")
    for i, row in enumerate(rows):
        for j in range(ncols):
            here = row[j]
            if j + 1 < ncols:
                right = row[j + 1]
                if here.color == right.color == "R" and not here.value < right.value:
                    problems.append(f"red not strictly increasing in row {i} at column {j}")
                if here.color == right.color == "B" and not here.value <= right.value:
                    problems.append(f"blue not weakly increasing in row {i} at column {j}")
            if i + 1 < len(rows):
                below = rows[i + 1][j]
                if here.color == below.color == "R" and not here.value <= below.value:
                    problems.append(f"red not weakly increasing down column {j} at row {i}")
                if here.color == below.color == "B" and not here.value < below.value:
                    problems.append(f"blue not strictly increasing down column {j} at row {i}")
    return problems


def count_fillings(g: int, r: int, d: int) -> int:
    grid = FillingGrid(g, r, d)
    return kernels.count_fillings(g, r, grid.width)


def _column_choices(g: int, r: int, prev: tuple | None, counts: list[int]) -> Iterator[tuple]:
    """Legal contents of the next column, red (ascending) before blue (ascending).

    Cells use the kernel encoding: red v is v, blue v is -1 - v.
    """
    rows = r + 1
    col = [0] * rows

    def cell(i):
        if i == rows:
            yield tuple(col)
            return
        above = col[i - 1] if i else None
        left = prev[i] if prev is not None else None
        if (above is None or above > 0) and (left is None or left > 0):
            lo = max(1, above or 1, (left + 1) if left is not None else 1)
            for v in range(lo, g + 1):
                if counts[v - 1] < r:
                    counts[v - 1] += 1
                    col[i] = v
                    yield from cell(i + 1)
                    counts[v - 1] -= 1
        lo = -above if above is not None and above < 0 else 0
        if left is not None and left < 0:
            lo = max(lo, -1 - left)
        for v in range(lo, i + 1):
            col[i] = -1 - v
            yield from cell(i + 1)

    yield from cell(0)


def _decode(columns: list[tuple], r: int, forced: int) -> TableauFilling:
    rows = []
    for i in range(r + 1):
        row = [Cell("R", c[i]) if c[i] > 0 else Cell("B", -1 - c[i]) for c in columns]
        row.extend([Cell("B", i)] * forced)
        rows.append(tuple(row))
    return TableauFilling(tuple(rows))


def iter_fillings(g: int, r: int, d: int) -> Iterator[TableauFilling]:
    """All fillings in a fixed order.

    Columns are chosen left to right, cells top to bottom, with red entries
    before blue and smaller values first; the stream is lexicographic in
    that column-major reading.
    """
    grid = FillingGrid(g, r, d)
    width = grid.width
    counts = [0] * g
    columns: list[tuple] = []

    def search(c):
        if c == width:
            if all(x == r for x in counts):
                yield _decode(columns, r, grid.cols - width)
            return
        if any(counts[v] != r for v in range(min(c, g))):
            return
        for column in _column_choices(g, r, columns[-1] if columns else None, counts):
            columns.append(column)
            yield from search(c + 1)
            columns.pop()

    yield from search(0)


def list_fillings(g: int, r: int, d: int, limit: int) -> list[TableauFilling]:
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    out = []
    if limit == 0:
        FillingGrid(g, r, d)
        return out
    for f in iter_fillings(g, r, d):
        out.append(f)
        if len(out) == limit:
            break
    return out


class ShapeCount(NamedTuple):
    red: int
    blue: int


def _red_counts_by_heights(g: int, r: int, width: int) -> dict[tuple, int]:
    """Red-only fillings grouped by column heights (memoised column DFS)."""
    rows = r + 1
    memo: dict = {}

    def columns(prev, counts):
        col: list[int] = []

        def cell(i):
            yield tuple(col)  # stop here: rest of the column is blue
            if i == rows:
                return
            if prev is not None and len(prev) <= i:
                return
            lo = 1
            if i:
                lo = max(lo, col[i - 1])
            if prev is not None:
                lo = max(lo, prev[i] + 1)
            for v in range(lo, g + 1):
                if counts[v - 1] < r:
                    counts[v - 1] += 1
                    col.append(v)
                    yield from cell(i + 1)
                    col.pop()
                    counts[v - 1] -= 1

        yield from cell(0)

    def search(c, prev, counts):
        if c == width:
            return {(): 1} if all(x == r for x in counts) else {}
        key = (c, prev, tuple(counts))
        if key in memo:
            return memo[key]
        out: dict[tuple, int] = {}
        if all(counts[v] == r for v in range(min(c, g))):
            for column in list(columns(prev, counts)):
                new_counts = list(counts)
                for v in column:
                    new_counts[v - 1] += 1
                for rest, n in search(c + 1, column, new_counts).items():
                    key2 = (len(column),) + rest
                    out[key2] = out.get(key2, 0) + n
        memo[key] = out
        return out

    return search(0, None, [0] * g)


def _blue_completions(heights: tuple, r: int) -> int:
    """SSYT fillings of the cells below ``heights`` with entries 0..r."""
    rows = r + 1
    width = len(heights)
    memo: dict = {}

    def column_options(c, prev):
        h = heights[c]
        col = [0] * rows

        def cell(i):
            if i == rows:
                yield tuple(col)
                return
            lo = col[i - 1] + 1 if i > h else 0
            if prev is not None and prev[i] >= 0:
                lo = max(lo, prev[i])
            for v in range(lo, i + 1):
                col[i] = v
                yield from cell(i + 1)

        for i in range(h):
            col[i] = -1  # red
        yield from cell(h)

    def search(c, prev):
        if c == width:
            return 1
        key = (c, prev)
        if key not in memo:
            memo[key] = sum(search(c + 1, col) for col in column_options(c, prev))
        return memo[key]

    return search(0, None)


def count_by_red_shape(g: int, r: int, d: int) -> dict[Partition, ShapeCount]:
    """Red fillings and blue completions per red shape.

    The number of fillings with red shape mu is red * blue, so the products
    sum to :func:`count_fillings`.
    """
    grid = FillingGrid(g, r, d)
    width = grid.width
    out = {}
    for heights, red in sorted(_red_counts_by_heights(g, r, width).items()):
        padded = heights + (0,) * (width - len(heights))
        shape = conjugate([h for h in heights if h])
        out[shape] = ShapeCount(red, _blue_completions(padded, r))
    return dict(sorted(out.items(), key=lambda kv: (kv[0].size, tuple(kv[0]))))


hook_length_count = syt_count
hook_content_count = ssyt_count

"""Pure-Python inner loops.

``_ckernels.pyx`` implements exactly the same functions; :mod:`lincount.kernels`
picks whichever is available. Partitions are plain tuples here, already
canonical (no trailing zeros) and already inside the box.
"""

from __future__ import annotations


def _pad(lam, rows):
    return list(lam) + [0] * (rows - len(lam))


def _strip(parts):
    n = len(parts)
    while n and parts[n - 1] == 0:
        n -= 1
    return tuple(parts[:n])


def horizontal_strips(lam, a, rows, cols):
    """Partitions ``nu`` in the box with ``nu/lam`` a horizontal strip of size ``a``."""
    if a < 0 or len(lam) > rows:
        return []
    lam = _pad(lam, rows)
    # capacity[j]: the most cells rows j.. can still take
    capacity = [0] * (rows + 1)
    for j in range(rows - 1, -1, -1):
        upper = cols if j == 0 else lam[j - 1]
        capacity[j] = capacity[j + 1] + upper - lam[j]
    if capacity[0] < a:
        return []
    out = []
    nu = lam[:]

    def rec(j, left):
        if left == 0:
            out.append(_strip(nu))
            return
        if j == rows or capacity[j] < left:
            return
        upper = cols if j == 0 else lam[j - 1]
        for add in range(min(upper - lam[j], left), -1, -1):
            nu[j] = lam[j] + add
            rec(j + 1, left - add)
        nu[j] = lam[j]

    rec(0, a)
    return out


def vertical_strips(lam, b, rows, cols):
    """Partitions ``nu`` in the box with ``nu/lam`` a vertical strip of size ``b``."""
    if b < 0 or len(lam) > rows:
        return []
    lam = _pad(lam, rows)
    out = []
    nu = lam[:]

    def rec(j, left):
        if left == 0:
            out.append(_strip(nu))
            return
        if rows - j < left:
            return
        upper = cols if j == 0 else nu[j - 1]
        if lam[j] + 1 <= upper:
            nu[j] = lam[j] + 1
            rec(j + 1, left - 1)
            nu[j] = lam[j]
        rec(j + 1, left)

    rec(0, b)
    return out


def _lr_search(lam, mu, rows, cols, target):
    """Enumerate LR tableaux of shape nu/lam and content mu, row by row.

    ``a[j][i]`` is the number of entries ``i`` in row ``j``. Column strictness
    and the lattice-word condition on the reverse reading word both reduce
    to prefix-sum inequalities against the previous row. If ``target`` is
    given, only ``nu == target`` is counted.
    """
    result = {}
    ell = len(mu)
    if len(lam) > rows or ell > rows:
        return result
    lam = _pad(lam, rows)
    if target is not None:
        if len(target) > rows:
            return result
        target = _pad(target, rows)
        if any(t < l for t, l in zip(target, lam)):
            return result
    cum = [0] * ell
    nu = [0] * rows

    def row(j, prev):
        # prev: counts of each value in row j-1
        if j == rows:
            if cum == list(mu):
                key = _strip(nu)
                result[key] = result.get(key, 0) + 1
            return
        remaining = 0
        for i in range(ell):
            remaining += mu[i] - cum[i]
        if remaining == 0:
            for jj in range(j, rows):
                nu[jj] = lam[jj]
            if target is None or nu[j:] == target[j:]:
                key = _strip(nu)
                result[key] = result.get(key, 0) + 1
            return
        width = target[j] - lam[j] if target is not None else None
        cur = [0] * ell
        top = min(j, ell - 1)
        snapshot = cum[:]

        def place(i, filled, prev_prefix):
            # filled: cells already placed in row j; prev_prefix: entries < i in row j-1
            if i > top:
                if width is not None and filled != width:
                    return
                nu[j] = lam[j] + filled
                for k in range(ell):
                    cum[k] = snapshot[k] + cur[k]
                row(j + 1, cur[:])
                for k in range(ell):
                    cum[k] = snapshot[k]
                return
            hi = mu[i] - snapshot[i]
            if i:
                hi = min(hi, snapshot[i - 1] - snapshot[i])
            if j:
                hi = min(hi, lam[j - 1] + prev_prefix - lam[j] - filled)
            else:
                hi = min(hi, cols - lam[j] - filled)
            if width is not None:
                hi = min(hi, width - filled)
                # later values can add at most their content left in this row
                rest = sum(mu[k] - snapshot[k] for k in range(i + 1, top + 1))
                lo = max(0, width - filled - rest)
            else:
                lo = 0
            for x in range(lo, hi + 1):
                cur[i] = x
                place(i + 1, filled + x, prev_prefix + (prev[i] if j else 0))
            cur[i] = 0

        place(0, 0, 0)

    row(0, [0] * ell)
    return result


def lr_coefficients(lam, mu, rows, cols):
    """``{nu: c^nu_{lam,mu}}`` for every ``nu`` fitting in the rows x cols box."""
    return _lr_search(tuple(lam), tuple(mu), rows, cols, None)


def lr_coefficient(lam, mu, nu, rows, cols):
    """The single coefficient ``c^nu_{lam,mu}``."""
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    return _lr_search(tuple(lam), tuple(mu), rows, cols, tuple(nu)).get(tuple(nu), 0)


def count_fillings(g, r, width):
    """Count red/blue fillings of an (r+1) x width grid.

    Red values 1..g each appear r times, top/left justified, strictly
    increasing along rows and weakly down columns. Blue values 0..r are
    weakly increasing along rows and strictly down columns. Cells are
    encoded as ``v`` for red ``v`` and ``-1 - v`` for blue ``v``. The search
    runs column by column; results are memoised on (column, previous
    column, red multiplicities), which is all the remaining search sees.
    """
    rows = r + 1
    if r * g > rows * width:
        return 0
    memo = {}

    def columns(prev, counts):
        col = [0] * rows
        cnt = list(counts)

        def cell(i):
            if i == rows:
                yield tuple(col), tuple(cnt)
                return
            above = col[i - 1] if i else None
            left = prev[i] if prev is not None else None
            red_ok = (above is None or above > 0) and (left is None or left > 0)
            if red_ok:
                lo = 1
                if above is not None:
                    lo = max(lo, above)
                if left is not None:
                    lo = max(lo, left + 1)
                for v in range(lo, g + 1):
                    if cnt[v - 1] < r:
                        cnt[v - 1] += 1
                        col[i] = v
                        yield from cell(i + 1)
                        cnt[v - 1] -= 1
            lo = 0
            if above is not None and above < 0:
                lo = -above
            if left is not None and left < 0:
                lo = max(lo, -1 - left)
            for v in range(lo, i + 1):
                col[i] = -1 - v
                yield from cell(i + 1)

        yield from cell(0)

    def search(c, prev, counts):
        if c == width:
            return 1 if all(x == r for x in counts) else 0
        key = (c, prev, counts)
        hit = memo.get(key)
        if hit is not None:
            return hit
        # a red value v can only sit in columns 0..v-1
        for v in range(1, min(c, g) + 1):
            if counts[v - 1] != r:
                memo[key] = 0
                return 0
        total = 0
        for column, new_counts in columns(prev, counts):
            total += search(c + 1, column, new_counts)
        memo[key] = total
        return total

    return search(0, None, (0,) * g)

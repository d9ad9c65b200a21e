# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; same functions and results as ``_kernels_py``."""

from libc.stdlib cimport malloc, calloc, free


cdef inline int _imin(int a, int b) noexcept:
    return a if a < b else b


cdef inline int _imax(int a, int b) noexcept:
    return a if a > b else b


cdef tuple _strip(int* parts, int n):
    while n > 0 and parts[n - 1] == 0:
        n -= 1
    return tuple([parts[k] for k in range(n)])


cdef int* _padded(object lam, int rows) except NULL:
    cdef int* out = <int*> calloc(rows + 1, sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef int k = 0
    for x in lam:
        out[k] = x
        k += 1
    return out


# ---------------------------------------------------------------- Pieri strips

cdef int _hs(int j, int left, int rows, int cols, int* lam, int* nu, int* cap, list out) except -1:
    if left == 0:
        out.append(_strip(nu, rows))
        return 0
    if j == rows or cap[j] < left:
        return 0
    cdef int upper = cols if j == 0 else lam[j - 1]
    cdef int add = _imin(upper - lam[j], left)
    while add >= 0:
        nu[j] = lam[j] + add
        _hs(j + 1, left - add, rows, cols, lam, nu, cap, out)
        add -= 1
    nu[j] = lam[j]
    return 0


def horizontal_strips(lam, int a, int rows, int cols):
    if a < 0 or len(lam) > rows:
        return []
    cdef int* p = _padded(lam, rows)
    cdef int* nu = _padded(lam, rows)
    cdef int* cap = <int*> calloc(rows + 1, sizeof(int))
    cdef list out = []
    cdef int j, upper
    try:
        for j in range(rows - 1, -1, -1):
            upper = cols if j == 0 else p[j - 1]
            cap[j] = cap[j + 1] + upper - p[j]
        if cap[0] >= a:
            _hs(0, a, rows, cols, p, nu, cap, out)
    finally:
        free(p)
        free(nu)
        free(cap)
    return out


cdef int _vs(int j, int left, int rows, int cols, int* lam, int* nu, list out) except -1:
    if left == 0:
        out.append(_strip(nu, rows))
        return 0
    if rows - j < left:
        return 0
    cdef int upper = cols if j == 0 else nu[j - 1]
    if lam[j] + 1 <= upper:
        nu[j] = lam[j] + 1
        _vs(j + 1, left - 1, rows, cols, lam, nu, out)
        nu[j] = lam[j]
    _vs(j + 1, left, rows, cols, lam, nu, out)
    return 0


def vertical_strips(lam, int b, int rows, int cols):
    if b < 0 or len(lam) > rows:
        return []
    cdef int* p = _padded(lam, rows)
    cdef int* nu = _padded(lam, rows)
    cdef list out = []
    try:
        _vs(0, b, rows, cols, p, nu, out)
    finally:
        free(p)
        free(nu)
    return out


# ------------------------------------------------------- Littlewood-Richardson

cdef struct LRState:
    int rows
    int cols
    int ell
    int* lam
    int* mu
    int* cum
    int* nu
    int* A
    int* target


cdef int _lr_record(LRState* s, dict result) except -1:
    key = _strip(s.nu, s.rows)
    result[key] = result.get(key, 0) + 1
    return 0


cdef int _lr_row(LRState* s, int j, dict result) except -1:
    cdef int i, jj, remaining = 0, top, width
    if j == s.rows:
        for i in range(s.ell):
            if s.cum[i] != s.mu[i]:
                return 0
        return _lr_record(s, result)
    for i in range(s.ell):
        remaining += s.mu[i] - s.cum[i]
    if remaining == 0:
        for jj in range(j, s.rows):
            s.nu[jj] = s.lam[jj]
            if s.target != NULL and s.target[jj] != s.lam[jj]:
                return 0
        return _lr_record(s, result)
    top = _imin(j, s.ell - 1)
    width = s.target[j] - s.lam[j] if s.target != NULL else -1
    for i in range(s.ell):
        s.A[j * s.ell + i] = 0
    return _lr_place(s, j, 0, top, 0, 0, width, result)


cdef int _lr_place(LRState* s, int j, int i, int top, int filled, int prev_prefix,
                   int width, dict result) except -1:
    cdef int k, hi, lo, rest, pp, x
    cdef int ell = s.ell
    if i > top:
        if width >= 0 and filled != width:
            return 0
        s.nu[j] = s.lam[j] + filled
        for k in range(ell):
            s.cum[k] += s.A[j * ell + k]
        _lr_row(s, j + 1, result)
        for k in range(ell):
            s.cum[k] -= s.A[j * ell + k]
        return 0
    hi = s.mu[i] - s.cum[i]
    if i:
        hi = _imin(hi, s.cum[i - 1] - s.cum[i])
    if j:
        hi = _imin(hi, s.lam[j - 1] + prev_prefix - s.lam[j] - filled)
    else:
        hi = _imin(hi, s.cols - s.lam[j] - filled)
    lo = 0
    if width >= 0:
        hi = _imin(hi, width - filled)
        rest = 0
        for k in range(i + 1, top + 1):
            rest += s.mu[k] - s.cum[k]
        lo = _imax(0, width - filled - rest)
    pp = prev_prefix + (s.A[(j - 1) * ell + i] if j else 0)
    x = lo
    while x <= hi:
        s.A[j * ell + i] = x
        _lr_place(s, j, i + 1, top, filled + x, pp, width, result)
        x += 1
    s.A[j * ell + i] = 0
    return 0


cdef dict _lr_search(tuple lam, tuple mu, int rows, int cols, object target):
    cdef dict result = {}
    cdef int ell = len(mu)
    cdef LRState s
    cdef int k
    if len(lam) > rows or ell > rows:
        return result
    if target is not None and len(target) > rows:
        return result
    s.rows = rows
    s.cols = cols
    s.ell = ell
    s.lam = _padded(lam, rows)
    s.mu = _padded(mu, ell)
    s.cum = <int*> calloc(ell + 1, sizeof(int))
    s.nu = <int*> calloc(rows + 1, sizeof(int))
    s.A = <int*> calloc(rows * ell + 1, sizeof(int))
    s.target = NULL
    try:
        if target is not None:
            s.target = _padded(target, rows)
            for k in range(rows):
                if s.target[k] < s.lam[k]:
                    return result
        _lr_row(&s, 0, result)
    finally:
        free(s.lam)
        free(s.mu)
        free(s.cum)
        free(s.nu)
        free(s.A)
        if s.target != NULL:
            free(s.target)
    return result


def lr_coefficients(lam, mu, int rows, int cols):
    return _lr_search(tuple(lam), tuple(mu), rows, cols, None)


def lr_coefficient(lam, mu, nu, int rows, int cols):
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    nu = tuple(nu)
    return _lr_search(tuple(lam), tuple(mu), rows, cols, nu).get(nu, 0)


# ------------------------------------------------------------ grid fillings

cdef class _FillingCounter:
    cdef int g, r, rows, width
    cdef int* col
    cdef int* cnt
    cdef dict memo

    def __cinit__(self, int g, int r, int width):
        self.g = g
        self.r = r
        self.rows = r + 1
        self.width = width
        self.col = <int*> calloc(self.rows * width + 1, sizeof(int))
        self.cnt = <int*> calloc(g + 1, sizeof(int))
        self.memo = {}
        if self.col == NULL or self.cnt == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.col)
        free(self.cnt)

    cdef object search(self, int c):
        cdef int v, k
        if c == self.width:
            for v in range(self.g):
                if self.cnt[v] != self.r:
                    return 0
            return 1
        if c:
            prev = tuple([self.col[(c - 1) * self.rows + k] for k in range(self.rows)])
        else:
            prev = None
        key = (c, prev, tuple([self.cnt[k] for k in range(self.g)]))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        for v in range(_imin(c, self.g)):
            if self.cnt[v] != self.r:
                self.memo[key] = 0
                return 0
        total = self.cell(c, 0)
        self.memo[key] = total
        return total

    cdef object cell(self, int c, int i):
        cdef int rows = self.rows
        cdef int above, left, lo, v
        if i == rows:
            return self.search(c + 1)
        above = self.col[c * rows + i - 1] if i else 0
        left = self.col[(c - 1) * rows + i] if c else 0
        total = 0
        if (i == 0 or above > 0) and (c == 0 or left > 0):
            lo = 1
            if i:
                lo = _imax(lo, above)
            if c:
                lo = _imax(lo, left + 1)
            for v in range(lo, self.g + 1):
                if self.cnt[v - 1] < self.r:
                    self.cnt[v - 1] += 1
                    self.col[c * rows + i] = v
                    total += self.cell(c, i + 1)
                    self.cnt[v - 1] -= 1
        lo = 0
        if i and above < 0:
            lo = -above
        if c and left < 0:
            lo = _imax(lo, -1 - left)
        for v in range(lo, i + 1):
            self.col[c * rows + i] = -1 - v
            total += self.cell(c, i + 1)
        self.col[c * rows + i] = 0
        return total


def count_fillings(int g, int r, int width):
    if r * g > (r + 1) * width:
        return 0
    return _FillingCounter(g, r, width).search(0)

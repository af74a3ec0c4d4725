"""Exact linear algebra over the integers and the rationals.

Matrices are plain lists of rows.  Integer entries are Python ints
(arbitrary precision); rational entries are ``fractions.Fraction``.
Nothing here ever touches floating point.
"""

from fractions import Fraction
from math import gcd


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    if not a:
        return []
    bt = list(zip(*b)) if b else []
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def bilinear(gram, u, v):
    """u^T gram v."""
    return dot(u, matvec(gram, v))


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    offset = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[offset + i][offset + j] = b[i][j]
        offset += k
    return out


def congruent(gram, basis):
    """basis * gram * basis^T for a matrix whose rows are basis vectors."""
    return matmul(matmul(basis, gram), transpose(basis))


def content(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_integral(a):
    return all(Fraction(x).denominator == 1 for row in a for x in row)


def to_int(a):
    out = []
    for row in a:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError(f"entry {x} is not an integer")
            r.append(x.numerator)
        out.append(r)
    return out


def det(a):
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def inverse(a):
    """Exact inverse over Q; raises ZeroDivisionError when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def rank(a):
    """Rank over Q."""
    if not a:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


class SmithForm:
    """Result of :func:`smith_normal_form`.

    ``left @ a @ right == diagonal`` with ``left`` and ``right`` unimodular;
    ``right_inv`` is the exact inverse of ``right``.
    """

    __slots__ = ("diagonal", "left", "right", "right_inv", "factors", "rank")

    def __init__(self, diagonal, left, right, right_inv):
        self.diagonal = diagonal
        self.left = left
        self.right = right
        self.right_inv = right_inv
        k = min(len(diagonal), len(diagonal[0]) if diagonal else 0)
        self.factors = [diagonal[i][i] for i in range(k)]
        self.rank = sum(1 for d in self.factors if d != 0)


def smith_normal_form(a):
    """Smith normal form with both unimodular transforms.

    Diagonal entries are nonnegative and each divides the next (zeros last).
    """
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(row) for row in a]
    left = identity(m)
    right = identity(n)
    right_inv = identity(n)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]
        right_inv[i], right_inv[j] = right_inv[j], right_inv[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        s[dst] = [x + c * y for x, y in zip(s[dst], s[src])]
        left[dst] = [x + c * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, c):
        # col_dst += c * col_src; the inverse gets row_src -= c * row_dst
        for row in s:
            row[dst] += c * row[src]
        for row in right:
            row[dst] += c * row[src]
        right_inv[src] = [x - c * y for x, y in zip(right_inv[src], right_inv[dst])]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        left[i] = [-x for x in left[i]]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if s[i][j] != 0 and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
            pivot = s[t][t]
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // pivot))
                    dirty = dirty or s[i][t] != 0
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // pivot))
                    dirty = dirty or s[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(s[i][j] % pivot for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and s[t][t] < 0:
            negate_row(t)
    return SmithForm(s, left, right, right_inv)


def invariant_factors(a):
    """Nonzero Smith invariants of an integer matrix."""
    return [d for d in smith_normal_form(a).factors if d != 0]


def hermite_rows(a):
    """Row-style Hermite normal form of the lattice spanned by the rows.

    Returns a basis (zero rows dropped) in echelon form with positive
    pivots and entries above each pivot reduced into [0, pivot).
    """
    rows = [list(r) for r in a if any(r)]
    if not rows:
        return []
    n = len(rows[0])
    basis = []
    col = 0
    while rows and col < n:
        nonzero = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not nonzero:
            col += 1
            continue
        while len(nonzero) > 1:
            nonzero.sort(key=lambda r: abs(r[col]))
            p = nonzero[0]
            reduced = [p]
            for r in nonzero[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                if r[col] != 0:
                    reduced.append(r)
                elif any(r):
                    rest.append(r)
            nonzero = reduced
        pivot = nonzero[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append((col, pivot))
        rows = rest
        col += 1
    # reduce above pivots
    out = [r for _, r in basis]
    for k, (c, r) in enumerate(basis):
        for i in range(k):
            q = out[i][c] // r[c]
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], r)]
    return out


def integer_kernel(a, ncols=None):
    """Basis (as rows, Hermite reduced) of {x in Z^n : a x = 0}."""
    if not a:
        return identity(ncols)
    n = len(a[0])
    snf = smith_normal_form(a)
    cols = [[snf.right[i][j] for i in range(n)] for j in range(snf.rank, n)]
    return hermite_rows(cols)


def saturation(rows):
    """Basis of (Q-span of rows) intersected with Z^n, Hermite reduced."""
    snf = smith_normal_form(rows)
    return hermite_rows(snf.right_inv[:snf.rank])


def lattice_index(rows):
    """Index of the row lattice inside its saturation (product of invariants)."""
    out = 1
    for d in invariant_factors(rows):
        out *= d
    return out


def common_denominator(values):
    den = 1
    for x in values:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    return den


def frac_mod(x, m=1):
    """Reduce a rational into [0, m)."""
    x = Fraction(x)
    m = Fraction(m)
    return x - m * (x // m)


def subgroup_order(elements, factors):
    """Order of the subgroup of (+) Z/d_i generated by integer vectors."""
    k = len(factors)
    if k == 0:
        return 1
    rows = [list(e) for e in elements] + [[d if i == j else 0 for j in range(k)]
                                          for i, d in enumerate(factors)]
    total = 1
    for d in factors:
        total *= d
    quotient = 1
    for d in invariant_factors(rows):
        quotient *= d
    return total // quotient

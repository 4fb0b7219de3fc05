"""Exact linear algebra over Q and Z.

Matrices are plain lists of rows.  Rational work uses ``fractions.Fraction``;
integer work uses Python ints throughout so nothing overflows.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vecmat(v: Sequence, a: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    n = len(a[0]) if a else 0
    out = [0] * n
    for vi, row in zip(v, a):
        if vi:
            for j, x in enumerate(row):
                if x:
                    out[j] += vi * x
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def determinant(a: Sequence[Sequence]) -> int | Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    m = [list(map(Fraction, row)) for row in a]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] * inv
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    if det.denominator == 1:
        return int(det)
    return det


# ---------------------------------------------------------------------------
# Rational elimination


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q.  Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[Fraction]]:
    """Basis of {x : A x = 0} over Q, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Solve A x = b over Q; raises ValueError if inconsistent."""
    n = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return x


def clear_denominators(v: Sequence[Fraction]) -> List[int]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


# ---------------------------------------------------------------------------
# Integer lattices


def _col_op(m: Matrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    """Replace columns (i, j) by (a*ci + b*cj, c*ci + d*cj)."""
    for row in m:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Z-basis of {x in Z^n : A x = 0}, returned as a list of vectors.

    The rational row space is computed first (the integer kernel only depends
    on it), then column operations with unimodular tracking bring the reduced
    matrix to lower-echelon form; the trailing transform columns span the
    kernel.
    """
    red, _ = rref(rows, ncols)
    a = [clear_denominators(r) for r in red]
    v = identity(ncols)
    col = 0
    for i in range(len(a)):
        if col >= ncols:
            break
        for j in range(col + 1, ncols):
            if a[i][j] == 0:
                continue
            x, y = a[i][col], a[i][j]
            g, s, t = _xgcd(x, y)
            # [s t; -y/g x/g] has determinant 1
            _col_op(a, col, j, s, t, -y // g, x // g)
            _col_op(v, col, j, s, t, -y // g, x // g)
        if a[i][col] != 0:
            col += 1
    basis = [[v[r][c] for r in range(ncols)] for c in range(col, ncols)]
    return lll_reduce(basis) if basis else basis


def saturate(vectors: Sequence[Sequence[int]], n: int) -> Matrix:
    """Z-basis of (Q-span of vectors) intersected with Z^n."""
    if not vectors:
        return []
    # the saturation is the kernel of a complement's equations
    eqs = nullspace(vectors, n)
    if not eqs:
        return identity(n)
    return integer_kernel([clear_denominators(e) for e in eqs], n)


def coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    """Integer coordinates of v in a lattice basis (rows); ValueError if absent."""
    x = solve(transpose(basis), v)
    if any(c.denominator != 1 for c in x):
        raise ValueError("vector not in the lattice")
    return [int(c) for c in x]


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)) -> Matrix:
    """LLL reduction of integer row vectors using exact integral arithmetic.

    Follows the all-integer variant (Gram-Schmidt data kept as the integers
    d_i and lambda_ij), so no rationals are ever formed.  Rows must be
    linearly independent.
    """
    b = [list(map(int, r)) for r in basis]
    n = len(b)
    if n <= 1:
        return b
    num, den = delta.numerator, delta.denominator

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    d = [0] * (n + 1)
    d[0] = 1
    lam = [[0] * n for _ in range(n)]

    def red(k, l):
        dl = d[l + 1]
        if 2 * abs(lam[k][l]) > dl:
            q = (2 * lam[k][l] + dl) // (2 * dl)
            bl = b[l]
            b[k] = [x - q * y for x, y in zip(b[k], bl)]
            lam[k][l] -= q * dl
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k, kmax):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lk = lam[k][k - 1]
        bb = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
            lam[i][k - 1] = (bb * t + lk * lam[i][k]) // d[k + 1]
        d[k] = bb

    d[1] = dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("LLL input rows are dependent")
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u == 0:
                        raise ValueError("LLL input rows are dependent")
                    d[k + 1] = u
        while True:
            red(k, k - 1)
            lk = lam[k][k - 1]
            if den * d[k + 1] * d[k - 1] < num * d[k] * d[k] - den * lk * lk:
                swap(k, kmax)
                k = max(1, k - 1)
                continue
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
            break
    return b


def smith_normal_form(a: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """Smith normal form with transforms.

    Returns (U, D, V, Uinv) with U A V = D, D diagonal with d_1 | d_2 | ...,
    and U, V unimodular.  Pivots are chosen by least absolute value.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(map(int, row)) for row in a]
    u = identity(m)
    uinv = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for row in uinv:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        d[dst] = [x + f * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]
        for row in uinv:
            row[src] -= f * row[dst]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_col(dst, src, f):
        for row in d:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for row in uinv:
            row[i] = -row[i]

    t = 0
    while t < min(m, n):
        entries = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    if d[i][t]:
                        done = False
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    if d[t][j]:
                        done = False
            if not done:
                entries = [(abs(d[i][t]), i, t) for i in range(t, m) if d[i][t]]
                entries += [(abs(d[t][j]), t, j) for j in range(t, n) if d[t][j]]
                _, pi, pj = min(entries)
                swap_rows(t, pi)
                swap_cols(t, pj)
                continue
            # pivot must divide the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % d[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if d[t][t] < 0:
            negate_row(t)
        t += 1
    return u, d, v, uinv


def elementary_divisors(a: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal of the Smith form (invariant factors, including 1s)."""
    if not a or not a[0]:
        return []
    _, d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]

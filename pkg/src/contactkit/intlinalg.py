"""Exact integer and rational linear algebra.

Everything here works over arbitrary-precision Python ints (or
fractions.Fraction); no floating point.  Matrices are plain lists of
lists.  Provides Smith normal form with unimodular transforms, integer
linear solving with witness extraction, kernel bases, and a
fraction-free (Bareiss) solver for square rational systems.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


def mat_vec(a, v):
    return [sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a))]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


class SmithNormalForm:
    """Smith normal form D = U @ A @ V with U, V unimodular.

    ``diag`` holds the diagonal entries (nonnegative, each dividing the
    next).  Row/column operations are accumulated so solutions of
    A x = b can be pulled back exactly.
    """

    def __init__(self, a):
        self.rows = len(a)
        self.cols = len(a[0]) if a else 0
        self.d = [list(row) for row in a]
        self.u = identity(self.rows)
        self.v = identity(self.cols)
        self._diagonalize(0)
        self._fix_divisibility()
        self.diag = [self.d[i][i] for i in range(min(self.rows, self.cols))]
        self.rank = sum(1 for x in self.diag if x != 0)

    # -- elementary operations keep U, V unimodular ------------------
    def _swap_rows(self, i, j):
        self.d[i], self.d[j] = self.d[j], self.d[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]

    def _swap_cols(self, i, j):
        for row in self.d:
            row[i], row[j] = row[j], row[i]
        for row in self.v:
            row[i], row[j] = row[j], row[i]

    def _add_row(self, src, dst, k):
        if k:
            self.d[dst] = [x + k * y for x, y in zip(self.d[dst], self.d[src])]
            self.u[dst] = [x + k * y for x, y in zip(self.u[dst], self.u[src])]

    def _add_col(self, src, dst, k):
        if k:
            for row in self.d:
                row[dst] += k * row[src]
            for row in self.v:
                row[dst] += k * row[src]

    def _negate_row(self, i):
        self.d[i] = [-x for x in self.d[i]]
        self.u[i] = [-x for x in self.u[i]]

    def _diagonalize(self, start):
        """Bring d into diagonal form from index ``start`` on."""
        t = start
        while t < min(self.rows, self.cols):
            piv = None
            best = None
            for i in range(t, self.rows):
                for j in range(t, self.cols):
                    x = self.d[i][j]
                    if x != 0 and (best is None or abs(x) < best):
                        best = abs(x)
                        piv = (i, j)
            if piv is None:
                break
            self._swap_rows(t, piv[0])
            self._swap_cols(t, piv[1])
            while True:
                dirty = False
                for i in range(self.rows):
                    if i != t and self.d[i][t]:
                        q = self.d[i][t] // self.d[t][t]
                        self._add_row(t, i, -q)
                        if self.d[i][t]:
                            self._swap_rows(t, i)
                            dirty = True
                if dirty:
                    continue
                for j in range(self.cols):
                    if j != t and self.d[t][j]:
                        q = self.d[t][j] // self.d[t][t]
                        self._add_col(t, j, -q)
                        if self.d[t][j]:
                            self._swap_cols(t, j)
                            dirty = True
                if not dirty:
                    break
            if self.d[t][t] < 0:
                self._negate_row(t)
            t += 1

    def _fix_divisibility(self):
        n = min(self.rows, self.cols)
        while True:
            bad = None
            for i in range(n - 1):
                a = self.d[i][i]
                b = self.d[i + 1][i + 1]
                if a and b % a != 0:
                    bad = i
                    break
            if bad is None:
                return
            # fold column bad+1 into column bad, then re-diagonalize
            self._add_col(bad + 1, bad, 1)
            self._diagonalize(bad)

    # -- derived data -------------------------------------------------
    def check(self, a):
        """Verify D == U A V."""
        return mat_mul(mat_mul(self.u, a), self.v) == self.d

    def invariant_factors(self):
        """Cokernel Z^rows / im(A) as (torsion factors > 1, free rank)."""
        torsion = [x for x in self.diag if x > 1]
        free = self.rows - self.rank
        return torsion, free


def solve_integer(a, b):
    """Solve A x = b over the integers.

    Returns a solution vector or None when no integral solution exists.
    """
    snf = SmithNormalForm(a)
    c = mat_vec(snf.u, b)
    y = [0] * snf.cols
    for i in range(len(c)):
        d = snf.d[i][i] if i < min(snf.rows, snf.cols) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return mat_vec(snf.v, y)


def kernel_basis(a):
    """Integer basis of the kernel lattice {x : A x = 0}."""
    snf = SmithNormalForm(a)
    return [[snf.v[i][j] for i in range(snf.cols)] for j in range(snf.rank, snf.cols)]


def cokernel(a):
    """Invariant factors of Z^rows / column-span(A): (torsion, free_rank)."""
    return SmithNormalForm(a).invariant_factors()


def minimal_multiple_in_image(a, target):
    """Smallest p >= 1 with p*target in the column span of A over Z.

    Returns (p, witness) with A @ witness == p*target, or (None, None)
    when no positive multiple of target lies in the image.
    """
    snf = SmithNormalForm(a)
    c = mat_vec(snf.u, target)
    p = 1
    for i in range(len(c)):
        d = snf.d[i][i] if i < min(snf.rows, snf.cols) else 0
        if d == 0:
            if c[i] != 0:
                return None, None
        elif c[i] % d != 0:
            p = lcm(p, d // gcd(d, c[i]))
    y = [0] * snf.cols
    for i in range(len(c)):
        d = snf.d[i][i] if i < min(snf.rows, snf.cols) else 0
        if d:
            y[i] = p * c[i] // d
    witness = mat_vec(snf.v, y)
    return p, witness


def lattice_row_basis(vectors):
    """Basis of the integer lattice spanned by the given vectors.

    Row-style Hermite reduction: for each column, Euclidean row
    operations concentrate the gcd in one pivot row which is set aside;
    the remaining rows then vanish in that column.
    """
    work = [list(v) for v in vectors if any(v)]
    if not work:
        return []
    n = len(work[0])
    basis = []
    for col in range(n):
        sub = [r for r in work if r[col] != 0]
        if not sub:
            continue
        while len(sub) > 1:
            sub.sort(key=lambda r: abs(r[col]))
            p = sub[0]
            nxt = [p]
            for r in sub[1:]:
                q = r[col] // p[col]
                for i in range(n):
                    r[i] -= q * p[i]
                if r[col] != 0:
                    nxt.append(r)
            sub = nxt
        p = sub[0]
        if p[col] < 0:
            for i in range(n):
                p[i] = -p[i]
        basis.append(p)
        work = [r for r in work if r is not p and any(r)]
    return basis


def bareiss_solve(a, b):
    """Solve the square system A x = b exactly by fraction-free elimination.

    Entries may be ints or Fractions; denominators are cleared first so
    the elimination runs over Z.  Raises ZeroDivisionError on a
    singular matrix.
    """
    n = len(a)
    den = 1
    for row in a:
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    for x in b:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    m = [[int(a[i][j] * den) for j in range(n)] + [int(b[i] * den)] for i in range(n)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n])
        for j in range(i + 1, n):
            s -= m[i][j] * x[j]
        x[i] = s / m[i][i]
    return x

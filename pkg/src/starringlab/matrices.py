"""Exact linear algebra over the Gaussian rationals.

Square matrices with GaussRational entries, plus the exact kernels the rest
of the package relies on: Hermitian/PSD tests via recursive LDL*-style
elimination, kernel bases, orthogonal range projections via normal
equations, characteristic polynomials and rational-spectrum square roots,
and constructive sum-of-*-squares decompositions of PSD matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .scalars import GR_ONE, GR_ZERO, GaussRational, gr


class Matrix:
    """Immutable square matrix over GaussRational."""

    __slots__ = ("rows", "n", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        self.rows = rows
        self.n = n
        self._hash = hash(rows)

    @staticmethod
    def zero(n):
        return Matrix([[GR_ZERO] * n for _ in range(n)])

    @staticmethod
    def identity(n):
        return Matrix(
            [[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_rationals(entries):
        """Build from nested ints/Fractions/(re, im) pairs."""
        rows = []
        for row in entries:
            out = []
            for e in row:
                if isinstance(e, GaussRational):
                    out.append(e)
                elif isinstance(e, tuple):
                    out.append(gr(e[0], e[1]))
                else:
                    out.append(gr(e))
            rows.append(out)
        return Matrix(rows)

    def __add__(self, other):
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        n = self.n
        cols = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            orow = []
            for col in cols:
                acc = row[0] * col[0]
                for k in range(1, n):
                    acc = acc + row[k] * col[k]
                orow.append(acc)
            out.append(orow)
        return Matrix(out)

    def scale(self, num, den=1):
        return Matrix([[a.scale(num, den) for a in r] for r in self.rows])

    def star(self):
        """Conjugate transpose."""
        return Matrix(
            [
                [self.rows[j][i].conj() for j in range(self.n)]
                for i in range(self.n)
            ]
        )

    def is_zero(self):
        return all(a.is_zero() for r in self.rows for a in r)

    def is_hermitian(self):
        for i in range(self.n):
            for j in range(i, self.n):
                if self.rows[i][j] != self.rows[j][i].conj():
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .scalars import format_gauss

        return "Matrix([%s])" % "; ".join(
            " ".join(format_gauss(a) for a in r) for r in self.rows
        )


def _ldl(m):
    """Exact LDL* elimination of a Hermitian matrix.

    Returns (pivots, columns) where pivots is a list of Fractions and
    columns the corresponding unit-lower-triangular columns (as lists of
    GaussRational), so that m = sum_j d_j * l_j * l_j^*.  Returns None if m
    is not PSD: a negative or non-real pivot, or a zero pivot whose
    row/column is not entirely zero at its elimination step.
    """
    n = m.n
    a = [list(r) for r in m.rows]
    pivots = []
    columns = []
    for k in range(n):
        piv = a[k][k]
        if not piv.is_real():
            return None
        pr = piv.re
        if pr < 0:
            return None
        if pr == 0:
            # PSD forces the whole residual row/column to vanish here.
            for j in range(k + 1, n):
                if not a[k][j].is_zero() or not a[j][k].is_zero():
                    return None
            continue
        inv = piv.inverse()
        col = [GR_ZERO] * k + [GR_ONE]
        for i in range(k + 1, n):
            col.append(a[i][k] * inv)
        for i in range(k + 1, n):
            fi = a[i][k] * inv
            for j in range(k + 1, n):
                a[i][j] = a[i][j] - fi * a[k][j]
        pivots.append(pr)
        columns.append(col)
    return pivots, columns


def psd_test(m):
    """Exact positive-semidefiniteness: Hermitian with a clean pivot chain."""
    if not m.is_hermitian():
        return False
    return _ldl(m) is not None


def quadratic_form(m, v):
    """v* m v as a GaussRational, for a vector v of GaussRationals."""
    n = m.n
    acc = GR_ZERO
    for i in range(n):
        row = m.rows[i]
        s = GR_ZERO
        for j in range(n):
            s = s + row[j] * v[j]
        acc = acc + v[i].conj() * s
    return acc


def four_squares(n):
    """Lagrange decomposition of a nonnegative integer into four squares."""
    if n < 0:
        raise ValueError("negative input")
    r = isqrt(n)
    for a in range(r, -1, -1):
        n1 = n - a * a
        r1 = isqrt(n1)
        for b in range(r1, -1, -1):
            n2 = n1 - b * b
            r2 = isqrt(n2)
            for c in range(r2, -1, -1):
                n3 = n2 - c * c
                d = isqrt(n3)
                if d * d == n3:
                    return (a, b, c, d)
    raise AssertionError("unreachable: four-square theorem")


def sos_decomposition(m):
    """Write a PSD matrix as an explicit finite sum of b*b terms.

    Uses the exact LDL* factorization: each pivot d = p/q satisfies
    d = p*q / q^2 and p*q splits into four integer squares, so each rank-one
    block d * l l* becomes at most four b*b terms with b = (s/q) e1 l*.
    Returns the list of b matrices, or None if m is not PSD.
    """
    if not m.is_hermitian():
        return None
    fact = _ldl(m)
    if fact is None:
        return None
    pivots, columns = fact
    n = m.n
    terms = []
    for d, col in zip(pivots, columns):
        p, q = d.numerator, d.denominator
        for s in four_squares(p * q):
            if s == 0:
                continue
            scale = GaussRational(s, 0, q)
            row = [scale * c.conj() for c in col]
            rows = [row] + [[GR_ZERO] * n for _ in range(n - 1)]
            terms.append(Matrix(rows))
    return terms


def _row_reduce(rows):
    """In-place Gauss-Jordan over GaussRational; returns pivot column list."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def kernel_basis(m):
    """Basis of {v : m v = 0} as a list of GaussRational vectors."""
    n = m.n
    rows = [list(r) for r in m.rows]
    pivots = _row_reduce(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [GR_ZERO] * n
        v[free] = GR_ONE
        for r, c in enumerate(pivots):
            v[c] = -rows[r][free]
        basis.append(v)
    return basis


def kernel_contained(m1, m2):
    """ker(m1) subseteq ker(m2), decided exactly via a kernel basis of m1."""
    for v in kernel_basis(m1):
        for row in m2.rows:
            acc = GR_ZERO
            for x, y in zip(row, v):
                acc = acc + x * y
            if not acc.is_zero():
                return False
    return True


def invert(m):
    """Exact inverse; raises ValueError if singular."""
    n = m.n
    rows = [
        list(m.rows[i]) + [GR_ONE if j == i else GR_ZERO for j in range(n)]
        for i in range(n)
    ]
    pivots = _row_reduce(rows)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return Matrix([r[n:] for r in rows])


def _column_space_basis(m):
    """Pivot columns of m: an independent spanning set for its column space."""
    cols = [list(c) for c in zip(*m.rows)]
    rows = [list(r) for r in m.rows]
    pivots = _row_reduce(rows)
    return [cols[c] for c in pivots]


def projection_onto_columns(cols, n):
    """Hermitian idempotent projecting onto span(cols) via normal equations."""
    if not cols:
        return Matrix.zero(n)
    k = len(cols)
    # G = B* B  (k x k, positive definite on the span)
    g = []
    for i in range(k):
        row = []
        for j in range(k):
            acc = GR_ZERO
            for t in range(n):
                acc = acc + cols[i][t].conj() * cols[j][t]
            row.append(acc)
        g.append(row)
    ginv = invert(Matrix(g))
    # p = B Ginv B*
    p = [[GR_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = GR_ZERO
            for s in range(k):
                for t in range(k):
                    acc = acc + cols[s][i] * ginv.rows[s][t] * cols[t][j].conj()
            p[i][j] = acc
    return Matrix(p)


_RANGE_PROJ_CACHE = {}


def range_projection(m):
    """Right support projection: the minimal Hermitian idempotent p with m p = m.

    Computed as the orthogonal projection onto the column space of m*.
    Memoized: support projections are requested repeatedly for the same
    probe elements across laws.
    """
    hit = _RANGE_PROJ_CACHE.get(m)
    if hit is None:
        basis = _column_space_basis(m.star())
        hit = projection_onto_columns(basis, m.n)
        _RANGE_PROJ_CACHE[m] = hit
    return hit


_LEFT_KERNEL_CACHE = {}


def left_kernel_projection(m):
    """Projection onto {v : v* m = 0}, i.e. onto ker(m*).  Memoized."""
    hit = _LEFT_KERNEL_CACHE.get(m)
    if hit is None:
        basis = kernel_basis(m.star())
        hit = projection_onto_columns(basis, m.n)
        _LEFT_KERNEL_CACHE[m] = hit
    return hit


def char_poly(m):
    """Characteristic polynomial det(xI - m) via Faddeev-LeVerrier.

    Returns coefficients [c_0, ..., c_n] (c_n == 1) as GaussRationals.
    """
    n = m.n
    coeffs = [GR_ZERO] * (n + 1)
    coeffs[n] = GR_ONE
    mk = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m * mk
        tr = GR_ZERO
        for i in range(n):
            tr = tr + mk.rows[i][i]
        c = tr.scale(-1, k)
        coeffs[n - k] = c
        if k < n:
            mk = _add_scalar(mk, c)
    return coeffs


def _add_scalar(m, c):
    rows = [list(r) for r in m.rows]
    for i in range(m.n):
        rows[i][i] = rows[i][i] + c
    return Matrix(rows)


def rational_eigenvalues(m):
    """All eigenvalues of m if its characteristic polynomial splits over Q.

    Requires every coefficient to be real rational.  Returns a sorted list of
    Fractions (with multiplicity) or None if the polynomial does not split
    into rational linear factors.
    """
    coeffs = char_poly(m)
    if any(not c.is_real() for c in coeffs):
        return None
    poly = [c.re for c in coeffs]
    roots = []
    for _ in range(m.n):
        root = _find_rational_root(poly)
        if root is None:
            return None
        roots.append(root)
        poly = _deflate(poly, root)
    return sorted(roots)


def _find_rational_root(poly):
    # Clear denominators, then apply the rational root theorem.
    lcm = 1
    for c in poly:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in poly]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return None
    if ints[0] == 0:
        return Fraction(0)
    lead, const = abs(ints[-1]), abs(ints[0])
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _poly_eval(poly, cand) == 0:
                    return cand
    return None


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _poly_eval(poly, x):
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _deflate(poly, root):
    # Synthetic division by (x - root); poly is little-endian.
    out = [Fraction(0)] * (len(poly) - 1)
    carry = poly[-1]
    for i in range(len(poly) - 2, -1, -1):
        out[i] = carry
        carry = poly[i] + root * carry
    assert carry == 0
    return out


def _is_rational_square(f):
    if f < 0:
        return None
    pn, pd = f.numerator, f.denominator
    rn, rd = isqrt(pn), isqrt(pd)
    if rn * rn == pn and rd * rd == pd:
        return Fraction(rn, rd)
    return None


def positive_sqrt(m):
    """The PSD square root of a PSD matrix, when it exists over Q[i].

    Follows the rational spectral path: the characteristic polynomial must
    split over Q and every eigenvalue must have a rational square root.
    Returns None otherwise.
    """
    if not psd_test(m):
        raise ValueError("matrix is not positive semidefinite")
    eigs = rational_eigenvalues(m)
    if eigs is None:
        return None
    distinct = sorted(set(eigs))
    sqrts = {}
    for lam in distinct:
        s = _is_rational_square(lam)
        if s is None:
            return None
        sqrts[lam] = s
    n = m.n
    out = Matrix.zero(n)
    for lam in distinct:
        shifted = _add_scalar(m, GaussRational.from_fractions(-lam))
        eigvecs = kernel_basis(shifted)
        proj = projection_onto_columns(eigvecs, n)
        s = sqrts[lam]
        out = out + proj.scale(s.numerator, s.denominator)
    if out * out != m:
        return None
    return out

"""Exact Gaussian-rational scalars.

A GaussRational is a + b*i with a, b arbitrary-precision rationals, kept in
the canonical form (re_num + im_num*i) / den with den > 0 and
gcd(re_num, im_num, den) == 1.  All arithmetic is exact; there is no float
anywhere in this package.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd


class GaussRational:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=1, _normalized=False):
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            if d < 0:
                a, b, d = -a, -b, -d
            g = gcd(gcd(abs(a), abs(b)), d)
            if g > 1:
                a //= g
                b //= g
                d //= g
        self.a = a
        self.b = b
        self.d = d

    @staticmethod
    def from_fractions(re_part, im_part=0):
        re_part = Fraction(re_part)
        im_part = Fraction(im_part)
        d = re_part.denominator * im_part.denominator // gcd(
            re_part.denominator, im_part.denominator
        )
        return GaussRational(
            re_part.numerator * (d // re_part.denominator),
            im_part.numerator * (d // im_part.denominator),
            d,
        )

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    def __add__(self, other):
        if self.d == other.d:
            return GaussRational(self.a + other.a, self.b + other.b, self.d)
        return GaussRational(
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d,
        )

    def __sub__(self, other):
        if self.d == other.d:
            return GaussRational(self.a - other.a, self.b - other.b, self.d)
        return GaussRational(
            self.a * other.d - other.a * self.d,
            self.b * other.d - other.b * self.d,
            self.d * other.d,
        )

    def __mul__(self, other):
        return GaussRational(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d * other.d,
        )

    def __neg__(self):
        return GaussRational(-self.a, -self.b, self.d, _normalized=True)

    def conj(self):
        return GaussRational(self.a, -self.b, self.d, _normalized=True)

    def inverse(self):
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussRational(self.a * self.d, -self.b * self.d, n)

    def __truediv__(self, other):
        return self * other.inverse()

    def scale(self, num, den=1):
        """Multiply by the rational num/den."""
        return GaussRational(self.a * num, self.b * num, self.d * den)

    def abs2(self):
        """|z|^2 as a Fraction (always a nonnegative rational)."""
        return Fraction(self.a * self.a + self.b * self.b, self.d * self.d)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_real(self):
        return self.b == 0

    def __eq__(self, other):
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return "GaussRational(%r)" % (format_gauss(self),)


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)


def gr(re_part, im_part=0):
    """Convenience constructor accepting ints, Fractions or 'p/q' strings."""
    return GaussRational.from_fractions(Fraction(re_part), Fraction(im_part))


def format_gauss(z):
    """Canonical 're/den+im/den*i' literal, e.g. '1/2-3/2i'."""
    re_part = Fraction(z.a, z.d)
    im_part = Fraction(z.b, z.d)
    s = "%d/%d" % (re_part.numerator, re_part.denominator)
    if im_part >= 0:
        s += "+%d/%di" % (im_part.numerator, im_part.denominator)
    else:
        s += "-%d/%di" % (-im_part.numerator, im_part.denominator)
    return s


_GAUSS_RE = _re.compile(
    r"^\s*(?P<rn>[+-]?\d+)\s*(?:/\s*(?P<rd>\d+))?\s*"
    r"(?:(?P<sign>[+-])\s*(?P<in>\d+)\s*(?:/\s*(?P<id>\d+))?\s*\*?\s*i)?\s*$"
)


def parse_gauss(text):
    """Parse a Gaussian-rational literal; inverse of format_gauss."""
    m = _GAUSS_RE.match(text)
    if m is None:
        raise ValueError("malformed Gaussian rational literal: %r" % text)
    re_part = Fraction(int(m.group("rn")), int(m.group("rd") or 1))
    if m.group("in") is None:
        im_part = Fraction(0)
    else:
        im_part = Fraction(int(m.group("in")), int(m.group("id") or 1))
        if m.group("sign") == "-":
            im_part = -im_part
    return GaussRational.from_fractions(re_part, im_part)

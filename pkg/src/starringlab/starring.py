"""*-ring instances and deterministic probe sets.

A StarRingInstance bundles the ring operations, the involution, and the
exact oracles an instance can legitimately offer (positivity, sums of
*-squares, the little cone, right supports, and solvability of the various
divisibility orders).  Shipped instances:

  MatrixInstance       M_n over the Gaussian rationals, * = conjugate transpose
  FunctionInstance     pointwise M_n over a finite point set
  IntTupleInstance     Z^N componentwise, * = identity
  ProductInstance      direct product of two instances
  FiniteControlInstance  Z mod p with identity involution - a negative
                         control whose sums of squares exhaust the ring

Probe sets are deterministic from (seed, count): curated elements first,
then SplitMix64-driven random elements of bounded height, closed under the
involution and negation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .matrices import (
    Matrix,
    kernel_contained,
    left_kernel_projection,
    positive_sqrt,
    psd_test,
    range_projection,
    sos_decomposition,
)
from .rng import SplitMix64
from .scalars import GR_ZERO, GaussRational, format_gauss, gr, parse_gauss

RANDOM_HEIGHT = 4  # numerator/denominator magnitude bound for random entries


class ElementMismatch(TypeError):
    pass


class StarRingInstance:
    """Common surface of a registered *-ring instance.

    Oracles that an instance cannot offer exactly return None / raise
    NotImplementedError; callers fall back to bounded probe-closure search
    and report Unknown where the budget runs out.
    """

    id = "abstract"
    is_unital = False
    two_invertible = False
    flags = {}

    # -- ring operations (subclasses must provide) --------------------------

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def star(self, a):
        raise NotImplementedError

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def unit(self):
        return None

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def int_scale(self, a, k):
        """k*a for an integer k."""
        if k == 0:
            return self.zero
        acc = a if k > 0 else self.neg(a)
        for _ in range(abs(k) - 1):
            acc = self.add(acc, a if k > 0 else self.neg(a))
        return acc

    def halve(self, a):
        """a/2 when 2 is invertible; None otherwise."""
        return None

    def validate(self, a):
        """Raise ElementMismatch unless a has this instance's element shape."""
        raise NotImplementedError

    # -- probe material ------------------------------------------------------

    def curated_elements(self):
        return []

    def random_element(self, gen):
        raise NotImplementedError

    # -- optional exact oracles ---------------------------------------------

    positivity_oracle = None  # a -> bool, membership in A_+
    support_oracle = None  # a -> projection p with a p = a
    cone_c_oracle = None  # a -> (bool, minimal n or None)
    star_sums_oracle = None  # a -> list of summand witnesses, or None
    star_square_oracle = None  # a -> b with b*b = a, or None
    division_oracle = None  # (kind, a, b) -> bool for kind in DIVISION_KINDS
    sqrt_oracle = None  # a in A_+ -> PSD square root or None
    left_kernel_oracle = None  # m -> largest projection p with p m = 0
    # True when star_square_oracle returning None is a proof of non-membership
    star_square_complete = False

    # -- serialization --------------------------------------------------------

    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, obj):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError


DIVISION_KINDS = ("green", "ball", "f", "bullet")


# ---------------------------------------------------------------------------
# Matrix instance


def _embed_block(block, n):
    """Place a 2x2 rational block in the top-left corner of an n x n matrix."""
    rows = [[GR_ZERO] * n for _ in range(n)]
    for i in range(2):
        for j in range(2):
            num, den = block[i][j]
            rows[i][j] = gr(Fraction(num, den))
    return Matrix(rows)


def _diag(values, n):
    rows = [[GR_ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = gr(values[i % len(values)])
    return Matrix(rows)


class MatrixInstance(StarRingInstance):
    """M_n(Q[i]) with * = conjugate transpose."""

    is_unital = True
    two_invertible = True

    def __init__(self, n):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.n = n
        self.id = "m%d" % n
        self._zero = Matrix.zero(n)
        self._unit = Matrix.identity(n)
        self.flags = {
            "proper": "verified-on-probes",
            "assumption2": "verified-on-probes",
            "assumption3": "verified-on-probes",
        }

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def star(self, a):
        return a.star()

    @property
    def zero(self):
        return self._zero

    @property
    def unit(self):
        return self._unit

    def int_scale(self, a, k):
        return a.scale(k)

    def halve(self, a):
        return a.scale(1, 2)

    def validate(self, a):
        if not isinstance(a, Matrix) or a.n != self.n:
            raise ElementMismatch("expected a %dx%d matrix" % (self.n, self.n))

    def curated_elements(self):
        n = self.n
        if n == 1:
            return [
                _diag([4], 1),
                _diag([2], 1),
                _diag([-3], 1),
                Matrix([[GaussRational(1, 1, 2)]]),
            ]
        out = []

        def block(b):
            out.append(_embed_block(b, n))

        # the symmetric/projection pair behind the orthogonality counterexample
        block([[(0, 1), (1, 1)], [(1, 1), (0, 1)]])
        block([[(1, 1), (0, 1)], [(0, 1), (0, 1)]])
        # nilpotent, non-self-adjoint idempotent, skew rotation
        block([[(0, 1), (1, 1)], [(0, 1), (0, 1)]])
        block([[(1, 1), (1, 1)], [(0, 1), (0, 1)]])
        block([[(0, 1), (1, 1)], [(-1, 1), (0, 1)]])
        # rank-one projection off the diagonal
        block([[(1, 2), (1, 2)], [(1, 2), (1, 2)]])
        # accretive element whose cube has vanishing (1,1) entry
        block([[(1, 1), (1, 1)], [(-1, 3), (1, 1)]])
        # rational and irrational spectra for square-root probes
        out.append(_diag([4, 9, 16], n))
        out.append(_diag([3, -5, 2], n))
        out.append(_diag([2, 1, 1], n))
        out.append(_diag([1, 2, 3], n))
        if n >= 2:
            # complex PSD matrix
            rows = [[GR_ZERO] * n for _ in range(n)]
            rows[0][0] = gr(1)
            rows[1][1] = gr(1)
            rows[0][1] = GaussRational(0, 1, 2)
            rows[1][0] = GaussRational(0, -1, 2)
            out.append(Matrix(rows))
        return out

    def random_element(self, gen):
        n = self.n
        rows = []
        for _ in range(n):
            row = []
            for _ in range(n):
                if gen.chance(1, 4):
                    row.append(GR_ZERO)
                    continue
                a = gen.randint(-RANDOM_HEIGHT, RANDOM_HEIGHT)
                d = gen.randint(1, RANDOM_HEIGHT)
                b = 0 if gen.chance(1, 2) else gen.randint(-RANDOM_HEIGHT, RANDOM_HEIGHT)
                row.append(GaussRational(a, b, d))
            rows.append(row)
        return Matrix(rows)

    # -- oracles -------------------------------------------------------------

    def positivity_oracle(self, a):
        return psd_test(a)

    def support_oracle(self, a):
        return range_projection(a)

    def left_kernel_oracle(self, m):
        return left_kernel_projection(m)

    def cone_c_oracle(self, a):
        h = a + a.star()
        if not psd_test(h):
            return (False, None)
        if not kernel_contained(h, a):
            return (False, None)
        s2 = (a.star() * a).scale(2)
        n = 1
        while not psd_test(h.scale(n) - s2):
            n *= 2
        lo, hi = max(1, n // 2), n
        while lo < hi:
            mid = (lo + hi) // 2
            if psd_test(h.scale(mid) - s2):
                hi = mid
            else:
                lo = mid + 1
        return (True, lo)

    def star_sums_oracle(self, a):
        return sos_decomposition(a)

    def star_square_oracle(self, a):
        if not psd_test(a):
            return None
        return positive_sqrt(a)

    def sqrt_oracle(self, a):
        return positive_sqrt(a)

    def division_oracle(self, kind, a, b):
        if kind == "green":
            # a in Ab  iff  the rows of a lie in the row space of b
            return a * range_projection(b) == a
        if kind == "ball":
            # Douglas: a = xb with x*x <= 1 iff a*a <= b*b
            return psd_test(b.star() * b - a.star() * a)
        if kind == "f":
            # b = a.x with x in F iff b_perp = a_perp y, y a contraction
            ap = self._unit - a
            bp = self._unit - b
            return psd_test(ap * ap.star() - bp * bp.star())
        if kind == "bullet":
            # b = a.x solvable iff b-a lies in the column space of 1-a
            ap = self._unit - a
            col_proj = range_projection(ap.star())
            d = b - a
            return col_proj * d == d
        raise ValueError(kind)

    # -- serialization ---------------------------------------------------------

    def element_to_json(self, a):
        return [format_gauss(x) for row in a.rows for x in row]

    def element_from_json(self, obj):
        n = self.n
        if len(obj) != n * n:
            raise ValueError("matrix literal must have %d entries" % (n * n))
        vals = [parse_gauss(s) for s in obj]
        return Matrix([vals[i * n : (i + 1) * n] for i in range(n)])

    def to_json(self):
        return {"type": "matrix", "params": {"n": self.n}, "curated": []}


# ---------------------------------------------------------------------------
# Function instance (pointwise matrices over a finite point set)


class FunctionInstance(StarRingInstance):
    """Finite-X analogue of C(X, M_n): elements are tuples of matrices."""

    is_unital = True
    two_invertible = True

    def __init__(self, points, n):
        points = tuple(points)
        if not points:
            raise ValueError("point set must be nonempty")
        self.points = points
        self.n = n
        self.base = MatrixInstance(n)
        self.id = "func%dx%d" % (len(points), n)
        self._zero = (self.base.zero,) * len(points)
        self._unit = (self.base.unit,) * len(points)
        self.flags = dict(self.base.flags)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        return tuple(x * y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def star(self, a):
        return tuple(x.star() for x in a)

    @property
    def zero(self):
        return self._zero

    @property
    def unit(self):
        return self._unit

    def int_scale(self, a, k):
        return tuple(x.scale(k) for x in a)

    def halve(self, a):
        return tuple(x.scale(1, 2) for x in a)

    def validate(self, a):
        if (
            not isinstance(a, tuple)
            or len(a) != len(self.points)
            or not all(isinstance(x, Matrix) and x.n == self.n for x in a)
        ):
            raise ElementMismatch(
                "expected a tuple of %d matrices of size %d" % (len(self.points), self.n)
            )

    def curated_elements(self):
        consts = [(m,) * len(self.points) for m in self.base.curated_elements()]
        if len(self.points) >= 2:
            cur = self.base.curated_elements()
            varying = tuple(cur[i % len(cur)] for i in range(len(self.points)))
            consts.append(varying)
        return consts

    def random_element(self, gen):
        return tuple(self.base.random_element(gen) for _ in self.points)

    def positivity_oracle(self, a):
        return all(psd_test(x) for x in a)

    def support_oracle(self, a):
        return tuple(range_projection(x) for x in a)

    def left_kernel_oracle(self, m):
        return tuple(left_kernel_projection(x) for x in m)

    def cone_c_oracle(self, a):
        best = 1
        for x in a:
            ok, n = self.base.cone_c_oracle(x)
            if not ok:
                return (False, None)
            best = max(best, n)
        return (True, best)

    def star_sums_oracle(self, a):
        # Lift pointwise witnesses into function elements, padding with zero.
        pieces = []
        for x in a:
            w = sos_decomposition(x)
            if w is None:
                return None
            pieces.append(w)
        width = max((len(p) for p in pieces), default=0)
        out = []
        for k in range(width):
            out.append(
                tuple(
                    p[k] if k < len(p) else self.base.zero
                    for p in pieces
                )
            )
        return out

    def star_square_oracle(self, a):
        roots = []
        for x in a:
            if not psd_test(x):
                return None
            r = positive_sqrt(x)
            if r is None:
                return None
            roots.append(r)
        return tuple(roots)

    def sqrt_oracle(self, a):
        return self.star_square_oracle(a)

    def division_oracle(self, kind, a, b):
        return all(
            self.base.division_oracle(kind, x, y) for x, y in zip(a, b)
        )

    def element_to_json(self, a):
        return [self.base.element_to_json(x) for x in a]

    def element_from_json(self, obj):
        return tuple(self.base.element_from_json(x) for x in obj)

    def to_json(self):
        return {
            "type": "function",
            "params": {"points": list(self.points), "n": self.n},
            "curated": [],
        }


# ---------------------------------------------------------------------------
# Integer tuple instance (truncated Z^N)


class IntTupleInstance(StarRingInstance):
    """Z^N componentwise with the identity involution."""

    is_unital = True
    two_invertible = False
    star_square_complete = True  # b*b = b^2 componentwise has no non-square solutions

    def __init__(self, length):
        if length < 1:
            raise ValueError("length must be >= 1")
        self.length = length
        self.id = "int%d" % length
        self._zero = (0,) * length
        self._unit = (1,) * length
        self.flags = {
            "proper": "verified-on-probes",
            "assumption2": "verified-on-probes",
            "assumption3": "verified-on-probes",
        }

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        return tuple(x * y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def star(self, a):
        return a

    @property
    def zero(self):
        return self._zero

    @property
    def unit(self):
        return self._unit

    def int_scale(self, a, k):
        return tuple(k * x for x in a)

    def halve(self, a):
        if any(x % 2 for x in a):
            return None
        return tuple(x // 2 for x in a)

    def validate(self, a):
        if (
            not isinstance(a, tuple)
            or len(a) != self.length
            or not all(isinstance(x, int) for x in a)
        ):
            raise ElementMismatch("expected a tuple of %d ints" % self.length)

    def curated_elements(self):
        n = self.length
        out = [
            tuple((k + 1) ** 2 for k in range(n)),  # (1, 4, 9, ...)
            tuple(k + 1 for k in range(n)),
            tuple(1 if k == 0 else 0 for k in range(n)),
            tuple(1 if k % 2 == 0 else -1 for k in range(n)),
            (2,) * n,
        ]
        return out

    def random_element(self, gen):
        return tuple(
            gen.randint(-RANDOM_HEIGHT, RANDOM_HEIGHT) for _ in range(self.length)
        )

    def positivity_oracle(self, a):
        return all(x >= 0 for x in a)

    def support_oracle(self, a):
        return tuple(1 if x != 0 else 0 for x in a)

    def left_kernel_oracle(self, m):
        return tuple(1 if x == 0 else 0 for x in m)

    def cone_c_oracle(self, a):
        if any(x < 0 for x in a):
            return (False, None)
        return (True, max(max(a), 1))

    def star_sums_oracle(self, a):
        if any(x < 0 for x in a):
            return None
        # componentwise Lagrange: a = sum of at most four componentwise squares
        from .matrices import four_squares

        per = [four_squares(x) for x in a]
        return [tuple(p[k] for p in per) for k in range(4)]

    def star_square_oracle(self, a):
        roots = []
        for x in a:
            if x < 0:
                return None
            r = isqrt(x)
            if r * r != x:
                return None
            roots.append(r)
        return tuple(roots)

    def sqrt_oracle(self, a):
        return self.star_square_oracle(a)

    def division_oracle(self, kind, a, b):
        if kind == "green":
            return all(
                (y == 0 and x == 0) or (y != 0 and x % y == 0)
                for x, y in zip(a, b)
            )
        if kind == "ball":
            return all(x == 0 or x == y or x == -y for x, y in zip(a, b))
        if kind == "f":
            return all(
                any((1 - x) * t == y - x for t in (0, 1, 2))
                for x, y in zip(a, b)
            )
        if kind == "bullet":
            return all(
                (x == 1 and y == 1) or (x != 1 and (y - x) % (1 - x) == 0)
                for x, y in zip(a, b)
            )
        raise ValueError(kind)

    def element_to_json(self, a):
        return list(a)

    def element_from_json(self, obj):
        return tuple(int(x) for x in obj)

    def to_json(self):
        return {"type": "inttuple", "params": {"length": self.length}, "curated": []}


# ---------------------------------------------------------------------------
# Direct products


class ProductInstance(StarRingInstance):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.id = "prod(%s,%s)" % (left.id, right.id)
        self.is_unital = left.is_unital and right.is_unital
        self.two_invertible = left.two_invertible and right.two_invertible
        self.flags = {
            k: _meet_flag(left.flags.get(k, "unknown"), right.flags.get(k, "unknown"))
            for k in ("proper", "assumption2", "assumption3")
        }
        # an oracle is only available when both factors offer it
        for name in (
            "positivity_oracle",
            "support_oracle",
            "cone_c_oracle",
            "star_sums_oracle",
            "star_square_oracle",
            "division_oracle",
            "sqrt_oracle",
            "left_kernel_oracle",
        ):
            if getattr(left, name) is None or getattr(right, name) is None:
                setattr(self, name, None)

    def add(self, a, b):
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def sub(self, a, b):
        return (self.left.sub(a[0], b[0]), self.right.sub(a[1], b[1]))

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def neg(self, a):
        return (self.left.neg(a[0]), self.right.neg(a[1]))

    def star(self, a):
        return (self.left.star(a[0]), self.right.star(a[1]))

    @property
    def zero(self):
        return (self.left.zero, self.right.zero)

    @property
    def unit(self):
        if not self.is_unital:
            return None
        return (self.left.unit, self.right.unit)

    def int_scale(self, a, k):
        return (self.left.int_scale(a[0], k), self.right.int_scale(a[1], k))

    def halve(self, a):
        if not self.two_invertible:
            return None
        return (self.left.halve(a[0]), self.right.halve(a[1]))

    def validate(self, a):
        if not isinstance(a, tuple) or len(a) != 2:
            raise ElementMismatch("expected a pair")
        self.left.validate(a[0])
        self.right.validate(a[1])

    def curated_elements(self):
        ls = [self.left.zero] + self.left.curated_elements()
        rs = [self.right.zero] + self.right.curated_elements()
        out = []
        for i in range(max(len(ls), len(rs))):
            out.append((ls[i % len(ls)], rs[i % len(rs)]))
        return out

    def random_element(self, gen):
        return (self.left.random_element(gen), self.right.random_element(gen))

    def positivity_oracle(self, a):
        return self.left.positivity_oracle(a[0]) and self.right.positivity_oracle(a[1])

    def support_oracle(self, a):
        return (self.left.support_oracle(a[0]), self.right.support_oracle(a[1]))

    def cone_c_oracle(self, a):
        okl, nl = self.left.cone_c_oracle(a[0])
        okr, nr = self.right.cone_c_oracle(a[1])
        if not (okl and okr):
            return (False, None)
        return (True, max(nl, nr))

    def star_sums_oracle(self, a):
        wl = self.left.star_sums_oracle(a[0])
        wr = self.right.star_sums_oracle(a[1])
        if wl is None or wr is None:
            return None
        width = max(len(wl), len(wr))
        return [
            (
                wl[k] if k < len(wl) else self.left.zero,
                wr[k] if k < len(wr) else self.right.zero,
            )
            for k in range(width)
        ]

    def star_square_oracle(self, a):
        rl = self.left.star_square_oracle(a[0])
        rr = self.right.star_square_oracle(a[1])
        if rl is None or rr is None:
            return None
        return (rl, rr)

    def sqrt_oracle(self, a):
        rl = self.left.sqrt_oracle(a[0])
        rr = self.right.sqrt_oracle(a[1])
        if rl is None or rr is None:
            return None
        return (rl, rr)

    def division_oracle(self, kind, a, b):
        return self.left.division_oracle(kind, a[0], b[0]) and self.right.division_oracle(
            kind, a[1], b[1]
        )

    def left_kernel_oracle(self, m):
        return (
            self.left.left_kernel_oracle(m[0]),
            self.right.left_kernel_oracle(m[1]),
        )

    def element_to_json(self, a):
        return [self.left.element_to_json(a[0]), self.right.element_to_json(a[1])]

    def element_from_json(self, obj):
        return (
            self.left.element_from_json(obj[0]),
            self.right.element_from_json(obj[1]),
        )

    def to_json(self):
        return {
            "type": "product",
            "params": {"left": self.left.to_json(), "right": self.right.to_json()},
            "curated": [],
        }


def _meet_flag(a, b):
    if a == "refuted" or b == "refuted":
        return "refuted"
    if a == "unknown" or b == "unknown":
        return "unknown"
    return "verified-on-probes"


# ---------------------------------------------------------------------------
# Finite negative control


class FiniteControlInstance(StarRingInstance):
    """Z mod p with the identity involution.

    Sums of squares exhaust the ring, so the salience assumption on A_Sigma
    fails; the instance exists to demonstrate which theorems break.
    """

    is_unital = True
    star_square_complete = True  # oracle is exhaustive over the finite ring

    def __init__(self, modulus=5):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.modulus = modulus
        self.id = "z%d-control" % modulus
        self.two_invertible = modulus % 2 == 1
        squares = {(x * x) % modulus for x in range(modulus)}
        sums = {0}
        while True:
            nxt = sums | {(s + q) % modulus for s in sums for q in squares}
            if nxt == sums:
                break
            sums = nxt
        self._star_sums = sums
        self._squares = squares
        positives = {
            a
            for a in range(modulus)
            if any((n * a) % modulus in sums for n in range(1, modulus + 1))
        }
        self._positives = positives
        salient = all((a == 0) for a in sums if (modulus - a) % modulus in sums)
        self.flags = {
            "proper": "verified-on-probes",
            "assumption2": "verified-on-probes" if salient else "refuted",
            "assumption3": "verified-on-probes",
        }

    def add(self, a, b):
        return (a + b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def star(self, a):
        return a

    @property
    def zero(self):
        return 0

    @property
    def unit(self):
        return 1

    def int_scale(self, a, k):
        return (a * k) % self.modulus

    def halve(self, a):
        if not self.two_invertible:
            return None
        return (a * pow(2, -1, self.modulus)) % self.modulus

    def validate(self, a):
        if not isinstance(a, int) or not 0 <= a < self.modulus:
            raise ElementMismatch("expected an int mod %d" % self.modulus)

    def curated_elements(self):
        return list(range(self.modulus))

    def random_element(self, gen):
        return gen.randint(0, self.modulus - 1)

    def positivity_oracle(self, a):
        return a in self._positives

    def star_sums_oracle(self, a):
        if a not in self._star_sums:
            return None
        # reconstruct a witness greedily
        out = []
        rest = a
        while rest:
            for x in range(1, self.modulus):
                q = (x * x) % self.modulus
                if q and (rest - q) % self.modulus in self._star_sums:
                    out.append(x)
                    rest = (rest - q) % self.modulus
                    break
            else:
                return None
            if len(out) > self.modulus * self.modulus:
                return None
        return out

    def star_square_oracle(self, a):
        for x in range(self.modulus):
            if (x * x) % self.modulus == a:
                return x
        return None

    def support_oracle(self, a):
        # in a field every nonzero element has full support; with zero
        # divisors fall back to an exhaustive hunt for the largest idempotent
        if a == 0:
            return 0
        m = self.modulus
        # smallest idempotent fixing a: the product of all of them
        best = 1
        for p in range(m):
            if (p * p) % m == p and (a * p) % m == a:
                best = (best * p) % m
        return best

    def left_kernel_oracle(self, a):
        m = self.modulus
        # largest idempotent annihilating a: the join of all of them
        best = 0
        for p in range(m):
            if (p * p) % m == p and (p * a) % m == 0:
                best = (best + p - best * p) % m
        return best

    def cone_c_oracle(self, a):
        for n in range(1, self.modulus + 1):
            diff = (n * a - a * a) % self.modulus
            h = (2 * diff) % self.modulus
            if h in self._positives:
                return (True, n)
        return (False, None)

    def division_oracle(self, kind, a, b):
        m = self.modulus
        if kind == "green":
            return any((x * b) % m == a for x in range(m))
        if kind == "ball":
            ball = [x for x in range(m) if (1 - x * x) % m in self._positives]
            return any((x * b) % m == a for x in ball)
        if kind == "f":
            f = [
                x
                for x in range(m)
                if (2 * (2 * x - x * x)) % m in self._positives
            ]
            return any((a + x - a * x) % m == b for x in f)
        if kind == "bullet":
            return any((a + x - a * x) % m == b for x in range(m))
        raise ValueError(kind)

    def element_to_json(self, a):
        return a

    def element_from_json(self, obj):
        return int(obj) % self.modulus

    def to_json(self):
        return {
            "type": "finite-control",
            "params": {"modulus": self.modulus},
            "curated": [],
        }


# ---------------------------------------------------------------------------
# Probe sets


@dataclass(frozen=True)
class ProbeSet:
    instance_id: str
    seed: int
    count: int
    elements: tuple
    curated: tuple  # indices of hand-picked elements
    _closure_cache: list = field(default_factory=list, repr=False, compare=False)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def closure(self, inst):
        """Probes plus all pairwise sums and products, one level deep.

        This is the finite relativization of existential quantifiers over
        the ring; computed once and cached (write-once).
        """
        if self._closure_cache:
            return self._closure_cache[0]
        seen = dict.fromkeys(self.elements)
        elems = self.elements
        for i, a in enumerate(elems):
            for b in elems[i:]:
                s = inst.add(a, b)
                if s not in seen:
                    seen[s] = None
            for b in elems:
                p = inst.mul(a, b)
                if p not in seen:
                    seen[p] = None
        out = tuple(seen)
        self._closure_cache.append(out)
        return out


def generate_probes(inst, seed, count):
    """Deterministic probe set: curated first, then bounded-height randoms,
    closed under star and negation."""
    if count < 1:
        raise ValueError("count must be >= 1")
    gen = SplitMix64(seed)
    base = [inst.zero]
    if inst.is_unital:
        base.append(inst.unit)
    seen = set(base)
    for c in inst.curated_elements():
        if c not in seen:
            base.append(c)
            seen.add(c)
    curated_len = len(base)
    guard = 0
    while len(base) < count:
        e = inst.random_element(gen)
        guard += 1
        if e not in seen:
            base.append(e)
            seen.add(e)
        if guard > 100 * count:
            break  # tiny rings cannot produce `count` distinct elements
    base = base[:count]
    # close under star and negation
    out = list(base)
    seen = set(base)
    i = 0
    while i < len(out):
        a = out[i]
        for variant in (inst.star(a), inst.neg(a)):
            if variant not in seen:
                out.append(variant)
                seen.add(variant)
        i += 1
    curated = tuple(range(min(curated_len, len(out))))
    return ProbeSet(
        instance_id=inst.id,
        seed=seed,
        count=count,
        elements=tuple(out),
        curated=curated,
    )


# ---------------------------------------------------------------------------
# Instance registry and serialization


def instance_from_json(obj):
    kind = obj["type"]
    params = obj.get("params", {})
    if kind == "matrix":
        return MatrixInstance(params["n"])
    if kind == "function":
        return FunctionInstance(params["points"], params["n"])
    if kind == "inttuple":
        return IntTupleInstance(params["length"])
    if kind == "product":
        return ProductInstance(
            instance_from_json(params["left"]), instance_from_json(params["right"])
        )
    if kind == "finite-control":
        return FiniteControlInstance(params.get("modulus", 5))
    raise ValueError("unknown instance type: %r (expected matrix/function/"
                     "inttuple/product/finite-control)" % kind)


BUILTIN_INSTANCES = {
    "m1": lambda: MatrixInstance(1),
    "m2": lambda: MatrixInstance(2),
    "m3": lambda: MatrixInstance(3),
    "func2x2": lambda: FunctionInstance(("x1", "x2"), 2),
    "int3": lambda: IntTupleInstance(3),
    "int13": lambda: IntTupleInstance(13),
    "z5-control": lambda: FiniteControlInstance(5),
    "z6-control": lambda: FiniteControlInstance(6),
    "prod-m2-int2": lambda: ProductInstance(MatrixInstance(2), IntTupleInstance(2)),
}


def get_instance(name):
    try:
        return BUILTIN_INSTANCES[name]()
    except KeyError:
        raise ValueError(
            "unknown instance %r; builtins: %s"
            % (name, ", ".join(sorted(BUILTIN_INSTANCES)))
        ) from None

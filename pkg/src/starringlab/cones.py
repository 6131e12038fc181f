"""Distinguished subsets, element operations and derived orders of a *-ring.

Membership judgments are three-valued and carry provenance:

  "oracle"         exact instance-level decision procedure
  "identity-check" direct evaluation of a defining equation
  "bounded-search" existential quantifier relativized to the probe closure;
                   exhaustion yields Unknown, never No

Derived orders are materialized as extensional Relations over the probe
carrier; bounded-search orders carry an incompleteness marker.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .relorder import Relation


class ConeName(Enum):
    SelfAdjoint = "self-adjoint"
    SkewAdjoint = "skew-adjoint"
    Normal = "normal"
    StarSquares = "star-squares"
    StarSums = "star-sums"
    StarPositive = "star-positive"
    Accretive = "accretive"
    Ball = "ball"
    HalfF = "half-f"
    F = "f"
    LittleC = "little-c"
    Idempotents = "idempotents"
    Projections = "projections"
    APlusOne = "a-plus-one"


class OrderName(Enum):
    GreenA = "green"
    Fixator = "fixator"
    Orthogonal = "orthogonal"
    EquivSkew = "equiv-skew"
    PlusOrder = "plus"
    ROrder = "r"
    StarOrder = "star"
    BallOrder = "ball"
    FOrder = "f"
    COrder = "c"
    BulletOrder = "bullet"


YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Membership:
    value: str  # yes | no | unknown
    provenance: str  # oracle | bounded-search | identity-check
    witness: object = None

    def __bool__(self):
        return self.value == YES


# How far n·a is chased into the *-sums when no positivity oracle exists.
POSITIVE_MULTIPLE_BOUND = 16
LITTLE_C_SEARCH_BOUND = 16


class InstanceError(ValueError):
    pass


def _require_unit(inst):
    if not inst.is_unital:
        raise InstanceError("operation needs a unit; instance %r has none" % inst.id)


# ---------------------------------------------------------------------------
# Element operations


def perp_complement(inst, a):
    """1 - a."""
    _require_unit(inst)
    return inst.sub(inst.unit, a)


def bullet(inst, a, b):
    """a + b - ab (the dual of multiplication under 1 - x)."""
    _require_unit(inst)
    return inst.sub(inst.add(a, b), inst.mul(a, b))


def star_op(inst, a, b):
    """a + b - 2ab."""
    _require_unit(inst)
    ab = inst.mul(a, b)
    return inst.sub(inst.add(a, b), inst.add(ab, ab))


def abs_square(inst, a):
    """a* a."""
    return inst.mul(inst.star(a), a)


def skew_decompose(inst, a):
    """a = h + k with h self-adjoint and k skew-adjoint, via halving."""
    s = inst.star(a)
    h = inst.halve(inst.add(a, s))
    k = inst.halve(inst.sub(a, s))
    if h is None or k is None:
        raise InstanceError("2 is not invertible in instance %r" % inst.id)
    return h, k


# ---------------------------------------------------------------------------
# Membership

_MEMBER_CACHE = {}


def member(inst, probes, cone, a, search_depth=8):
    """Three-valued membership of a in the named subset."""
    inst.validate(a)
    key = (inst.id, None if probes is None else (probes.seed, probes.count), cone, a, search_depth)
    hit = _MEMBER_CACHE.get(key)
    if hit is not None:
        return hit
    out = _member(inst, probes, cone, a, search_depth)
    _MEMBER_CACHE[key] = out
    return out


def _yes_no(cond, provenance="identity-check", witness=None):
    return Membership(YES if cond else NO, provenance, witness if cond else None)


def _member(inst, probes, cone, a, search_depth):
    star = inst.star
    mul = inst.mul
    if cone is ConeName.SelfAdjoint:
        return _yes_no(a == star(a))
    if cone is ConeName.SkewAdjoint:
        return _yes_no(a == inst.neg(star(a)))
    if cone is ConeName.Normal:
        return _yes_no(mul(a, star(a)) == mul(star(a), a))
    if cone is ConeName.Idempotents:
        return _yes_no(mul(a, a) == a)
    if cone is ConeName.Projections:
        return _yes_no(mul(a, a) == a and a == star(a))
    if cone is ConeName.StarSquares:
        return _member_star_squares(inst, probes, a)
    if cone is ConeName.StarSums:
        return _member_star_sums(inst, probes, a, search_depth)
    if cone is ConeName.StarPositive:
        return _member_positive(inst, probes, a, search_depth)
    if cone is ConeName.Accretive:
        h = inst.add(a, star(a))
        inner = _member_positive(inst, probes, h, search_depth)
        return Membership(inner.value, inner.provenance, inner.witness)
    if cone is ConeName.Ball:
        _require_unit(inst)
        return _accretive_of(inst, probes, inst.sub(inst.unit, abs_square(inst, a)), search_depth)
    if cone is ConeName.F:
        diff = inst.sub(inst.int_scale(a, 2), abs_square(inst, a))
        return _accretive_of(inst, probes, diff, search_depth)
    if cone is ConeName.HalfF:
        diff = inst.sub(a, abs_square(inst, a))
        return _accretive_of(inst, probes, diff, search_depth)
    if cone is ConeName.APlusOne:
        half = _member(inst, probes, ConeName.HalfF, a, search_depth)
        if a != star(a):
            return Membership(NO, half.provenance)
        return half
    if cone is ConeName.LittleC:
        return _member_little_c(inst, probes, a, search_depth)
    raise ValueError(cone)


def _accretive_of(inst, probes, diff, search_depth):
    return _member(inst, probes, ConeName.Accretive, diff, search_depth)


def _member_star_squares(inst, probes, a):
    oracle = inst.star_square_oracle
    if oracle is not None:
        b = oracle(a)
        if b is not None:
            return Membership(YES, "oracle", b)
        if getattr(inst, "star_square_complete", False):
            return Membership(NO, "oracle")
        pos = inst.positivity_oracle
        if pos is not None and not pos(a):
            # b*b is always *-positive, so non-positive elements are out
            return Membership(NO, "oracle")
    if probes is not None:
        for b in probes.closure(inst):
            if inst.mul(inst.star(b), b) == a:
                return Membership(YES, "bounded-search", b)
    return Membership(UNKNOWN, "bounded-search")


def _member_star_sums(inst, probes, a, search_depth):
    oracle = inst.star_sums_oracle
    if oracle is not None:
        w = oracle(a)
        if w is not None:
            return Membership(YES, "oracle", w)
        return Membership(NO, "oracle")
    if probes is None:
        return Membership(UNKNOWN, "bounded-search")
    squares = []
    seen = set()
    for b in probes.closure(inst):
        s = inst.mul(inst.star(b), b)
        if s not in seen:
            seen.add(s)
            squares.append((s, b))
    # breadth-first over sums of at most search_depth *-squares
    frontier = {inst.zero: ()}
    for _ in range(search_depth):
        nxt = {}
        for total, path in frontier.items():
            if total == a:
                return Membership(YES, "bounded-search", list(path))
            for s, b in squares:
                t = inst.add(total, s)
                if t not in frontier and t not in nxt:
                    nxt[t] = path + (b,)
        if a in nxt:
            return Membership(YES, "bounded-search", list(nxt[a]))
        frontier = nxt
        if not frontier:
            break
    return Membership(UNKNOWN, "bounded-search")


def _member_positive(inst, probes, a, search_depth):
    oracle = inst.positivity_oracle
    if oracle is not None:
        return Membership(YES if oracle(a) else NO, "oracle")
    for n in range(1, POSITIVE_MULTIPLE_BOUND + 1):
        inner = _member_star_sums(inst, probes, inst.int_scale(a, n), search_depth)
        if inner.value == YES:
            return Membership(YES, "bounded-search", (n, inner.witness))
    return Membership(UNKNOWN, "bounded-search")


def _member_little_c(inst, probes, a, search_depth):
    oracle = inst.cone_c_oracle
    if oracle is not None:
        ok, n = oracle(a)
        return Membership(YES if ok else NO, "oracle", n)
    s = abs_square(inst, a)
    unknown = False
    for n in range(1, LITTLE_C_SEARCH_BOUND + 1):
        inner = _accretive_of(inst, probes, inst.sub(inst.int_scale(a, n), s), search_depth)
        if inner.value == YES:
            return Membership(YES, "bounded-search", n)
        if inner.value == UNKNOWN:
            unknown = True
    # the multiple n is unbounded, so exhaustion never certifies No
    return Membership(UNKNOWN, "bounded-search", None if unknown else "bound-exhausted")


def members(inst, probes, cone, elements, search_depth=8):
    """Elements of the iterable that are certainly in the subset."""
    return [
        e
        for e in elements
        if member(inst, probes, cone, e, search_depth).value == YES
    ]


# ---------------------------------------------------------------------------
# Derived orders as extensional relations


@dataclass(frozen=True)
class OrderRelation:
    order: OrderName
    rel: Relation
    provenance: str  # oracle | bounded-search | identity-check
    unknown_pairs: tuple = ()

    @property
    def incomplete(self):
        return bool(self.unknown_pairs) or self.rel.incomplete

    def to_json(self):
        out = self.rel.to_json()
        out["order"] = self.order.value
        out["provenance"] = self.provenance
        if self.unknown_pairs:
            out["unknownPairs"] = [list(p) for p in self.unknown_pairs]
        return out


_RELATION_CACHE = {}

# orders defined by an existential divisibility condition
_DIVISION_ORDERS = {
    OrderName.GreenA: "green",
    OrderName.BallOrder: "ball",
    OrderName.FOrder: "f",
    OrderName.BulletOrder: "bullet",
}

# orders defined by membership of b - a in a cone
_DIFFERENCE_ORDERS = {
    OrderName.PlusOrder: ConeName.StarPositive,
    OrderName.ROrder: ConeName.Accretive,
    OrderName.COrder: ConeName.LittleC,
}


def relation(inst, probes, order, search_depth=8):
    """Extensional order relation over the probe carrier."""
    key = (inst.id, probes.seed, probes.count, order, search_depth)
    hit = _RELATION_CACHE.get(key)
    if hit is not None:
        return hit
    out = _relation(inst, probes, order, search_depth)
    _RELATION_CACHE[key] = out
    return out


def carrier_of(probes):
    from .relorder import Carrier

    return Carrier(probes.elements)


def _relation(inst, probes, order, search_depth):
    carrier = carrier_of(probes)
    elems = probes.elements

    if order is OrderName.Fixator:
        pairs = {(a, b) for a in elems for b in elems if inst.mul(a, b) == a}
        return OrderRelation(order, Relation(carrier, pairs), "identity-check")

    if order is OrderName.Orthogonal:
        pairs = {(a, b) for a in elems for b in elems if inst.mul(a, b) == inst.zero}
        return OrderRelation(order, Relation(carrier, pairs), "identity-check")

    if order is OrderName.EquivSkew:
        pairs = set()
        for a in elems:
            for b in elems:
                d = inst.sub(a, b)
                if d == inst.neg(inst.star(d)):
                    pairs.add((a, b))
        return OrderRelation(order, Relation(carrier, pairs), "identity-check")

    if order in _DIFFERENCE_ORDERS:
        cone = _DIFFERENCE_ORDERS[order]
        pairs = set()
        unknown = []
        for a in elems:
            for b in elems:
                m = member(inst, probes, cone, inst.sub(b, a), search_depth)
                if m.value == YES:
                    pairs.add((a, b))
                elif m.value == UNKNOWN:
                    unknown.append((a, b))
        prov = "oracle" if not unknown else "bounded-search"
        return OrderRelation(
            order,
            Relation(carrier, pairs, incomplete=bool(unknown)),
            prov,
            tuple(unknown),
        )

    if order is OrderName.StarOrder:
        # a <=* b iff a*a <=_r b*b
        squares = {e: abs_square(inst, e) for e in elems}
        pairs = set()
        unknown = []
        for a in elems:
            for b in elems:
                m = member(
                    inst,
                    probes,
                    ConeName.Accretive,
                    inst.sub(squares[b], squares[a]),
                    search_depth,
                )
                if m.value == YES:
                    pairs.add((a, b))
                elif m.value == UNKNOWN:
                    unknown.append((a, b))
        prov = "oracle" if not unknown else "bounded-search"
        return OrderRelation(
            order,
            Relation(carrier, pairs, incomplete=bool(unknown)),
            prov,
            tuple(unknown),
        )

    if order in _DIVISION_ORDERS:
        kind = _DIVISION_ORDERS[order]
        if inst.division_oracle is not None:
            pairs = {
                (a, b)
                for a in elems
                for b in elems
                if inst.division_oracle(kind, a, b)
            }
            return OrderRelation(order, Relation(carrier, pairs), "oracle")
        return _division_by_search(inst, probes, order, kind, carrier, search_depth)

    raise ValueError(order)


def _division_by_search(inst, probes, order, kind, carrier, search_depth):
    """Existential witnesses hunted in the probe closure; always incomplete."""
    elems = probes.elements
    closure = probes.closure(inst)
    if kind == "ball":
        closure = [
            x
            for x in closure
            if member(inst, probes, ConeName.Ball, x, search_depth).value == YES
        ]
    elif kind == "f":
        closure = [
            x
            for x in closure
            if member(inst, probes, ConeName.F, x, search_depth).value == YES
        ]
    pairs = set()
    for a in elems:
        for b in elems:
            if kind in ("green", "ball"):
                hit = any(inst.mul(x, b) == a for x in closure)
            else:  # f, bullet: b = a . x
                hit = any(bullet(inst, a, x) == b for x in closure)
            if hit:
                pairs.add((a, b))
    # pairs without a witness in the closure stay undecided, not refuted
    return OrderRelation(
        order, Relation(carrier, pairs, incomplete=True), "bounded-search"
    )


# ---------------------------------------------------------------------------
# Square roots and decompositions


def positive_square_root(inst, probes, a, search_depth=8):
    """b in A_+ with b^2 = a, when one exists exactly in the scalar field.

    Returns (b, reason): b None with reason "no exact root in scalar field"
    when positivity holds but the spectrum does not admit rational roots.
    """
    m = member(inst, probes, ConeName.StarPositive, a, search_depth)
    if m.value != YES:
        raise ValueError("element is not *-positive (judgment: %s)" % m.value)
    oracle = inst.sqrt_oracle
    if oracle is None:
        return None, "instance has no square-root oracle"
    b = oracle(a)
    if b is None:
        return None, "no exact root in scalar field"
    return b, None


def decompose(inst, probes, c, search_depth=8):
    """c = a - b with a, b *-positive and orthogonal, via |c| = sqrt(c^2).

    Returns (a, b) or (None, reason) when |c| has no exact representative.
    """
    if c != inst.star(c):
        raise ValueError("decompose needs a self-adjoint element")
    c2 = inst.mul(c, c)
    root, reason = positive_square_root(inst, probes, c2, search_depth)
    if root is None:
        return None, reason
    a = inst.halve(inst.add(root, c))
    b = inst.halve(inst.sub(root, c))
    if a is None or b is None:
        return None, "2 is not invertible and the halves are inexact"
    return (a, b), None

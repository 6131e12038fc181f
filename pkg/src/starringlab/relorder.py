"""Calculus of binary relations on finite carriers.

Relations are extensional pair sets over an ordered finite carrier (an
intensional predicate form is accepted and materialized immediately).
Everything downstream — order classification, auxiliarity, derived orders,
incompatibility, separativity, supremums — reduces to exhaustive
enumeration here, which is the point: the semantics is finite and checkable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations


class CarrierMismatch(ValueError):
    pass


class Carrier:
    """Ordered finite sequence of pairwise-distinct opaque element ids."""

    __slots__ = ("elements", "index")

    def __init__(self, elements):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("carrier elements must be pairwise distinct")

    @property
    def size(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Carrier) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "Carrier(%r)" % (self.elements,)


class Relation:
    """Binary relation over a Carrier, stored extensionally.

    Internally keeps per-element bitmasks of lower sets ({c : c R a}) and
    upper sets ({c : a R c}) for fast set-level computations.
    """

    __slots__ = ("carrier", "pairs", "_up", "_down", "incomplete")

    def __init__(self, carrier, pairs=None, predicate=None, incomplete=False):
        self.carrier = carrier
        if predicate is not None:
            if pairs is not None:
                raise ValueError("give either pairs or a predicate, not both")
            pairs = {
                (a, b)
                for a in carrier.elements
                for b in carrier.elements
                if predicate(a, b)
            }
        pairs = frozenset(pairs or ())
        idx = carrier.index
        for a, b in pairs:
            if a not in idx or b not in idx:
                raise ValueError("pair (%r, %r) outside carrier" % (a, b))
        self.pairs = pairs
        n = carrier.size
        up = [0] * n
        down = [0] * n
        for a, b in pairs:
            ia, ib = idx[a], idx[b]
            up[ia] |= 1 << ib
            down[ib] |= 1 << ia
        self._up = up
        self._down = down
        # Marker for bounded-search relations whose pair set may be partial.
        self.incomplete = incomplete

    # -- set views ---------------------------------------------------------

    def upper_mask(self, a):
        """(a R) as a bitmask over carrier indices."""
        return self._up[self.carrier.index[a]]

    def lower_mask(self, a):
        """(R a) as a bitmask over carrier indices."""
        return self._down[self.carrier.index[a]]

    def upper_set(self, a):
        return self._mask_elems(self.upper_mask(a))

    def lower_set(self, a):
        return self._mask_elems(self.lower_mask(a))

    def _mask_elems(self, mask):
        elems = self.carrier.elements
        return frozenset(e for i, e in enumerate(elems) if mask >> i & 1)

    def __contains__(self, pair):
        return pair in self.pairs

    def __eq__(self, other):
        return (
            isinstance(other, Relation)
            and self.carrier == other.carrier
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash((self.carrier, self.pairs))

    def __le__(self, other):
        _check_carrier(self, other)
        return self.pairs <= other.pairs

    def __repr__(self):
        return "Relation(%d pairs on %d elements)" % (
            len(self.pairs),
            self.carrier.size,
        )

    # -- constructions -----------------------------------------------------

    @staticmethod
    def identity(carrier):
        return Relation(carrier, {(a, a) for a in carrier.elements})

    @staticmethod
    def full(carrier):
        es = carrier.elements
        return Relation(carrier, {(a, b) for a in es for b in es})

    def converse(self):
        return Relation(self.carrier, {(b, a) for a, b in self.pairs})

    def union(self, other):
        _check_carrier(self, other)
        return Relation(self.carrier, self.pairs | other.pairs)

    def intersection(self, other):
        _check_carrier(self, other)
        return Relation(self.carrier, self.pairs & other.pairs)

    def restrict(self, subset):
        """Relation restricted to subset, with subset as the new carrier."""
        sub = Carrier([e for e in self.carrier.elements if e in set(subset)])
        keep = set(sub.elements)
        return Relation(
            sub, {(a, b) for a, b in self.pairs if a in keep and b in keep}
        )

    def to_json(self):
        pairs = sorted(
            self.pairs,
            key=lambda p: (self.carrier.index[p[0]], self.carrier.index[p[1]]),
        )
        return {
            "carrier": list(self.carrier.elements),
            "pairs": [[a, b] for a, b in pairs],
        }

    @staticmethod
    def from_json(obj):
        carrier = Carrier(obj["carrier"])
        return Relation(carrier, {(a, b) for a, b in obj["pairs"]})

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _check_carrier(r, s):
    if r.carrier != s.carrier:
        raise CarrierMismatch("relations live on different carriers")


def compose(r, s):
    """{(a,b) : exists c with a r c and c s b}."""
    _check_carrier(r, s)
    carrier = r.carrier
    elems = carrier.elements
    out = set()
    for a in elems:
        mask = 0
        am = r.upper_mask(a)
        i = 0
        m = am
        while m:
            if m & 1:
                mask |= s._up[i]
            m >>= 1
            i += 1
        for i, b in enumerate(elems):
            if mask >> i & 1:
                out.add((a, b))
    return Relation(carrier, out)


def is_left_auxiliary(ll, pr):
    """compose(ll, pr) == ll and ll subseteq pr."""
    _check_carrier(ll, pr)
    return ll.pairs <= pr.pairs and compose(ll, pr).pairs == ll.pairs


def is_right_auxiliary(ll, pr):
    """compose(pr, ll) == ll and ll subseteq pr."""
    _check_carrier(ll, pr)
    return ll.pairs <= pr.pairs and compose(pr, ll).pairs == ll.pairs


def is_auxiliary(ll, pr):
    return is_left_auxiliary(ll, pr) and is_right_auxiliary(ll, pr)


@dataclass(frozen=True)
class RelationClassification:
    transitive: bool
    reflexive: bool
    antisymmetric: bool
    symmetric: bool
    preorder: bool
    partial_order: bool
    equivalence: bool
    has_interpolation: bool
    has_riesz_interpolation: bool
    separative: bool


# Non-transitive Riesz interpolation enumerates finite sets only up to this
# size; the cap is reported by callers that rely on it.
RIESZ_SET_CAP = 3


def classify(r):
    rr = compose(r, r)
    ident = Relation.identity(r.carrier)
    transitive = rr.pairs <= r.pairs
    reflexive = ident.pairs <= r.pairs
    conv = r.converse()
    antisymmetric = (r.pairs & conv.pairs) <= ident.pairs
    symmetric = r.pairs == conv.pairs
    preorder = transitive and reflexive
    interpolation = r.pairs <= rr.pairs
    riesz = _riesz_interpolation(r, transitive)
    return RelationClassification(
        transitive=transitive,
        reflexive=reflexive,
        antisymmetric=antisymmetric,
        symmetric=symmetric,
        preorder=preorder,
        partial_order=preorder and antisymmetric,
        equivalence=preorder and symmetric,
        has_interpolation=interpolation,
        has_riesz_interpolation=riesz,
        separative=is_separative(r),
    )


def _subsets(elems, max_size):
    for k in range(1, max_size + 1):
        yield from combinations(elems, k)


def _riesz_interpolation(r, transitive):
    """B <<_F C lifted interpolation.

    For transitive relations it suffices to interpolate pairs against pairs
    through a single element; otherwise finite sets up to RIESZ_SET_CAP are
    enumerated on both sides (and for the interpolant).
    """
    carrier = r.carrier
    elems = carrier.elements
    idx = carrier.index
    n = carrier.size
    full = (1 << n) - 1 if n else 0

    def upmask(group):
        m = full
        for e in group:
            m &= r._up[idx[e]]
        return m

    def downmask(group):
        m = full
        for e in group:
            m &= r._down[idx[e]]
        return m

    # An interpolating set always contains a singleton interpolant (every
    # element of D satisfies B <<_F {d} <<_F C), so only the B/C sizes matter.
    max_size = 2 if transitive else RIESZ_SET_CAP
    for bs in _subsets(elems, max_size):
        above_b = upmask(bs)
        if not above_b:
            continue
        for cs in _subsets(elems, max_size):
            cmask = 0
            for c in cs:
                cmask |= 1 << idx[c]
            if cmask & ~above_b:
                continue  # not B <<_F C
            if not above_b & downmask(cs):
                return False
    return True


SET_RELATIONS = {
    "subset": lambda x, y: (x & ~y) == 0,
    "equal": lambda x, y: x == y,
    "superset": lambda x, y: (y & ~x) == 0,
}


def lift_upper(r, set_relation="subset"):
    """a R^ b iff setrel((R a), (R b)), on lower sets."""
    rel = SET_RELATIONS[set_relation]
    carrier = r.carrier
    pairs = set()
    for a in carrier.elements:
        la = r.lower_mask(a)
        for b in carrier.elements:
            if rel(la, r.lower_mask(b)):
                pairs.add((a, b))
    return Relation(carrier, pairs)


def lift_lower(r, set_relation="subset"):
    """a R_ b iff setrel((b R), (a R)), on upper sets with arguments swapped."""
    rel = SET_RELATIONS[set_relation]
    carrier = r.carrier
    pairs = set()
    for a in carrier.elements:
        ua = r.upper_mask(a)
        for b in carrier.elements:
            if rel(r.upper_mask(b), ua):
                pairs.add((a, b))
    return Relation(carrier, pairs)


def incompatibility(r):
    """a T b iff every c below both a and b has (c R) equal to the carrier."""
    carrier = r.carrier
    n = carrier.size
    full = (1 << n) - 1 if n else 0
    dominating = 0
    for i in range(n):
        if r._up[i] == full:
            dominating |= 1 << i
    pairs = set()
    for i, a in enumerate(carrier.elements):
        da = r._down[i]
        for j, b in enumerate(carrier.elements):
            below_both = da & r._down[j]
            if below_both & ~dominating == 0:
                pairs.add((a, b))
    return Relation(carrier, pairs)


def is_separative(r):
    """r coincides with the order derived from its incompatibility relation."""
    return r.pairs == lift_lower(incompatibility(r), "subset").pairs


@dataclass(frozen=True)
class BoundResult:
    element: object  # None when no element satisfies the identity
    multiple: bool  # True when the relation admits several witnesses


def supremum(r, subset):
    """a with (a R) = intersection of (b R) over b in subset, if any.

    Non-antisymmetric relations can admit several witnesses; the first in
    carrier order is returned and multiplicity flagged.
    """
    return _bound(r, subset, use_upper=True)


def infimum(r, subset):
    return _bound(r, subset, use_upper=False)


def _bound(r, subset, use_upper):
    carrier = r.carrier
    n = carrier.size
    target = (1 << n) - 1 if n else 0
    masks = r._up if use_upper else r._down
    idx = carrier.index
    for b in subset:
        if b not in idx:
            raise ValueError("bound set not contained in carrier")
        target &= masks[idx[b]]
    found = None
    multiple = False
    for i, a in enumerate(carrier.elements):
        if masks[i] == target:
            if found is None:
                found = a
            else:
                multiple = True
                break
    return BoundResult(found, multiple)


def is_cofinal(r, subset):
    """subset meets (a R) whenever (a R) is nonempty, for every carrier a."""
    idx = r.carrier.index
    bmask = 0
    for b in subset:
        bmask |= 1 << idx[b]
    for i in range(r.carrier.size):
        up = r._up[i]
        if up and not up & bmask:
            return False
    return True


def is_coinitial(r, subset):
    idx = r.carrier.index
    bmask = 0
    for b in subset:
        bmask |= 1 << idx[b]
    for i in range(r.carrier.size):
        down = r._down[i]
        if down and not down & bmask:
            return False
    return True

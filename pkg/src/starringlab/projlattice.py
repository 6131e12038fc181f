"""Projection constructions: supports, Sasaki projections, meets, joins,
coinitiality ("Blackadar") checkers and the projection-lattice laws.

Projection pools are finite and deterministic: curated projections, supports
of all probes, their complements, and one level of pairwise meets/joins.
All lattice judgments are probe-relative: set identities are checked against
the probe carrier, not all of the ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cones import (
    ConeName,
    OrderName,
    YES,
    member,
    perp_complement,
    relation,
)
from .relorder import Carrier, Relation, classify, is_separative, lift_lower

POOL_BASE_CAP = 20  # curated + supports kept before the derived layer
SUBPOOL = 12  # pairs/triples for the cubic cross-validation checks


class SupportError(ValueError):
    pass


def is_projection(inst, e):
    return inst.mul(e, e) == e and e == inst.star(e)


def support_projection(inst, a, probes=None):
    """Right support projection: p with a = ap and the same right annihilator.

    Instances without a support oracle fall back to an exhaustive hunt over
    the probe projections; None means the search was inconclusive.
    """
    oracle = inst.support_oracle
    if oracle is not None:
        return oracle(a)
    if probes is None:
        raise SupportError("instance %r has no support oracle" % inst.id)
    candidates = [e for e in probes if is_projection(inst, e)]
    for p in candidates:
        if inst.mul(a, p) != a:
            continue
        if all(
            (inst.mul(a, x) == inst.zero) == (inst.mul(p, x) == inst.zero)
            for x in probes
        ):
            return p
    return None


def sasaki(inst, p, q, probes=None):
    """Projection of p onto q: the right support of pq."""
    return support_projection(inst, inst.mul(p, q), probes)


def meet(inst, p, q, probes=None):
    """(1 - [p_perp q>>) q."""
    s = support_projection(inst, inst.mul(perp_complement(inst, p), q), probes)
    if s is None:
        return None
    return inst.mul(perp_complement(inst, s), q)


def join(inst, p, q, probes=None):
    """[p q_perp>> + q."""
    s = support_projection(inst, inst.mul(p, perp_complement(inst, q)), probes)
    if s is None:
        return None
    return inst.add(s, q)


def perp_meet(inst, p, q, probes=None):
    """q - sasaki(p, q): the largest projection under q orthogonal to p."""
    s = sasaki(inst, p, q, probes)
    if s is None:
        return None
    return inst.sub(q, s)


_POOL_CACHE = {}


def projection_pool(inst, probes, base_cap=POOL_BASE_CAP):
    """Deterministic finite projection pool for lattice checks."""
    key = (inst.id, probes.seed, probes.count, base_cap)
    hit = _POOL_CACHE.get(key)
    if hit is not None:
        return hit
    out = []
    seen = set()

    def add(p):
        if p is not None and p not in seen and is_projection(inst, p):
            seen.add(p)
            out.append(p)

    add(inst.zero)
    if inst.is_unital:
        add(inst.unit)
    for e in probes:
        if is_projection(inst, e):
            add(e)
    if inst.support_oracle is not None:
        for e in probes:
            add(inst.support_oracle(e))
    base = out[:base_cap]
    out = list(base)
    seen = set(base)
    if inst.is_unital:
        for p in base:
            add(inst.sub(inst.unit, p))
        if inst.support_oracle is not None:
            for i, p in enumerate(base):
                for q in base[i + 1 :]:
                    add(meet(inst, p, q))
                    add(join(inst, p, q))
    pool = tuple(out)
    _POOL_CACHE[key] = pool
    return pool


# ---------------------------------------------------------------------------
# Law reports

SCOPE_PROBE = "probe-relative"
SCOPE_EXACT = "exact"


def law(law_id, ok, scope, witness=None, status=None):
    return {
        "lawId": law_id,
        "status": status if status is not None else ("pass" if ok else "fail"),
        "quantifierScope": scope,
        "witness": witness,
    }


def _probe_projections(inst, probes):
    return [e for e in probes if is_projection(inst, e)]


def projection_characterizations(inst, probes, search_depth=8):
    """Idempotent-vs-projection laws over the probe carrier."""
    results = []
    projs = _probe_projections(inst, probes)
    mul, zero = inst.mul, inst.zero

    # pq idempotent iff p and q commute
    w = None
    for p in projs:
        for q in projs:
            pq = mul(p, q)
            if (mul(pq, pq) == pq) != (pq == mul(q, p)):
                w = (p, q)
                break
        if w:
            break
    results.append(law("proj/pq", w is None, SCOPE_PROBE, w))

    # p+q idempotent iff p orthogonal to q
    w = None
    for p in projs:
        for q in projs:
            s = inst.add(p, q)
            if (mul(s, s) == s) != (mul(p, q) == zero):
                w = (p, q)
                break
        if w:
            break
    results.append(law("proj/p+q", w is None, SCOPE_PROBE, w))

    # p-q idempotent iff q fixed by p
    w = None
    for p in projs:
        for q in projs:
            d = inst.sub(p, q)
            if (mul(d, d) == d) != (mul(q, p) == q):
                w = (p, q)
                break
        if w:
            break
    results.append(law("proj/p-q", w is None, SCOPE_PROBE, w))

    # p below a under the fixator implies p below a in the positive order
    w = None
    for a in probes:
        if member(inst, probes, ConeName.StarPositive, a, search_depth).value != YES:
            continue
        for p in projs:
            if mul(p, a) == p:
                d = inst.sub(a, p)
                if member(inst, probes, ConeName.StarPositive, d, search_depth).value != YES:
                    w = (p, a)
                    break
        if w:
            break
    results.append(law("proj/plla", w is None, SCOPE_PROBE, w))

    # projections = idempotents meeting normal/accretive/co-accretive or the
    # two one-sided product cones
    results.append(_projection_block(inst, probes, search_depth))

    # projections = idempotents in any of the three balls
    w = None
    idems = [e for e in probes if mul(e, e) == e]
    for e in idems:
        isp = is_projection(inst, e)
        for cone in (ConeName.Ball, ConeName.F, ConeName.HalfF):
            if (member(inst, probes, cone, e, search_depth).value == YES) != isp:
                w = (e, cone.value)
                break
        if w:
            break
    results.append(law("proj/I-cap-balls", w is None, SCOPE_PROBE, w))

    # the fixator is a partial order on probe projections
    if projs:
        fix = relation(inst, probes, OrderName.Fixator).rel.restrict(projs)
        cls = classify(fix)
        results.append(
            law("proj/ll-partial-order", cls.partial_order, SCOPE_PROBE)
        )
        # on projections the fixator coincides with every divisibility order
        w = None
        for name in (
            OrderName.ROrder,
            OrderName.StarOrder,
            OrderName.COrder,
            OrderName.GreenA,
            OrderName.BulletOrder,
        ):
            other = relation(inst, probes, name).rel.restrict(projs)
            if other.pairs != fix.pairs:
                w = name.value
                break
        results.append(law("proj/ll-coincidence", w is None, SCOPE_PROBE, w))
    return results


def _projection_block(inst, probes, search_depth):
    """Idempotents are projections iff they fall in one of the named cones or
    one-sided products; non-projections must avoid all of them."""
    mul = inst.mul
    idems = [e for e in probes if mul(e, e) == e]
    sa = [x for x in probes if x == inst.star(x)]
    pos_perp = []
    if inst.is_unital:
        for y in probes:
            if member(inst, probes, ConeName.StarPositive, y, search_depth).value == YES:
                pos_perp.append(perp_complement(inst, y))
    witness = None
    for e in idems:
        in_cones = member(inst, probes, ConeName.Normal, e).value == YES
        if not in_cones:
            in_cones = member(inst, probes, ConeName.Accretive, e, search_depth).value == YES
        if not in_cones and inst.is_unital:
            in_cones = (
                member(
                    inst, probes, ConeName.Accretive, perp_complement(inst, e), search_depth
                ).value
                == YES
            )
        if not in_cones:
            # one-sided products, hunted over probe pairs
            in_cones = any(
                mul(x, y) == e or mul(y, x) == e for x in sa for y in pos_perp
            )
        if in_cones != is_projection(inst, e):
            witness = e
            break
    return law("proj/P-block", witness is None, SCOPE_PROBE, witness)


# ---------------------------------------------------------------------------
# Coinitiality of projections


@dataclass
class BlackadarVerdict:
    property: str
    verdict: str  # yes | no | unknown
    witnesses: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)


BLACKADAR_PROPERTIES = (
    "green-blackadar",
    "subperp-blackadar",
    "fixator-blackadar",
    "eqperp-blackadar",
    "blackadar",
)


def blackadar_check(inst, probes, prop, pool=None):
    """Probe-relative verdict: can every (applicable) nonzero probe see a
    nonzero projection below it in the given sense?"""
    if prop not in BLACKADAR_PROPERTIES:
        raise ValueError(prop)
    if pool is None:
        pool = projection_pool(inst, probes)
    zero = inst.zero
    lkp = getattr(inst, "left_kernel_oracle", None)
    verdict = BlackadarVerdict(property=prop, verdict="yes")
    orth = relation(inst, probes, OrderName.Orthogonal).rel
    elems = probes.elements

    def ann_mask(x):
        if x in orth.carrier.index:
            return orth.upper_mask(x)
        return _ann_mask(inst, x, elems)

    def left_ann_mask(x):
        if x in orth.carrier.index:
            return orth.lower_mask(x)
        mask = 0
        for i, y in enumerate(elems):
            if inst.mul(y, x) == zero:
                mask |= 1 << i
        return mask

    if prop == "blackadar":
        pool_candidates = [
            p for p in pool if not (inst.is_unital and p == inst.unit)
        ]
    else:
        pool_candidates = [p for p in pool if p != zero]

    for a in elems:
        if a == zero:
            continue
        candidates = []
        if prop == "fixator-blackadar":
            # applicable only when something nonzero is fixed by a
            if lkp is not None and inst.is_unital:
                c = lkp(inst.sub(inst.unit, a))
                if c == zero:
                    continue  # nothing nonzero is fixed by a
                candidates.append(c)
            elif not any(b != zero and inst.mul(b, a) == b for b in elems):
                continue
        elif prop == "blackadar":
            if lkp is not None:
                candidates.append(lkp(a))
        elif inst.support_oracle is not None:
            candidates.append(inst.support_oracle(a))
        aa = left_ann_mask(a) if prop == "blackadar" else ann_mask(a)
        found = None
        for p in candidates + pool_candidates:
            if p is None or not is_projection(inst, p):
                continue
            if prop == "blackadar":
                if inst.is_unital and p == inst.unit:
                    continue
                # everything annihilating a from the left must be fixed by p
                ok = all(
                    inst.mul(x, p) == x
                    for i, x in enumerate(elems)
                    if aa >> i & 1
                )
            elif p == zero:
                continue
            elif prop == "green-blackadar":
                if inst.division_oracle is not None:
                    ok = inst.division_oracle("green", p, a)
                else:
                    ok = any(inst.mul(x, a) == p for x in probes.closure(inst))
            elif prop == "fixator-blackadar":
                ok = inst.mul(p, a) == p
            elif prop == "subperp-blackadar":
                ok = aa & ~ann_mask(p) == 0
            else:  # eqperp-blackadar
                ok = aa == ann_mask(p)
            if ok:
                found = p
                break
        if found is not None:
            verdict.witnesses[a] = found
        else:
            verdict.verdict = "no"
            verdict.failures[a] = "no qualifying projection in the enumerated pool"
    return verdict


# ---------------------------------------------------------------------------
# Lattice-structure laws


def ls_laws(inst, probes, search_depth=8):
    """Support/meet/join laws and the constructive separation properties."""
    if not inst.is_unital:
        raise SupportError("lattice laws need a unit")
    results = []
    pool = projection_pool(inst, probes)
    sub = pool[:SUBPOOL]
    fix = relation(inst, probes, OrderName.Fixator).rel
    orth = relation(inst, probes, OrderName.Orthogonal).rel
    mul, zero, unit = inst.mul, inst.zero, inst.unit
    elems = probes.elements

    # c fixed by a and b is orthogonal to a(1-b)
    w = None
    for c in elems:
        ups = fix.upper_set(c)
        for a in ups:
            for b in ups:
                if mul(c, mul(a, perp_complement(inst, b))) != zero:
                    w = (c, a, b)
                    break
            if w:
                break
        if w:
            break
    results.append(law("ls/llallb", w is None, SCOPE_PROBE, w))

    # a, b both fixed by c makes a(1-b) fixed by c
    w = None
    for c in elems:
        los = fix.lower_set(c)
        for a in los:
            for b in los:
                ab = mul(a, perp_complement(inst, b))
                if mul(ab, c) != ab:
                    w = (a, b, c)
                    break
            if w:
                break
        if w:
            break
    results.append(law("ls/allbll", w is None, SCOPE_PROBE, w))

    # minimal upper bounds in the pool are fixator-supremums over the probes
    results.append(_minimal_bounds_law(inst, probes, sub, pool, fix, upper=True))
    results.append(_minimal_bounds_law(inst, probes, sub, pool, fix, upper=False))

    # r = q - sasaki(p,q) is the largest projection under q orthogonal to p
    w = None
    for p in sub:
        for q in sub:
            r = perp_meet(inst, p, q)
            if r is None:
                continue
            if not is_projection(inst, r) or mul(p, r) != zero or mul(r, q) != r:
                w = (p, q, r)
                break
            for s in pool:
                if mul(p, s) == zero and mul(s, q) == s and mul(s, r) != s:
                    w = (p, q, s)
                    break
            if w is None:
                # supremum identity against the probe carrier; r itself
                # qualifies and the pool may not contain it
                dominated = [
                    s for s in pool if mul(p, s) == zero and mul(s, q) == s
                ]
                if r not in dominated:
                    dominated.append(r)
                for x in elems:
                    lhs = mul(r, x) == r
                    rhs = all(mul(s, x) == s for s in dominated)
                    if lhs != rhs:
                        w = (p, q, x)
                        break
            if w:
                break
        if w:
            break
    results.append(law("ls/pperpwedgeq", w is None, SCOPE_PROBE, w))

    # Sasaki projection of p onto q equals (p v q_perp) ^ q computed from the
    # meet/join formulas
    w = None
    for p in sub:
        for q in sub:
            direct = sasaki(inst, p, q)
            j = join(inst, p, perp_complement(inst, q))
            via_lattice = meet(inst, j, q) if j is not None else None
            if direct != via_lattice:
                w = (p, q)
                break
        if w:
            break
    results.append(law("ls/sasaki", w is None, SCOPE_EXACT, w))

    # meet and join against brute-force infimum/supremum over the pool
    results.append(_meet_join_law(inst, sub, pool, elems, use_meet=True))
    results.append(_meet_join_law(inst, sub, pool, elems, use_meet=False))

    # orthomodularity on the pool: q under p leaves p - q a projection
    w = None
    for p in pool:
        for q in pool:
            if mul(q, p) == q and not is_projection(inst, inst.sub(p, q)):
                w = (p, q)
                break
        if w:
            break
    results.append(law("ls/orthomodular", w is None, SCOPE_PROBE, w))

    results.extend(_separation_laws(inst, probes, sub, fix, orth))

    # separativity of the fixator on the projection pool: two projections
    # are incompatible exactly when their meet vanishes, so the fixator must
    # coincide with reversed containment of incompatibility sets
    results.append(_separativity_law(inst, pool))

    # right supports agree for the fixator and orthogonality liftings
    w = None
    if inst.support_oracle is not None:
        for a in elems:
            p = inst.support_oracle(a)
            if mul(a, p) != a or not is_projection(inst, p):
                w = a
                break
            ann_a = orth.upper_mask(a) if a in orth.carrier.index else None
            if p in orth.carrier.index and ann_a is not None:
                if orth.upper_mask(p) != ann_a:
                    w = a
                    break
            else:
                if any(
                    (mul(a, x) == zero) != (mul(p, x) == zero) for x in elems
                ):
                    w = a
                    break
            # fixator side: a = ap and every b fixing a also fixes p
            for b in elems:
                if (mul(a, b) == a) != (mul(p, b) == p):
                    w = (a, b)
                    break
            if w:
                break
    results.append(law("ls/support-ll-eq-perp", w is None, SCOPE_PROBE, w))
    return results


def _separativity_law(inst, pool):
    if inst.support_oracle is None or not inst.is_unital:
        fix_pool = Relation(
            Carrier(pool),
            {(p, q) for p in pool for q in pool if inst.mul(p, q) == p},
        )
        return law("ls/separativity-P", is_separative(fix_pool), SCOPE_PROBE)
    mul, zero = inst.mul, inst.zero
    meets = {}

    def incompatible(p, q):
        key = (p, q)
        if key not in meets:
            meets[key] = meet(inst, p, q)
        return meets[key] == zero

    w = None
    for p in pool:
        for q in pool:
            if mul(p, q) == p:
                # below q: everything incompatible with q must be
                # incompatible with p
                bad = next(
                    (
                        x
                        for x in pool
                        if incompatible(q, x) and not incompatible(p, x)
                    ),
                    None,
                )
                if bad is not None:
                    w = (p, q, bad)
            else:
                # not below q: some projection compatible with p must be
                # incompatible with q; the canonical witness is the support
                # of (1-q)p
                x = support_projection(
                    inst, mul(perp_complement(inst, inst.star(q)), p)
                )
                ok = (
                    x is not None
                    and x != zero
                    and not incompatible(p, x)
                    and incompatible(q, x)
                )
                if not ok:
                    ok = any(
                        incompatible(q, y) and not incompatible(p, y)
                        for y in pool
                    )
                if not ok:
                    w = (p, q)
            if w:
                break
        if w:
            break
    return law("ls/separativity-P", w is None, SCOPE_PROBE, w)


def _minimal_bounds_law(inst, probes, sub, pool, fix, upper):
    mul = inst.mul
    elems = probes.elements
    w = None
    for i, q1 in enumerate(sub):
        for q2 in sub[i:]:
            if upper:
                bounds = [p for p in pool if mul(q1, p) == q1 and mul(q2, p) == q2]
                minimal = [
                    p
                    for p in bounds
                    if not any(r != p and mul(r, p) == r for r in bounds)
                ]
            else:
                bounds = [p for p in pool if mul(p, q1) == p and mul(p, q2) == p]
                minimal = [
                    p
                    for p in bounds
                    if not any(r != p and mul(p, r) == p for r in bounds)
                ]
            for p in minimal:
                for x in elems:
                    if upper:
                        lhs = mul(p, x) == p
                        rhs = mul(q1, x) == q1 and mul(q2, x) == q2
                    else:
                        lhs = mul(x, p) == x
                        rhs = mul(x, q1) == x and mul(x, q2) == x
                    if lhs != rhs:
                        w = (q1, q2, p, x)
                        break
                if w:
                    break
            if w:
                break
        if w:
            break
    law_id = "ls/minimal-upper-sup" if upper else "ls/maximal-lower-inf"
    return law(law_id, w is None, SCOPE_PROBE, w)


def _meet_join_law(inst, sub, pool, elems, use_meet):
    mul = inst.mul
    w = None
    for p in sub:
        for q in sub:
            out = meet(inst, p, q) if use_meet else join(inst, p, q)
            if out is None:
                continue
            if not is_projection(inst, out):
                w = (p, q)
                break
            if use_meet:
                ok = mul(out, p) == out and mul(out, q) == out
            else:
                ok = mul(p, out) == p and mul(q, out) == q
            if not ok:
                w = (p, q)
                break
            # brute-force extremum over the pool, plus the formula's own
            # output (the true bound is often outside the pool), must agree
            if use_meet:
                bounds = [r for r in pool if mul(r, p) == r and mul(r, q) == r]
                if out not in bounds:
                    bounds.append(out)
                best = [
                    r for r in bounds if all(mul(s, r) == s for s in bounds)
                ]
            else:
                bounds = [r for r in pool if mul(p, r) == p and mul(q, r) == q]
                if out not in bounds:
                    bounds.append(out)
                best = [
                    r for r in bounds if all(mul(r, s) == r for s in bounds)
                ]
            if best != [out] and (len(best) != 1 or best[0] != out):
                w = (p, q, best)
                break
            # set identity against the probe carrier
            for x in elems:
                if use_meet:
                    lhs = mul(x, out) == x
                    rhs = mul(x, p) == x and mul(x, q) == x
                else:
                    lhs = mul(out, x) == out
                    rhs = mul(p, x) == p and mul(q, x) == q
                if lhs != rhs:
                    w = (p, q, x)
                    break
            if w:
                break
        if w:
            break
    return law("ls/pwedgeq" if use_meet else "ls/pveeq", w is None, SCOPE_PROBE, w)


def _separation_laws(inst, probes, pool, fix, orth):
    """Constructive witnesses for the four separation properties."""
    mul, zero = inst.mul, inst.zero
    star = inst.star
    elems = probes.elements
    results = []

    def support(x):
        return support_projection(inst, x, probes)

    def mask_elems(mask):
        return [x for i, x in enumerate(elems) if mask >> i & 1]

    # If p is fixed by a but some b fixed by a escapes p, the support of
    # b(1-p) is a nonzero projection under a orthogonal to p.
    w = None
    for p in pool:
        for a in elems:
            if mul(p, a) != p:
                continue
            bad = next(
                (b for b in mask_elems(fix.lower_mask(a)) if mul(b, p) != b),
                None,
            )
            if bad is None:
                continue
            q = support(mul(bad, perp_complement(inst, p)))
            if (
                q is None
                or q == zero
                or mul(p, q) != zero
                or mul(q, p) != zero
                or mul(q, a) != q
            ):
                w = (p, a, bad)
                break
        if w:
            break
    results.append(law("ls/SOM", w is None, SCOPE_PROBE, w))

    # dual form: if a is fixed by p but some b fixing a escapes p, a nonzero
    # projection under p orthogonal to a exists
    w = None
    for p in pool:
        for a in elems:
            if mul(a, p) != a:
                continue
            bad = next(
                (b for b in mask_elems(fix.upper_mask(a)) if mul(p, b) != p),
                None,
            )
            if bad is None:
                continue
            q = support(mul(perp_complement(inst, star(bad)), p))
            if (
                q is None
                or q == zero
                or mul(q, p) != q
                or mul(a, q) != zero
            ):
                w = (p, a, bad)
                break
        if w:
            break
    results.append(law("ls/SOM*", w is None, SCOPE_PROBE, w))

    # if p is not fixed by a, some nonzero q under p is fixator-incompatible
    # with a: q = support((1 - a*) p)
    w = None
    for p in pool:
        if p == zero:
            continue
        for a in elems:
            if mul(p, a) == p:
                continue
            q = support(mul(perp_complement(inst, star(a)), p))
            if q is None or q == zero or mul(q, p) != q:
                w = (p, a)
                break
            clash = next(
                (
                    c
                    for c in mask_elems(fix.lower_mask(a))
                    if c != zero and mul(c, q) == c
                ),
                None,
            )
            if clash is not None:
                w = (p, a, clash)
                break
        if w:
            break
    results.append(law("ls/sep", w is None, SCOPE_PROBE, w))

    # annihilator version: if (a's right annihilator) does not contain p's,
    # some nonzero q under p is annihilator-incompatible with a
    w = None
    ann = {x: orth.upper_mask(x) for x in elems}
    full = (1 << len(elems)) - 1
    have_support = inst.support_oracle is not None and inst.is_unital

    def co_support(y):
        """1 - support(y): r is below y in the annihilator order exactly
        when r co_support(y) = 0."""
        return perp_complement(inst, inst.support_oracle(y))

    for p in pool:
        if p == zero:
            continue
        pa = ann.get(p)
        if pa is None:
            pa = _ann_mask(inst, p, elems)
        for a in elems:
            witness_mask = ann[a] & ~pa
            if witness_mask == 0:
                continue  # p sub-perp a holds
            b = mask_elems(witness_mask)[0]
            q = support(mul(star(b), p))
            if q is None or q == zero or mul(q, p) != q:
                w = (p, a, b)
                break
            if have_support:
                co_a, co_q = co_support(a), co_support(q)
                for r in elems:
                    if r != zero and mul(r, co_a) == zero and mul(r, co_q) == zero:
                        w = (p, a, r)
                        break
            else:
                qa = _ann_mask(inst, q, elems)
                for r in elems:
                    if r == zero or ann[r] == full:
                        continue
                    if ann[a] & ~ann[r] == 0 and qa & ~ann[r] == 0:
                        w = (p, a, r)
                        break
            if w:
                break
        if w:
            break
    results.append(law("ls/sep*", w is None, SCOPE_PROBE, w))
    return results


def _ann_mask(inst, q, elems):
    mask = 0
    for i, x in enumerate(elems):
        if inst.mul(q, x) == inst.zero:
            mask |= 1 << i
    return mask

from starringlab.cones import (
    NO,
    YES,
    ConeName,
    OrderName,
    bullet,
    member,
    perp_complement,
    relation,
    star_op,
)
from starringlab.scalars import gr
from starringlab.starring import get_instance, generate_probes


M2 = get_instance("m2")
PROBES = generate_probes(M2, 42, 24)


def mat(rows):
    return M2.element_from_json(
        [str(x) for row in rows for x in row]
    )


SYM = mat([[0, 1], [1, 0]])
E11 = mat([[1, 0], [0, 0]])


def test_trivial_memberships():
    assert member(M2, PROBES, ConeName.Ball, M2.unit).value == YES
    assert member(M2, PROBES, ConeName.Ball, M2.zero).value == YES
    assert member(M2, PROBES, ConeName.StarPositive, M2.zero).value == YES
    assert member(M2, PROBES, ConeName.SelfAdjoint, SYM).value == YES
    assert member(M2, PROBES, ConeName.SkewAdjoint, SYM).value == NO


def test_symmetry_matrix_memberships():
    # sym*sym = 1, so sym lies in the ball but in none of the positivity cones
    assert member(M2, PROBES, ConeName.Ball, SYM).value == YES
    assert member(M2, PROBES, ConeName.HalfF, SYM).value == NO
    assert member(M2, PROBES, ConeName.StarPositive, SYM).value == NO
    assert member(M2, PROBES, ConeName.LittleC, SYM).value == NO


def test_projection_memberships():
    assert member(M2, PROBES, ConeName.Projections, E11).value == YES
    assert member(M2, PROBES, ConeName.HalfF, E11).value == YES
    assert member(M2, PROBES, ConeName.StarPositive, E11).value == YES


def test_membership_is_cached_and_deterministic():
    first = member(M2, PROBES, ConeName.LittleC, E11)
    second = member(M2, PROBES, ConeName.LittleC, E11)
    assert first.value == second.value == YES


def test_perp_and_circle_operations():
    perp = perp_complement(M2, E11)
    assert M2.add(perp, E11) == M2.unit
    # e11 and its complement are compatible: e11 bullet perp = 1
    assert bullet(M2, E11, perp) == M2.unit
    # a * a = a + a - 2a^2; for a projection this is 2a - 2a = 0 off the unit
    assert star_op(M2, E11, E11) == M2.zero
    assert bullet(M2, M2.zero, E11) == E11


def test_fixator_relation_contains_expected_pairs():
    rel = relation(M2, PROBES, OrderName.Fixator)
    # e11 fixes itself (e11 = e11 * e11) and everything fixes nothing past it
    assert (E11, E11) in rel.rel
    assert (M2.zero, E11) in rel.rel
    assert (M2.unit, E11) not in rel.rel


def test_orthogonal_relation():
    rel = relation(M2, PROBES, OrderName.Orthogonal)
    assert (E11, M2.zero) in rel.rel
    assert (M2.zero, M2.unit) in rel.rel
    assert (E11, E11) not in rel.rel
    assert (M2.unit, E11) not in rel.rel


def test_relation_deterministic():
    r1 = relation(M2, PROBES, OrderName.BallOrder)
    r2 = relation(M2, PROBES, OrderName.BallOrder)
    assert r1.rel.pairs == r2.rel.pairs
    assert r1.provenance == r2.provenance

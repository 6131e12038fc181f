import pytest

from starringlab.relorder import (
    Carrier,
    CarrierMismatch,
    Relation,
    classify,
    compose,
    infimum,
    is_auxiliary,
    is_coinitial,
    is_cofinal,
    is_separative,
    supremum,
)


C = Carrier((0, 1, 2, 3))
LE = Relation(C, predicate=lambda a, b: a <= b)
EQ_MOD2 = Relation(C, predicate=lambda a, b: a % 2 == b % 2)
LT = Relation(C, predicate=lambda a, b: a < b)


def test_carrier_rejects_duplicates():
    with pytest.raises(ValueError):
        Carrier((1, 1))


def test_predicate_and_pairs_agree():
    again = Relation(C, pairs={(a, b) for a in C for b in C if a <= b})
    assert again == LE


def test_upper_and_lower_sets():
    assert LE.upper_set(2) == frozenset({2, 3})
    assert LE.lower_set(1) == frozenset({0, 1})
    assert LE.upper_mask(3) == 0b1000


def test_classify_total_order():
    cls = classify(LE)
    assert cls.reflexive and cls.transitive and cls.antisymmetric
    assert cls.partial_order and not cls.symmetric
    assert cls.has_interpolation and cls.has_riesz_interpolation


def test_classify_equivalence():
    cls = classify(EQ_MOD2)
    assert cls.equivalence and cls.symmetric and not cls.antisymmetric


def test_classify_strict_order_not_reflexive():
    cls = classify(LT)
    assert cls.transitive and not cls.reflexive and not cls.preorder
    # a < b always interpolates through nothing only when a dense point exists
    assert not cls.has_interpolation


def test_compose():
    assert compose(LT, LT).pairs == {(a, b) for a in C for b in C if b - a >= 2}


def test_compose_rejects_carrier_mismatch():
    other = Relation(Carrier((0, 1)), predicate=lambda a, b: a <= b)
    with pytest.raises(CarrierMismatch):
        compose(LE, other)


def test_auxiliarity():
    # strict order is auxiliary to the total order it refines
    assert is_auxiliary(LT, LE)
    assert not is_auxiliary(LE, LT)


def test_supremum_infimum():
    assert supremum(LE, (1, 2)).element == 2
    assert infimum(LE, (1, 2)).element == 1
    assert supremum(LE, (0, 3)).element == 3
    # evens and odds have disjoint upper sets, so no element matches
    assert supremum(EQ_MOD2, (0, 1)).element is None


def test_cofinal_coinitial():
    assert is_cofinal(LE, (3,))
    assert not is_cofinal(LE, (0,))
    assert is_coinitial(LE, (0,))
    assert not is_coinitial(LE, (1, 2))


def test_separativity_is_idempotent():
    from starringlab.relorder import incompatibility, lift_lower

    derived = lift_lower(incompatibility(LE), "subset")
    assert is_separative(derived)
    assert isinstance(is_separative(LE), bool)

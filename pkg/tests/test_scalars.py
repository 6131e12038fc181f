from fractions import Fraction

import pytest

from starringlab.scalars import GaussRational, format_gauss, gr, parse_gauss


def test_constructor_accepts_ints_fractions_strings():
    assert gr(1) == GaussRational(1)
    assert gr(Fraction(1, 2)) == gr(1, 0) / gr(2)
    assert gr("1/2") == gr(Fraction(1, 2))


def test_field_arithmetic():
    i = gr(0, 1)
    assert i * i == gr(-1)
    a = gr(Fraction(3, 4), Fraction(-1, 2))
    b = gr(2, 5)
    assert (a + b) - b == a
    assert a * b == b * a
    assert a * (b + i) == a * b + a * i


def test_conjugation_and_abs2():
    a = gr(3, -4)
    assert a.conj() == gr(3, 4)
    assert a.abs2() == Fraction(25)
    assert (a * a.conj()).re == Fraction(25)
    assert (a * a.conj()).im == 0


def test_inverse_and_division():
    a = gr(Fraction(2, 3), Fraction(-1, 7))
    assert a * a.inverse() == gr(1)
    assert (a / a) == gr(1)
    with pytest.raises(ZeroDivisionError):
        gr(0).inverse()


def test_predicates():
    assert gr(0).is_zero()
    assert not gr(0, 1).is_zero()
    assert gr(5).is_real()
    assert not gr(5, 1).is_real()


def test_hash_consistent_with_eq():
    assert hash(gr(1, 2)) == hash(gr(Fraction(2, 2), Fraction(4, 2)))
    assert len({gr(1, 2), gr(1, 2), gr(2, 1)}) == 2


def test_format_parse_roundtrip():
    samples = [gr(0), gr(1), gr(-1, 1), gr(Fraction(3, 7), Fraction(-5, 2))]
    for z in samples:
        assert parse_gauss(format_gauss(z)) == z


def test_scale():
    a = gr(1, -2)
    assert a.scale(3) == gr(3, -6)
    assert a.scale(1, 2) == gr(Fraction(1, 2), -1)

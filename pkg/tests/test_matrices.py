from fractions import Fraction

from starringlab.scalars import gr
from starringlab.matrices import (
    Matrix,
    four_squares,
    invert,
    kernel_basis,
    kernel_contained,
    positive_sqrt,
    psd_test,
    range_projection,
    rational_eigenvalues,
    sos_decomposition,
)


def m(rows):
    return Matrix([[gr(x) if not isinstance(x, tuple) else gr(*x) for x in row]
                   for row in rows])


def test_ring_operations():
    a = m([[1, 2], [3, 4]])
    b = m([[0, 1], [1, 0]])
    assert a + b == m([[1, 3], [4, 4]])
    assert a * b == m([[2, 1], [4, 3]])
    assert (a * b).star() == b.star() * a.star()
    assert a * Matrix.identity(2) == a
    assert a + Matrix.zero(2) == a


def test_star_is_conjugate_transpose():
    a = Matrix([[gr(1, 2), gr(0, -1)], [gr(3), gr(0)]])
    s = a.star()
    assert s.rows[0][1] == gr(3)
    assert s.rows[1][0] == gr(0, 1)
    assert s.rows[0][0] == gr(1, -2)


def test_psd_test_basic():
    assert psd_test(Matrix.identity(2))
    assert psd_test(Matrix.zero(3))
    assert psd_test(m([[2, 1], [1, 2]]))
    assert not psd_test(m([[1, 2], [2, 1]]))
    assert not psd_test(m([[-1, 0], [0, 1]]))


def test_sos_decomposition_sums_back():
    a = m([[2, 1], [1, 1]])
    terms = sos_decomposition(a)
    assert terms is not None
    acc = Matrix.zero(2)
    for t in terms:
        acc = acc + t.star() * t
    assert acc == a
    assert sos_decomposition(m([[-1, 0], [0, 0]])) is None


def test_four_squares():
    for n in (0, 1, 2, 7, 123, 4095):
        squares = four_squares(n)
        assert len(squares) == 4
        assert sum(x * x for x in squares) == n


def test_invert():
    a = m([[1, 1], [0, 1]])
    assert a * invert(a) == Matrix.identity(2)
    import pytest

    with pytest.raises(ValueError):
        invert(m([[1, 1], [1, 1]]))


def test_kernel_basis_and_containment():
    a = m([[1, 1], [1, 1]])
    basis = kernel_basis(a)
    assert len(basis) == 1
    assert kernel_contained(a, a)
    # ker(identity) = 0 is contained in any kernel, not conversely
    assert kernel_contained(Matrix.identity(2), a)
    assert not kernel_contained(a, Matrix.identity(2))


def test_range_projection_postconditions():
    a = m([[1, 1], [1, 1]])
    p = range_projection(a)
    assert p == p.star()
    assert p * p == p
    assert a * p == a
    assert kernel_contained(a, p) and kernel_contained(p, a)
    assert range_projection(Matrix.zero(2)) == Matrix.zero(2)
    assert range_projection(Matrix.identity(3)) == Matrix.identity(3)


def test_rational_eigenvalues():
    a = m([[2, 0], [0, 3]])
    assert sorted(rational_eigenvalues(a)) == [Fraction(2), Fraction(3)]


def test_positive_sqrt():
    a = m([[4, 0], [0, 9]])
    r = positive_sqrt(a)
    assert r is not None
    assert r * r == a
    assert psd_test(r)

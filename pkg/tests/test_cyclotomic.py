import pytest

from brauer_zk.cyclotomic import (
    IntPolynomial,
    build_fd,
    cyclotomic_poly,
    euler_phi,
    fd_family,
)

X = IntPolynomial.monomial(1)


def test_small_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == IntPolynomial([-1, 1])
    assert cyclotomic_poly(3) == IntPolynomial([1, 1, 1])
    assert cyclotomic_poly(9) == IntPolynomial([1, 0, 0, 1, 0, 0, 1])
    assert cyclotomic_poly(15).coeffs == (1, -1, 0, 1, -1, 1, 0, -1, 1)


def test_cyclotomic_product_is_y_to_the_s_minus_one():
    for s in range(1, 101):
        prod = IntPolynomial([1])
        for d in range(1, s + 1):
            if s % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == IntPolynomial.monomial(s) - IntPolynomial([1]), s


def test_euler_phi():
    assert [euler_phi(d) for d in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_build_fd_examples():
    assert build_fd(3, 3, 6, 1) == IntPolynomial.monomial(3) - IntPolynomial([-6])
    assert str(build_fd(3, 3, 6, 1)) == "X^3 + 6"
    assert str(build_fd(3, 3, 6, 3)) == "X^6 - 6X^3 + 36"


def test_build_fd_rejects_non_divisor():
    with pytest.raises(ValueError):
        build_fd(9, 3, 2, 5)
    with pytest.raises(ValueError):
        build_fd(3, 3, 0, 1)


@pytest.mark.parametrize("a", [1, 3, 5, 9, 15])
@pytest.mark.parametrize("b", [3, 5, 7])
def test_family_product_identity(a, b):
    target_x = IntPolynomial.monomial(a * b)
    for n in range(-50, 51):
        if n == 0:
            continue
        family = fd_family(a, b, n)
        assert family.product() == target_x + IntPolynomial([n**a]), n


def test_fd_are_monic_of_expected_degree():
    family = fd_family(15, 3, 7)
    for d, f in family.members.items():
        assert f.leading == 1
        assert f.degree == 3 * euler_phi(d)


def test_values_at_neg_z_multiply_to_difference():
    for a, b, n in [(3, 3, 6), (9, 3, 2), (5, 5, -14)]:
        family = fd_family(a, b, n)
        for z in range(-10, 11):
            prod = 1
            for v in family.values_at_neg_z(z):
                prod *= v
            assert prod == n**a - z ** (a * b)


def test_polynomial_arithmetic():
    p = IntPolynomial([1, 2, 3])
    q = IntPolynomial([0, 1])
    assert p + q == IntPolynomial([1, 3, 3])
    assert p - p == IntPolynomial([])
    assert (p * q).coeffs == (0, 1, 2, 3)
    quo, rem = (p * q + IntPolynomial([5])).divmod_monic(q)
    assert quo == p and rem == IntPolynomial([5])
    assert p(2) == 17
    assert IntPolynomial([]).degree == -1

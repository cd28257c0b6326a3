import random

import pytest

from ecsteg_shared.arith import Polynomial, Prime, RootFindingError, powmod_x_p, roots_in_fp
from ecsteg_shared.arith.poly import _split, poly_divmod, poly_gcd, poly_mul


def poly(coefficients, p=11):
    return Polynomial(coefficients, Prime(p))


def test_zero_polynomial_has_degree_minus_one(f11):
    zero = Polynomial([0, 0], f11)
    assert zero.is_zero()
    assert zero.degree == -1
    assert poly([1, 2, 0]).degree == 1


def test_mul_expands():
    assert poly_mul(poly([1, 1]), poly([2, 1])) == poly([2, 3, 1])


def test_divmod():
    quotient, remainder = poly_divmod(poly([2, 3, 1]), poly([1, 1]))
    assert quotient == poly([2, 1])
    assert remainder.is_zero()

    quotient, remainder = poly_divmod(poly([5, 0, 1]), poly([1, 1]))
    assert poly_mul(quotient, poly([1, 1])) + remainder == poly([5, 0, 1])
    assert remainder.degree < 1


def test_divmod_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(poly([1, 1]), poly([]))


def test_gcd():
    assert poly_gcd(poly([-1, 0, 1]), poly([-1, 1])) == poly([-1, 1])
    assert poly_gcd(poly([4, 6]), poly([])) == poly([4, 6]).monic()


def test_evaluation():
    assert poly([1, 0, 1])(3) == 10
    assert poly([])(5) == 0


def test_powmod_x_p_examples():
    assert powmod_x_p(poly([0, 1])).is_zero()
    assert powmod_x_p(poly([-1, 1])) == poly([1])


def test_powmod_x_p_matches_repeated_multiplication():
    f = poly([1, 0, 1])
    x = poly([0, 1])
    expected = poly([1])
    for _ in range(11):
        expected = poly_mul(expected, x) % f
    result = powmod_x_p(f)
    assert result == expected
    assert result.degree < 2


@pytest.mark.parametrize(
    "coefficients, expected",
    [
        ([-4, 0, 1], {2, 9}),
        ([-2, 0, 1], set()),
        ([1, -2, 1], {1}),
        ([3], set()),
        ([0, 1], {0}),
    ],
)
def test_roots_in_fp_examples(rng, coefficients, expected):
    roots = roots_in_fp(poly(coefficients), rng)
    assert {root.residue for root in roots} == expected


def test_roots_of_zero_polynomial_raise(rng):
    with pytest.raises(ValueError):
        roots_in_fp(poly([]), rng)


@pytest.mark.parametrize("p", [1019, 1033])
def test_roots_agree_with_exhaustive_search(p):
    generator = random.Random(p)
    modulus = Prime(p)
    for _ in range(250):
        degree = generator.randrange(1, 6)
        coefficients = [generator.randrange(p) for _ in range(degree)]
        coefficients.append(generator.randrange(1, p))
        f = Polynomial(coefficients, modulus)
        expected = {u for u in range(p) if f(u) == 0}
        assert {root.residue for root in roots_in_fp(f, generator)} == expected


def test_split_products_of_linear_factors(rng):
    modulus = Prime(1019)
    roots = [3, 77, 500, 1018]
    f = Polynomial([1], modulus)
    for root in roots:
        f = poly_mul(f, Polynomial([-root, 1], modulus))
    assert {root.residue for root in roots_in_fp(f, rng)} == set(roots)


def test_split_gives_up_after_the_budget(rng):
    # x^2 + 1 has no roots in F_11, so no random shift can split it.
    with pytest.raises(RootFindingError):
        _split(poly([1, 0, 1]), rng, 5)

"""Univariate polynomials over F_p with Cantor-Zassenhaus root extraction."""
import logging

from .field import FieldElement, ModulusMismatchError, Prime, random_element

logger = logging.getLogger(__name__)


class RootFindingError(RuntimeError):
    pass


def _strip(coefficients):
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


class Polynomial(object):
    """Coefficients are stored lowest degree first; the zero polynomial is empty."""

    __slots__ = ("_coefficients", "_modulus")

    def __init__(self, coefficients, modulus):
        if not isinstance(modulus, Prime):
            raise TypeError("modulus must be a Prime, got {!r}".format(modulus))
        residues = []
        for coefficient in coefficients:
            if isinstance(coefficient, FieldElement):
                if coefficient.modulus != modulus:
                    raise ModulusMismatchError(
                        "Coefficient from F_{} in a polynomial over F_{}".format(
                            coefficient.modulus.value, modulus.value
                        )
                    )
                coefficient = coefficient.residue
            residues.append(int(coefficient) % modulus.value)
        self._coefficients = _strip(residues)
        self._modulus = modulus

    @classmethod
    def _raw(cls, residues, modulus):
        poly = cls.__new__(cls)
        poly._coefficients = _strip(residues)
        poly._modulus = modulus
        return poly

    @classmethod
    def x(cls, modulus):
        return cls._raw((0, 1), modulus)

    @classmethod
    def constant(cls, value, modulus):
        return cls((value,), modulus)

    @property
    def modulus(self):
        return self._modulus

    @property
    def coefficients(self):
        return [FieldElement(c, self._modulus) for c in self._coefficients]

    @property
    def degree(self):
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    def is_zero(self):
        return not self._coefficients

    @property
    def leading(self):
        return self._coefficients[-1] if self._coefficients else 0

    def _check(self, other):
        if self._modulus != other._modulus:
            raise ModulusMismatchError(
                "Polynomials over F_{} and F_{}".format(
                    self._modulus.value, other._modulus.value
                )
            )

    def __add__(self, other):
        self._check(other)
        p = self._modulus.value
        size = max(len(self._coefficients), len(other._coefficients))
        a = self._coefficients + (0,) * (size - len(self._coefficients))
        b = other._coefficients + (0,) * (size - len(other._coefficients))
        return Polynomial._raw([(x + y) % p for x, y in zip(a, b)], self._modulus)

    def __neg__(self):
        p = self._modulus.value
        return Polynomial._raw([-c % p for c in self._coefficients], self._modulus)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __mod__(self, other):
        return poly_mod(self, other)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self._modulus == other._modulus
            and self._coefficients == other._coefficients
        )

    def __hash__(self):
        return hash((self._coefficients, self._modulus.value))

    def __call__(self, point):
        """Evaluate with Horner's rule."""
        p = self._modulus.value
        x = point.residue if isinstance(point, FieldElement) else int(point)
        result = 0
        for coefficient in reversed(self._coefficients):
            result = (result * x + coefficient) % p
        return FieldElement(result, self._modulus)

    def monic(self):
        if self.is_zero():
            return self
        p = self._modulus.value
        scale = pow(self.leading, -1, p)
        return Polynomial._raw(
            [c * scale % p for c in self._coefficients], self._modulus
        )

    def __repr__(self):
        terms = []
        for power, coefficient in enumerate(self._coefficients):
            if coefficient:
                terms.append("{}*x^{}".format(coefficient, power))
        return "Polynomial({} over F_{})".format(
            " + ".join(terms) or "0", self._modulus.value
        )


def poly_mul(f, g):
    f._check(g)
    if f.is_zero() or g.is_zero():
        return Polynomial._raw((), f.modulus)
    p = f.modulus.value
    product = [0] * (len(f._coefficients) + len(g._coefficients) - 1)
    for i, a in enumerate(f._coefficients):
        if a == 0:
            continue
        for j, b in enumerate(g._coefficients):
            product[i + j] += a * b
    return Polynomial._raw([c % p for c in product], f.modulus)


def poly_divmod(f, g):
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("Polynomial division by the zero polynomial")
    p = f.modulus.value
    remainder = list(f._coefficients)
    divisor = g._coefficients
    lead_inverse = pow(divisor[-1], -1, p)
    shift_count = len(remainder) - len(divisor) + 1
    quotient = [0] * max(shift_count, 0)
    for shift in range(shift_count - 1, -1, -1):
        factor = remainder[shift + len(divisor) - 1] * lead_inverse % p
        quotient[shift] = factor
        if factor:
            for index, coefficient in enumerate(divisor):
                remainder[shift + index] = (
                    remainder[shift + index] - factor * coefficient
                ) % p
    return (
        Polynomial._raw(quotient, f.modulus),
        Polynomial._raw(remainder[: len(divisor) - 1], f.modulus),
    )


def poly_mod(f, g):
    return poly_divmod(f, g)[1]


def poly_gcd(f, g):
    """Monic greatest common divisor; gcd(f, 0) is monic(f)."""
    f._check(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_mod(a, b)
    return a.monic()


def poly_powmod(base, exponent, f):
    result = Polynomial.constant(1, f.modulus) % f
    base = base % f
    while exponent > 0:
        if exponent & 1:
            result = poly_mul(result, base) % f
        base = poly_mul(base, base) % f
        exponent >>= 1
    return result


def powmod_x_p(f):
    """x^p mod f."""
    if f.degree < 1:
        raise ValueError("powmod_x_p needs a polynomial of degree at least 1")
    return poly_powmod(Polynomial.x(f.modulus), f.modulus.value, f)


def _split(g, rng, budget):
    """Roots of a monic g that is a product of distinct linear factors."""
    if g.degree == 0:
        return []
    if g.degree == 1:
        return [FieldElement(-g._coefficients[0], g.modulus)]

    modulus = g.modulus
    half = (modulus.value - 1) // 2
    one = Polynomial.constant(1, modulus)
    for _ in range(budget):
        shift = random_element(modulus, rng)
        candidate = Polynomial._raw((shift.residue, 1), modulus)
        h = poly_powmod(candidate, half, g) - one
        d = poly_gcd(g, h)
        if 0 < d.degree < g.degree:
            logger.debug(
                "Split degree %d polynomial into degrees %d and %d",
                g.degree,
                d.degree,
                g.degree - d.degree,
            )
            cofactor, _ = poly_divmod(g, d)
            return _split(d, rng, budget) + _split(cofactor.monic(), rng, budget)
    raise RootFindingError(
        "Equal-degree splitting did not separate a degree {} factor in {} rounds".format(
            g.degree, budget
        )
    )


def roots_in_fp(f, rng):
    """The set of distinct roots of f in F_p."""
    if f.is_zero():
        raise ValueError("The zero polynomial has every element as a root")
    if f.degree == 0:
        return set()

    f = f.monic()
    x = Polynomial.x(f.modulus)
    linear_part = poly_gcd(f, powmod_x_p(f) - x)
    if linear_part.degree <= 0:
        return set()
    return set(_split(linear_part, rng, 64 * f.degree))

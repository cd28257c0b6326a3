"""Prime field arithmetic.

Residues are plain Python integers kept in canonical form, so every
FieldElement compares and hashes by value.
"""
import logging
import secrets

logger = logging.getLogger(__name__)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MILLER_RABIN_ROUNDS = 64


class ModulusMismatchError(ValueError):
    pass


class NotInvertibleError(ZeroDivisionError):
    pass


def _miller_rabin_witness(n, d, r, base):
    x = pow(base, d, n)
    if x in (1, n - 1):
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n):
    if n < 2:
        return False
    for small in _SMALL_PRIMES:
        if n % small == 0:
            return n == small

    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1

    # The first twelve prime bases decide every n below 3.3e24.
    if n.bit_length() < 64:
        bases = _SMALL_PRIMES
    else:
        bases = [2 + secrets.randbelow(n - 3) for _ in range(_MILLER_RABIN_ROUNDS)]
    return not any(_miller_rabin_witness(n, d, r, base) for base in bases)


class Prime(object):
    """A validated prime modulus p >= 3."""

    __slots__ = ("_value",)

    def __init__(self, value):
        if isinstance(value, Prime):
            value = value.value
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError("Prime value must be an integer, got {!r}".format(value))
        if value < 3:
            raise ValueError("Prime modulus must be at least 3, got {}".format(value))
        if not is_probable_prime(value):
            raise ValueError("{} is not prime".format(value))
        self._value = value

    @property
    def value(self):
        """ @rtype: int """
        return self._value

    @property
    def bit_length(self):
        return self._value.bit_length()

    @property
    def byte_length(self):
        return (self.bit_length + 7) // 8

    def element(self, value):
        return FieldElement(value, self)

    @property
    def zero(self):
        return FieldElement(0, self)

    @property
    def one(self):
        return FieldElement(1, self)

    def __int__(self):
        return self._value

    def __eq__(self, other):
        if isinstance(other, Prime):
            return self._value == other._value
        return NotImplemented

    def __hash__(self):
        return hash(("Prime", self._value))

    def __repr__(self):
        return "Prime({})".format(self._value)


class FieldElement(object):
    __slots__ = ("_residue", "_modulus")

    def __init__(self, value, modulus):
        if not isinstance(modulus, Prime):
            raise TypeError("modulus must be a Prime, got {!r}".format(modulus))
        if isinstance(value, FieldElement):
            _check_modulus(value, modulus)
            value = value.residue
        self._residue = int(value) % modulus.value
        self._modulus = modulus

    @property
    def residue(self):
        return self._residue

    @property
    def modulus(self):
        return self._modulus

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other._modulus != self._modulus:
                raise ModulusMismatchError(
                    "Cannot combine elements of F_{} and F_{}".format(
                        self._modulus.value, other._modulus.value
                    )
                )
            return other._residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def _new(self, residue):
        return FieldElement(residue, self._modulus)

    def __add__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(self._residue + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(self._residue - value)

    def __rsub__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(value - self._residue)

    def __mul__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(self._residue * value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self * inv(self._new(value))

    def __rtruediv__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(value) * inv(self)

    def __neg__(self):
        return self._new(-self._residue)

    def __pow__(self, exponent):
        return power(self, exponent)

    def __bool__(self):
        return self._residue != 0

    def __int__(self):
        return self._residue

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self._modulus == other._modulus and self._residue == other._residue
        if isinstance(other, int) and not isinstance(other, bool):
            return self._residue == other % self._modulus.value
        return NotImplemented

    def __hash__(self):
        return hash((self._residue, self._modulus.value))

    def __lt__(self, other):
        return self._residue < self._coerce(other) % self._modulus.value

    def __repr__(self):
        return "FieldElement({}, {})".format(self._residue, self._modulus.value)

    def to_bytes(self):
        return self._residue.to_bytes(self._modulus.byte_length, "big")

    @classmethod
    def from_bytes(cls, data, modulus):
        if len(data) != modulus.byte_length:
            raise ValueError(
                "Expected {} bytes for an element of F_{}, got {}".format(
                    modulus.byte_length, modulus.value, len(data)
                )
            )
        value = int.from_bytes(data, "big")
        if value >= modulus.value:
            raise ValueError("Encoded value is not a canonical residue")
        return cls(value, modulus)


def _check_modulus(a, b):
    modulus_a = a.modulus if isinstance(a, FieldElement) else a
    modulus_b = b.modulus if isinstance(b, FieldElement) else b
    if modulus_a != modulus_b:
        raise ModulusMismatchError(
            "Cannot combine elements of F_{} and F_{}".format(
                modulus_a.value, modulus_b.value
            )
        )


def add(a, b):
    _check_modulus(a, b)
    return a + b


def sub(a, b):
    _check_modulus(a, b)
    return a - b


def mul(a, b):
    _check_modulus(a, b)
    return a * b


def neg(a):
    return -a


def inv(a):
    if a.residue == 0:
        raise NotInvertibleError("0 has no inverse in F_{}".format(a.modulus.value))
    return FieldElement(pow(a.residue, -1, a.modulus.value), a.modulus)


def power(a, exponent):
    if exponent < 0:
        return power(inv(a), -exponent)
    # Python's pow gives 0**0 == 1, which is the convention we want.
    return FieldElement(pow(a.residue, exponent, a.modulus.value), a.modulus)


def legendre(a):
    p = a.modulus.value
    symbol = pow(a.residue, (p - 1) // 2, p)
    return -1 if symbol == p - 1 else symbol


def is_square(a):
    return legendre(a) >= 0


def _tonelli_shanks(a, p):
    q, s = p - 1, 0
    while q % 2 == 0:
        s += 1
        q //= 2

    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)

    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        t2i, i = t, 0
        for i in range(1, m):
            t2i = t2i * t2i % p
            if t2i == 1:
                break
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def sqrt(a):
    """Square root of a, or None when a is a non-residue."""
    p = a.modulus.value
    residue = a.residue
    if residue == 0:
        return FieldElement(0, a.modulus)
    if p % 4 == 3:
        root = pow(residue, (p + 1) // 4, p)
    elif legendre(a) != 1:
        return None
    else:
        root = _tonelli_shanks(residue, p)
    if root * root % p != residue:
        return None
    return FieldElement(root, a.modulus)


def cube_root(a):
    p = a.modulus.value
    if p % 3 != 2:
        raise ValueError(
            "Cube roots are only unique when p = 2 mod 3, got p mod 3 = {}".format(
                p % 3
            )
        )
    return FieldElement(pow(a.residue, (2 * p - 1) // 3, p), a.modulus)


def random_element(modulus, rng):
    """Uniform element of F_p by rejection sampling k-bit draws."""
    p = modulus.value
    bits = modulus.bit_length
    while True:
        candidate = rng.getrandbits(bits)
        if candidate < p:
            return FieldElement(candidate, modulus)


def is_odd(a):
    return a.residue & 1

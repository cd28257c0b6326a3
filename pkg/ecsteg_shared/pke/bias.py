"""Lifting field elements to (k+t)-bit strings whose distribution is close to uniform."""
import math

from bitarray import bitarray
from bitarray.util import ba2int, int2ba

from ecsteg_shared.arith.field import FieldElement

MINIMUM_REDUNDANCY = 8
REDUNDANCY_POLICIES = ("k/8", "k/4")


class BiasParams(object):
    __slots__ = ("_k", "_t")

    def __init__(self, k, t):
        if k < 2:
            raise ValueError("Field bit length must be at least 2, got {}".format(k))
        if t < 1:
            raise ValueError("Redundancy must be at least one bit, got {}".format(t))
        self._k = k
        self._t = t

    @classmethod
    def from_policy(cls, k, policy="k/8"):
        if policy not in REDUNDANCY_POLICIES:
            raise ValueError(
                "Unknown redundancy policy {!r}, choose from: {}".format(
                    policy, ", ".join(REDUNDANCY_POLICIES)
                )
            )
        divisor = 8 if policy == "k/8" else 4
        return cls(k, max(MINIMUM_REDUNDANCY, math.ceil(k / divisor)))

    @classmethod
    def for_curve(cls, curve, policy="k/8"):
        return cls.from_policy(curve.p.bit_length, policy)

    @property
    def k(self):
        return self._k

    @property
    def t(self):
        return self._t

    @property
    def width(self):
        """k + t."""
        return self._k + self._t

    def __eq__(self, other):
        if not isinstance(other, BiasParams):
            return NotImplemented
        return (self._k, self._t) == (other._k, other._t)

    def __hash__(self):
        return hash((self._k, self._t))

    def __repr__(self):
        return "BiasParams(k={}, t={})".format(self._k, self._t)


def lift_count(u, p, width):
    """Number of r with u + r*p < 2**width."""
    return ((1 << width) - 1 - u) // p + 1


def bias_expand(u, params, rng):
    p = u.modulus.value
    if p.bit_length() != params.k:
        raise ValueError(
            "{}-bit modulus used with k = {}".format(p.bit_length(), params.k)
        )
    r = rng.randrange(lift_count(u.residue, p, params.width))
    return int2ba(u.residue + r * p, length=params.width, endian="big")


def bias_reduce(bits, params, modulus):
    if len(bits) != params.width:
        raise ValueError(
            "Expected {} bits, got {}".format(params.width, len(bits))
        )
    if not isinstance(bits, bitarray):
        bits = bitarray(bits, endian="big")
    return FieldElement(ba2int(bits), modulus)

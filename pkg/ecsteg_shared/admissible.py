"""Tensor-exponent encodings F(u_1, ..., u_s) = f(u_1) + ... + f(u_s) and their sampler."""
import logging
from fractions import Fraction

import numpy as np

from ecsteg_shared.arith.field import random_element
from ecsteg_shared.encodings import SLOT_COUNT, Encoding, EncodingKind

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITERATIONS = 1000
_EXHAUSTIVE_LIMIT = 1 << 11


class SamplerExhaustedError(RuntimeError):
    pass


class SamplerStats(object):
    """Iteration counts of every sample_preimage call it is passed to."""

    def __init__(self):
        self.iterations = []

    def record(self, count):
        self.iterations.append(count)

    @property
    def calls(self):
        return len(self.iterations)

    @property
    def mean(self):
        return float(np.mean(self.iterations)) if self.iterations else 0.0

    def tail_fraction(self, threshold=40):
        if not self.iterations:
            return 0.0
        return float(np.mean(np.asarray(self.iterations) > threshold))


class TensorEncoding(object):
    def __init__(self, base, s=2):
        if isinstance(base, EncodingKind):
            raise TypeError("Pass a constructed encoding, e.g. kind.create(curve)")
        if not isinstance(base, Encoding):
            raise TypeError("base must be an Encoding, got {!r}".format(base))
        if s < 2:
            raise ValueError("Tensor exponent must be at least 2, got {}".format(s))
        self._base = base
        self._s = s

    @classmethod
    def create(cls, curve, kind, s=2):
        if not isinstance(kind, EncodingKind):
            kind = EncodingKind.from_name(kind)
        return cls(kind.create(curve), s)

    @property
    def base(self):
        return self._base

    @property
    def curve(self):
        return self._base.curve

    @property
    def s(self):
        return self._s

    @property
    def kind(self):
        return EncodingKind(self._base.name)

    def forward(self, coords):
        coords = list(coords)
        if len(coords) != self._s:
            raise ValueError(
                "Expected {} coordinates, got {}".format(self._s, len(coords))
            )
        total = self.curve.infinity
        for u in coords:
            total = total + self._base.forward(u)
        return total

    def sample_preimage(
        self, point, rng, max_iterations=DEFAULT_MAX_ITERATIONS, stats=None
    ):
        """A uniform preimage of point, inverse-derived coordinate first.

        Each round draws s-1 free coordinates, inverts what is left and picks
        one of the four slots uniformly; an empty slot restarts the round.
        """
        modulus = self.curve.p
        for iteration in range(1, max_iterations + 1):
            free = [random_element(modulus, rng) for _ in range(self._s - 1)]
            remainder = point
            for v in free:
                remainder = remainder - self._base.forward(v)
            slots = self._base.inverse(remainder, rng)
            u = slots[rng.randrange(SLOT_COUNT)]
            if u is None:
                continue

            coords = [u] + free
            if self.forward(coords) != point:
                raise AssertionError(
                    "Sampled preimage does not map back to the requested point"
                )
            if stats is not None:
                stats.record(iteration)
            logger.debug("Sampled preimage after %d iterations", iteration)
            return coords
        raise SamplerExhaustedError(
            "No preimage of {} found in {} iterations".format(point, max_iterations)
        )

    def __repr__(self):
        return "TensorEncoding({!r}, s={})".format(self._base, self._s)


def tensor_forward(coords, tensor):
    return tensor.forward(coords)


def tensor_sample_preimage(point, tensor, rng, **kwargs):
    return tensor.sample_preimage(point, rng, **kwargs)


def cyclic_group_index(curve):
    """Map every point of a prime-order toy curve to its discrete log base g."""
    if curve.p.value > _EXHAUSTIVE_LIMIT:
        raise ValueError(
            "Exhaustive enumeration refused for a {}-bit field".format(
                curve.p.bit_length
            )
        )
    if curve.g is None or curve.q is None:
        raise ValueError("{} has no registered generator".format(curve.name))
    index = {}
    point = curve.infinity
    for exponent in range(curve.q.value):
        index[point] = exponent
        point = point + curve.g
    return index


def image_counts(encoding, group_index):
    """N_1 as an array over discrete logs."""
    counts = np.zeros(len(group_index), dtype=np.int64)
    modulus = encoding.curve.p
    for u in range(modulus.value):
        counts[group_index[encoding.forward(modulus.element(u))]] += 1
    return counts


def tensor_counts(tensor):
    """N_s as an array over discrete logs, by cyclic convolution of N_1."""
    group_index = cyclic_group_index(tensor.curve)
    single = image_counts(tensor.base, group_index)
    counts = single.copy()
    for _ in range(tensor.s - 1):
        convolved = np.zeros_like(counts)
        for shift in np.nonzero(single)[0]:
            convolved += single[shift] * np.roll(counts, shift)
        counts = convolved
    return counts


def regularity_distance(tensor):
    """Exact total variation distance of F's pushforward from uniform on E."""
    counts = tensor_counts(tensor)
    total = tensor.curve.p.value ** tensor.s
    group_order = len(counts)
    deviation = sum(abs(Fraction(int(c), total) - Fraction(1, group_order)) for c in counts)
    return deviation / 2

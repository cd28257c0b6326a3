"""Exhaustive reference computations for toy curves.

These enumerate the whole field, so they refuse anything beyond 11-bit
primes. They certify the encodings, the sampler and the tensor regularity.
"""
import collections
import logging
from fractions import Fraction

from scipy.stats import chisquare

from ecsteg_shared.admissible import SamplerStats
from ecsteg_shared.curves.curve import curve_points
from ecsteg_shared.encodings import SLOT_COUNT
from ecsteg_shared.pke.bias import lift_count

logger = logging.getLogger(__name__)

TOY_LIMIT = 1 << 11


def _require_toy(curve):
    if curve.p.value > TOY_LIMIT:
        raise ValueError(
            "Oracles enumerate F_p and refuse {} ({}-bit field)".format(
                curve.name, curve.p.bit_length
            )
        )


class PreimageTable(object):
    """Every curve point mapped to the sorted list of its preimages."""

    def __init__(self, encoding):
        curve = encoding.curve
        _require_toy(curve)
        self._encoding = encoding
        self._table = {point: [] for point in curve_points(curve)}
        for u in range(curve.p.value):
            element = curve.p.element(u)
            self._table[encoding.forward(element)].append(element)

    @property
    def encoding(self):
        return self._encoding

    def __getitem__(self, point):
        return self._table.get(point, [])

    def __iter__(self):
        return iter(self._table)

    def __len__(self):
        return len(self._table)

    def items(self):
        return self._table.items()

    def image(self):
        return {point: len(us) for point, us in self._table.items() if us}

    def max_preimages(self):
        return max(len(us) for us in self._table.values())

    def total(self):
        return sum(len(us) for us in self._table.values())


def enumerate_preimages(encoding):
    return PreimageTable(encoding)


def inverse_mismatches(encoding, table=None, rng=None):
    """Finite points whose inverse slot set differs from the exhaustive preimages."""
    table = table or enumerate_preimages(encoding)
    mismatches = []
    for point, expected in table.items():
        if point.is_infinity:
            continue
        found = sorted(encoding.inverse(point, rng).values())
        if found != expected:
            mismatches.append((point, expected, found))
    return mismatches


def n2_histogram(tensor, table=None):
    """N_2(D) for every point D, by adding image points pairwise."""
    if tensor.s != 2:
        raise ValueError("n2_histogram covers the tensor square only")
    table = table or enumerate_preimages(tensor.base)
    image = table.image()
    histogram = collections.Counter({point: 0 for point in table})
    for first, first_count in image.items():
        for second, second_count in image.items():
            histogram[first + second] += first_count * second_count
    return dict(histogram)


def histogram_distance(histogram, total):
    """Total variation distance of a point histogram from uniform."""
    size = len(histogram)
    deviation = sum(
        abs(Fraction(count, total) - Fraction(1, size)) for count in histogram.values()
    )
    return deviation / 2


def tensor_preimages(point, tensor, table=None):
    """All pairs (u, v) with f(u) + f(v) = point that the sampler can return."""
    if tensor.s != 2:
        raise ValueError("tensor_preimages covers the tensor square only")
    table = table or enumerate_preimages(tensor.base)
    curve = tensor.curve
    pairs = []
    for v in range(curve.p.value):
        v = curve.p.element(v)
        remainder = point - tensor.base.forward(v)
        # Inverses never return the degenerate inputs that map to infinity.
        if remainder.is_infinity:
            continue
        for u in table[remainder]:
            pairs.append((u, v))
    return pairs


def biased_sample_preimage(point, tensor, rng, max_iterations=1000):
    """Negative control: take the first non-empty slot instead of a uniform one."""
    modulus = tensor.curve.p
    for _ in range(max_iterations):
        v = modulus.element(rng.randrange(modulus.value))
        slots = tensor.base.inverse(point - tensor.base.forward(v), rng)
        values = slots.values()
        if values:
            return [values[0], v]
    raise RuntimeError("No preimage found")


def sampler_chisquare(point, tensor, samples, rng, sampler=None, table=None):
    """Goodness of fit of sampled preimages against uniform on the preimage set.

    Returns None when the preimage set is too small for the test to mean anything.
    """
    pairs = tensor_preimages(point, tensor, table)
    if len(pairs) < 2:
        logger.info("Skipping chi-square at %s: %d preimage pairs", point, len(pairs))
        return None
    if sampler is None:
        sampler = tensor.sample_preimage
    position = {(u.residue, v.residue): i for i, (u, v) in enumerate(pairs)}
    observed = [0] * len(pairs)
    for _ in range(samples):
        u, v = sampler(point, rng)
        observed[position[(u.residue, v.residue)]] += 1
    return float(chisquare(observed).pvalue)


def sampler_iteration_profile(tensor, calls, rng, threshold=40):
    """Mean sampler iterations and the fraction of calls above threshold."""
    curve = tensor.curve
    stats = SamplerStats()
    for _ in range(calls):
        point = rng.randrange(curve.q.value) * curve.g
        tensor.sample_preimage(point, rng, stats=stats)
    return stats.mean, stats.tail_fraction(threshold)


def bias_distance(p, params):
    """Exact distance of bias_expand's output from uniform, for u uniform in F_p."""
    width = params.width
    size = 1 << width
    deviation = Fraction(0)
    for value in range(size):
        residue = value % p
        probability = Fraction(1, p * lift_count(residue, p, width))
        deviation += abs(probability - Fraction(1, size))
    return deviation / 2


def slot_count_histogram(encoding, table=None):
    """How many points have 0, 1, ... SLOT_COUNT preimages."""
    table = table or enumerate_preimages(encoding)
    histogram = [0] * (SLOT_COUNT + 1)
    for point, us in table.items():
        if not point.is_infinity:
            histogram[len(us)] += 1
    return histogram

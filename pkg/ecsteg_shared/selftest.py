"""Oracle checks on the toy curves, run by the selftest command."""
import logging

from ecsteg_shared import oracle
from ecsteg_shared.admissible import TensorEncoding, regularity_distance
from ecsteg_shared.arith.field import Prime
from ecsteg_shared.arith.poly import Polynomial, roots_in_fp
from ecsteg_shared.curves.registry import registry_get
from ecsteg_shared.encodings import EncodingKind
from ecsteg_shared.pke.bias import BiasParams
from ecsteg_shared.randtest import monobit

logger = logging.getLogger(__name__)

TOY_INSTANCES = (
    ("toy-1019", EncodingKind.ICART),
    ("toy-1019", EncodingKind.SWU),
    ("toy-1039", EncodingKind.SW),
)
REGULARITY_THRESHOLD = 0.05
SAMPLER_P_VALUE_FLOOR = 1e-3
NEGATIVE_CONTROL_CEILING = 1e-6


class CheckResult(object):
    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def __repr__(self):
        return "CheckResult({}, {})".format(self.name, "PASS" if self.passed else "FAIL")


def _instance_checks(curve_name, kind, rng, samples):
    curve = registry_get(curve_name)
    tensor = TensorEncoding.create(curve, kind)
    table = oracle.enumerate_preimages(tensor.base)
    label = "{}/{}".format(curve_name, kind.value)

    mismatches = oracle.inverse_mismatches(tensor.base, table, rng)
    yield CheckResult(
        "{} inverse completeness".format(label),
        not mismatches,
        "{} mismatching points".format(len(mismatches)),
    )

    histogram = oracle.n2_histogram(tensor, table)
    uncovered = sum(1 for count in histogram.values() if count == 0)
    yield CheckResult(
        "{} tensor-square surjectivity".format(label),
        uncovered == 0,
        "{} points without preimages".format(uncovered),
    )

    distance = regularity_distance(tensor)
    yield CheckResult(
        "{} regularity distance".format(label),
        distance < REGULARITY_THRESHOLD,
        "{:.5f}".format(float(distance)),
    )

    point = rng.randrange(1, curve.q.value) * curve.g
    p_value = oracle.sampler_chisquare(point, tensor, samples, rng, table=table)
    yield CheckResult(
        "{} sampler uniformity".format(label),
        p_value is None or p_value > SAMPLER_P_VALUE_FLOOR,
        "skipped" if p_value is None else "p = {:.4g}".format(p_value),
    )

    def biased(target, generator):
        return oracle.biased_sample_preimage(target, tensor, generator)

    control = oracle.sampler_chisquare(
        point, tensor, samples, rng, sampler=biased, table=table
    )
    yield CheckResult(
        "{} biased sampler is detected".format(label),
        control is None or control < NEGATIVE_CONTROL_CEILING,
        "skipped" if control is None else "p = {:.4g}".format(control),
    )


def _root_finder_check(rng, trials=100):
    modulus = Prime(1019)
    failures = 0
    for _ in range(trials):
        degree = rng.randrange(1, 5)
        coefficients = [rng.randrange(1019) for _ in range(degree)] + [
            rng.randrange(1, 1019)
        ]
        poly = Polynomial(coefficients, modulus)
        expected = {modulus.element(u) for u in range(1019) if poly(u).residue == 0}
        if roots_in_fp(poly, rng) != expected:
            failures += 1
    return CheckResult(
        "root finder agrees with exhaustive search",
        failures == 0,
        "{}/{} mismatches".format(failures, trials),
    )


def run_selftest(rng, samples=20000):
    for curve_name, kind in TOY_INSTANCES:
        for result in _instance_checks(curve_name, kind, rng, samples):
            logger.debug("%r: %s", result, result.detail)
            yield result

    distance = oracle.bias_distance(11, BiasParams(4, 2))
    yield CheckResult(
        "bias elimination bound at p = 11, t = 2",
        distance <= 0.25,
        "{:.5f}".format(float(distance)),
    )

    yield _root_finder_check(rng)

    report = monobit("1011010101", enforce_minimum=False)
    yield CheckResult(
        "frequency test reference value",
        abs(report.p_value - 0.527089) < 1e-3,
        "p = {:.6f}".format(report.p_value),
    )

import random

import pytest
from bitarray import bitarray

from ecsteg_shared.randtest import (
    ALL_TESTS,
    BitSequence,
    InsufficientDataError,
    approximate_entropy,
    block_frequency,
    cumulative_sums,
    longest_run,
    monobit,
    proportion_check,
    run_all,
    runs,
    serial,
)

LONGEST_RUN_EXAMPLE = (
    "11001100000101010110110001001100111000000000001001001101010100010001"
    "001111010110100000001101011111001100111001101101100010110010"
)


def test_monobit_reference_value():
    report = monobit("1011010101", enforce_minimum=False)
    assert report.p_value == pytest.approx(0.527089, abs=1e-3)
    assert report.passed


def test_block_frequency_reference_value():
    report = block_frequency("0110011010", block_len=3, enforce_minimum=False)
    assert report.p_value == pytest.approx(0.801252, abs=1e-3)


def test_runs_reference_value():
    report = runs("1001101011", enforce_minimum=False)
    assert report.p_value == pytest.approx(0.147232, abs=1e-3)


def test_longest_run_reference_value():
    report = longest_run(LONGEST_RUN_EXAMPLE)
    assert report.extras["counts"] == [4, 9, 3, 0]
    assert report.p_value == pytest.approx(0.180609, abs=1e-3)


def test_cumulative_sums_reference_value():
    report = cumulative_sums("1011010111", enforce_minimum=False)
    assert report.extras["z_forward"] == 4
    assert report.p_values[0] == pytest.approx(0.4116588, abs=1e-3)
    assert report.p_values[1] == pytest.approx(0.4116588, abs=1e-3)


def test_serial_reference_values():
    report = serial("0011011101", m=3, enforce_minimum=False)
    assert report.p_values[0] == pytest.approx(0.808792, abs=1e-3)
    assert report.p_values[1] == pytest.approx(0.670320, abs=1e-3)
    assert [name for name, _ in report.rows()] == ["Serial[1]", "Serial[2]"]


def test_approximate_entropy_reference_value():
    report = approximate_entropy("0100110101", m=3, enforce_minimum=False)
    assert report.p_value == pytest.approx(0.261961, abs=1e-3)


def test_all_zero_sequence_fails():
    zeros = BitSequence(bytes(125))
    assert monobit(zeros).p_value < 1e-6
    assert not monobit(zeros).passed
    assert not runs(zeros).passed


def test_alternating_sequence_fails_runs_but_passes_monobit():
    alternating = BitSequence(b"\x55" * 125)
    assert monobit(alternating).passed
    assert monobit(alternating).p_value == pytest.approx(1.0)
    assert not runs(alternating).passed


@pytest.mark.parametrize("test", ALL_TESTS)
def test_short_sequences_are_refused(test):
    with pytest.raises(InsufficientDataError):
        test(BitSequence("10" * 20))


def test_empty_sequence_is_refused_even_without_minimum():
    with pytest.raises(InsufficientDataError):
        monobit(BitSequence(bitarray()), enforce_minimum=False)


def test_serial_parameter_checks():
    with pytest.raises(ValueError):
        serial("0011011101", m=1, enforce_minimum=False)
    with pytest.raises(InsufficientDataError):
        serial(BitSequence(bytes(32)), m=8)


def test_run_all_on_random_bits():
    generator = random.Random(12)
    data = bytes(generator.getrandbits(8) for _ in range(2500))
    reports = run_all(data)
    assert [report.name for report in reports] == [
        "Frequency",
        "BlockFrequency",
        "Runs",
        "LongestRun",
        "CumulativeSums",
        "Serial",
        "ApproximateEntropy",
    ]
    assert all(1e-4 < p <= 1.0 for report in reports for p in report.p_values)


def test_run_all_fails_every_test_on_constant_bits():
    reports = run_all(bytes(2500))
    assert not any(report.passed for report in reports)


def test_bit_sequence_inputs():
    assert BitSequence(b"\x80").as_array().tolist() == [1, 0, 0, 0, 0, 0, 0, 0]
    assert len(BitSequence("101")) == 3
    assert BitSequence(BitSequence("11")).n == 2
    streams = BitSequence("1100110011").split(3)
    assert [stream.bits.to01() for stream in streams] == ["110", "011", "001"]
    with pytest.raises(InsufficientDataError):
        BitSequence("11").split(3)


def _biased_bits(n, one_probability, seed):
    generator = random.Random(seed)
    return bitarray([generator.random() < one_probability for _ in range(n)])


def test_monobit_detects_a_five_percent_bias():
    report = monobit(_biased_bits(100000, 0.55, 5))
    assert report.p_value < 0.01
    assert not report.passed


def test_monobit_accepts_unbiased_bits():
    assert monobit(_biased_bits(100000, 0.5, 5)).p_value > 1e-4


def test_good_generator_passes_the_proportion_check():
    generator = random.Random(800)
    streams = [
        run_all(bytes(generator.getrandbits(8) for _ in range(512)))
        for _ in range(100)
    ]
    for column in zip(*streams):
        for statistic in range(len(column[0].p_values)):
            reports = [
                type(report)(report.name, report.p_values[statistic], report.alpha)
                for report in column
            ]
            assert proportion_check(reports), column[0].name

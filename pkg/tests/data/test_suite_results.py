import random
from unittest.mock import Mock

import pandas as pd
import pytest

from ecsteg_data import SuiteResults, run_suite
from ecsteg_shared.randtest import TestReport


def _stream(p_frequency, p_cusum=(0.5, 0.5)):
    return [
        TestReport("Frequency", p_frequency),
        TestReport("CumulativeSums", p_cusum),
    ]


@pytest.fixture()
def passing_results():
    generator = random.Random(1)
    return SuiteResults(
        [
            _stream(generator.random() * 0.98 + 0.02, (generator.random() * 0.98 + 0.02, 0.6))
            for _ in range(100)
        ]
    )


def test_data_layout(passing_results):
    data = passing_results.data
    assert list(data.columns) == ["stream", "test", "p_value"]
    assert len(data) == 300
    assert passing_results.streams == 100
    assert passing_results.tests() == [
        "Frequency",
        "CumulativeSums[1]",
        "CumulativeSums[2]",
    ]


def test_summary_of_passing_streams(passing_results):
    summary = passing_results.summary()
    assert list(summary.index) == passing_results.tests()
    assert (summary["result"] == "PASS").all()
    assert summary.loc["Frequency", "passing"] == 100
    assert summary.loc["Frequency", "threshold"] == pytest.approx(0.96015, abs=1e-5)
    assert passing_results.all_passed()


def test_summary_flags_failing_tests():
    streams = [_stream(0.5) for _ in range(95)] + [_stream(0.001) for _ in range(5)]
    results = SuiteResults(streams)
    summary = results.summary()
    assert summary.loc["Frequency", "result"] == "FAIL"
    assert summary.loc["Frequency", "proportion"] == pytest.approx(0.95)
    assert summary.loc["CumulativeSums[1]", "result"] == "PASS"
    assert not results.all_passed()


def test_report_lines():
    streams = [_stream(0.5) for _ in range(95)] + [_stream(0.001) for _ in range(5)]
    lines = SuiteResults(streams).report_lines()
    name, proportion, uniformity, verdict = lines[0].split("\t")
    assert (name, proportion, verdict) == ("Frequency", "95/100", "FAIL")
    assert uniformity.startswith("uniformity=")
    assert lines[1].startswith("CumulativeSums[1]\t100/100\tuniformity=")
    assert lines[1].endswith("\tPASS")
    assert lines[-1] == "SUMMARY\t2/3\tFAIL"


def test_uniformity_of_p_values():
    assert SuiteResults.uniformity_p_value([i / 100 + 0.005 for i in range(100)]) == 1.0
    assert SuiteResults.uniformity_p_value([0.05] * 100) < 1e-6


@pytest.mark.parametrize(
    "invalid_input, expected_error",
    [
        ([1, 2], TypeError),
        (pd.DataFrame({"stream": [0], "p_value": [0.5]}), ValueError),
        (pd.DataFrame(columns=["stream", "test", "p_value"]), ValueError),
    ],
)
def test_set_data_validation(passing_results, invalid_input, expected_error):
    with pytest.raises(expected_error):
        passing_results._set_data(invalid_input)


def test_run_suite_on_constant_bits_fails():
    progress = Mock()
    results = run_suite(bytes(2560 * 10), streams=10, progress=progress)
    assert results.streams == 10
    assert not results.all_passed()
    assert results.summary().loc["Frequency", "passing"] == 0
    assert progress.call_count == 10
    progress.assert_called_with(1.0)


def test_run_suite_covers_every_test():
    generator = random.Random(44)
    data = bytes(generator.getrandbits(8) for _ in range(2560 * 4))
    results = run_suite(data, streams=4)
    assert len(results.tests()) == 9
    assert results.summary()["streams"].tolist() == [4] * 9

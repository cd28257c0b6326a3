import logging

import numpy as np
import pandas as pd
from scipy.stats import chisquare

from ecsteg_shared.randtest import (
    DEFAULT_ALPHA,
    BitSequence,
    TestReport,
    proportion_check,
    proportion_threshold,
    run_all,
)

logger = logging.getLogger(__name__)

DEFAULT_STREAMS = 100
_UNIFORMITY_BINS = 10


def run_suite(bits, streams=DEFAULT_STREAMS, alpha=DEFAULT_ALPHA, progress=None):
    """Split bits into equal streams and run every test on each of them."""
    sequence = bits if isinstance(bits, BitSequence) else BitSequence(bits)
    reports = []
    parts = sequence.split(streams)
    for number, part in enumerate(parts):
        reports.append(run_all(part, alpha=alpha))
        if progress is not None:
            progress((number + 1) / len(parts))
    logger.info(
        "Ran %d tests on %d streams of %d bits",
        len(reports[0]),
        len(parts),
        parts[0].n,
    )
    return SuiteResults(reports, alpha=alpha)


class SuiteResults(object):
    def __init__(self, stream_reports, alpha=DEFAULT_ALPHA):
        self._alpha = alpha
        self._set_data(self._get_data(stream_reports))

    @property
    def data(self):
        return self._data

    @property
    def alpha(self):
        return self._alpha

    def _set_data(self, data):
        expected_columns = ["stream", "test", "p_value"]
        if not isinstance(data, pd.DataFrame):
            raise TypeError(
                "Invalid type: {}, should be type: {}".format(type(data), pd.DataFrame)
            )
        elif not set(expected_columns).issubset(data.columns):
            raise ValueError(
                "{} should be present in DataFrame columns, missing: {}".format(
                    expected_columns, set(expected_columns) - set(data.columns)
                )
            )
        elif data.empty:
            raise ValueError("No test results to summarize")
        else:
            self._data = data

    @staticmethod
    def _get_data(stream_reports):
        rows = []
        for stream, reports in enumerate(stream_reports):
            for report in reports:
                for name, p_value in report.rows():
                    rows.append({"stream": stream, "test": name, "p_value": p_value})
        return pd.DataFrame(rows, columns=["stream", "test", "p_value"])

    @property
    def streams(self):
        return int(self._data["stream"].nunique())

    def tests(self):
        return list(dict.fromkeys(self._data["test"]))

    @staticmethod
    def uniformity_p_value(p_values):
        """Chi-square over ten equal bins of the p-values."""
        histogram, _ = np.histogram(
            np.asarray(p_values), bins=_UNIFORMITY_BINS, range=(0.0, 1.0)
        )
        return float(chisquare(histogram).pvalue)

    def summary(self):
        rows = []
        for name in self.tests():
            p_values = self._data.loc[self._data["test"] == name, "p_value"]
            reports = [TestReport(name, p, self._alpha) for p in p_values]
            passed = proportion_check(reports, self._alpha)
            rows.append(
                {
                    "test": name,
                    "uniformity_p_value": self.uniformity_p_value(p_values),
                    "passing": int((p_values >= self._alpha).sum()),
                    "streams": len(p_values),
                    "proportion": float((p_values >= self._alpha).mean()),
                    "threshold": proportion_threshold(len(p_values), self._alpha),
                    "result": "PASS" if passed else "FAIL",
                }
            )
        return pd.DataFrame(rows).set_index("test")

    def all_passed(self):
        return bool((self.summary()["result"] == "PASS").all())

    def report_lines(self):
        """name<TAB>passing/streams<TAB>uniformity=p<TAB>PASS|FAIL per test,
        then a summary line. The verdict is the proportion check."""
        summary = self.summary()
        lines = [
            "{}\t{}/{}\tuniformity={:.6f}\t{}".format(
                name, row.passing, row.streams, row.uniformity_p_value, row.result
            )
            for name, row in summary.iterrows()
        ]
        passed = int((summary["result"] == "PASS").sum())
        lines.append(
            "SUMMARY\t{}/{}\t{}".format(
                passed, len(summary), "PASS" if passed == len(summary) else "FAIL"
            )
        )
        return lines

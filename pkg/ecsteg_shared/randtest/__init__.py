from .report import (
    DEFAULT_ALPHA,
    InsufficientDataError,
    TestReport,
    proportion_check,
    proportion_threshold,
)
from .sequence import BitSequence
from .statistical_tests import (
    ALL_TESTS,
    approximate_entropy,
    block_frequency,
    cumulative_sums,
    longest_run,
    monobit,
    run_all,
    runs,
    serial,
)

__all__ = [
    "ALL_TESTS",
    "BitSequence",
    "DEFAULT_ALPHA",
    "InsufficientDataError",
    "TestReport",
    "approximate_entropy",
    "block_frequency",
    "cumulative_sums",
    "longest_run",
    "monobit",
    "proportion_check",
    "proportion_threshold",
    "run_all",
    "runs",
    "serial",
]

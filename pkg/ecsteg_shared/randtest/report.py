import math

DEFAULT_ALPHA = 0.01


class InsufficientDataError(ValueError):
    pass


class TestReport(object):
    """Outcome of one statistical test on one sequence.

    Tests with several statistics (serial, cumulative sums) carry one
    p-value per statistic; the report passes only if all of them do.
    """

    __test__ = False

    def __init__(self, name, p_values, alpha=DEFAULT_ALPHA, **extras):
        if isinstance(p_values, (int, float)):
            p_values = (p_values,)
        self.name = name
        self.p_values = tuple(min(1.0, max(0.0, float(p))) for p in p_values)
        self.alpha = alpha
        self.extras = extras

    @property
    def p_value(self):
        return min(self.p_values)

    @property
    def passed(self):
        return self.p_value >= self.alpha

    def rows(self):
        """(name, p_value) per statistic, numbered when there are several."""
        if len(self.p_values) == 1:
            return [(self.name, self.p_values[0])]
        return [
            ("{}[{}]".format(self.name, i + 1), p) for i, p in enumerate(self.p_values)
        ]

    def __repr__(self):
        return "TestReport({}, p={}, {})".format(
            self.name,
            ", ".join("{:.6f}".format(p) for p in self.p_values),
            "PASS" if self.passed else "FAIL",
        )


def proportion_threshold(streams, alpha=DEFAULT_ALPHA):
    return 1 - alpha - 3 * math.sqrt(alpha * (1 - alpha) / streams)


def proportion_check(reports, alpha=DEFAULT_ALPHA):
    """True when the passing fraction exceeds 1 - a - 3 sqrt(a(1 - a)/n)."""
    reports = list(reports)
    if not reports:
        raise InsufficientDataError("proportion_check needs at least one report")
    passing = sum(1 for report in reports if report.p_value >= alpha)
    return passing / len(reports) > proportion_threshold(len(reports), alpha)

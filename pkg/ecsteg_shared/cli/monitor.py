# -*- coding: utf-8 -*-
import sys

from colors import color as ansi_color
from console_progressbar import ProgressBar

COLOR_PASS = "green"
COLOR_FAIL = "red"


def _ansi_color(*args, **kwargs):
    # This wraps ansi_color such that when _ansi_color is bound to Monitor,
    # all arguments are passed to ansi_color except the instance (self).
    return ansi_color(*args[1:], **kwargs)


class Monitor(object):
    """Prints check results and report lines to @out and progress to @err.

    @color_always decides whether or not coloring always should take place,
    i.e. even if @out does not support it.
    """

    empty_bar_char = " "
    filled_bar_char = "█"
    bar_length = 30

    _colorize = _ansi_color

    def __init__(self, out=None, err=None, color_always=False):
        self._out = out if out is not None else sys.stdout
        self._err = err if err is not None else sys.stderr

        # If out is not (like) a tty, disable colors.
        if not self._out.isatty() and not color_always:
            self._colorize = self._no_color

    def _no_color(self, *args, **kwargs):
        """Alternate color method when no coloring is wanted. Conforms to the
        signature of ansi_color.color, wherein the first positional argument
        is the string to be (un-)colored."""
        return args[0]

    def _verdict(self, passed):
        if passed:
            return self._colorize("PASS", fg=COLOR_PASS)
        return self._colorize("FAIL", fg=COLOR_FAIL)

    def print_line(self, text):
        print(text, file=self._out)

    def print_check(self, result):
        print(
            "{}\t{}\t{}".format(result.name, result.detail, self._verdict(result.passed)),
            file=self._out,
        )

    def print_report_lines(self, lines):
        """Colour the trailing PASS/FAIL field of tab separated report lines."""
        for line in lines:
            head, _, verdict = line.rpartition("\t")
            print("{}\t{}".format(head, self._verdict(verdict == "PASS")), file=self._out)

    def print_summary(self, passed, total):
        print(
            "SUMMARY\t{}/{}\t{}".format(passed, total, self._verdict(passed == total)),
            file=self._out,
        )

    def progress(self, fraction, prefix="Generating"):
        pb = ProgressBar(
            total=100,
            prefix=prefix,
            suffix="",
            decimals=0,
            length=self.bar_length,
            fill=self.filled_bar_char,
            zfill=self.empty_bar_char,
            file=self._err,
        )
        pb.print_progress_bar(fraction * 100)

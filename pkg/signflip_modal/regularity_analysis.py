# Copyright 2026 The signflip-modal developers
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.

"""
This module contains the signflip-modal RegularityAnalysis class.
"""

import csv
import math
import numbers

import numpy as np
from scipy import stats

from .core import CSV_VERSION_LINE, Core
from .exceptions import InsufficientDataException, InvalidParameterException, InvalidTypeException
from .scaled import ScaledValue

# only a ratio this small between consecutive dyadic blocks counts as geometric decay
_CONVERGENT_RATIO = 0.9
_MIN_FIT_POINTS = 10


class CoeffSequence(object):
    """Modal coefficients u_m with their Sobolev weights w_m (1 + m^2 or 1 + lambda_m).

    Arguments:
        entries {list} -- (m, weight, value) triples. Values may be complex numbers or ScaledValue instances.
    """

    def __init__(self, entries):
        entries = [(int(m), float(weight), value) for m, weight, value in entries]
        for (m0, w0, _), (m1, w1, _) in zip(entries, entries[1:]):
            if m1 <= m0:
                raise InvalidParameterException("CoeffSequence indices must be strictly increasing ({} then {}).".format(
                    m0, m1))
            if w1 < w0:
                raise InvalidParameterException("CoeffSequence weights must be nondecreasing.")
        for m, weight, value in entries:
            if m < 0 or not weight > 0:
                raise InvalidParameterException(
                    "CoeffSequence entry {} needs a nonnegative index and a positive weight.".format(m))
            if not isinstance(value, (numbers.Number, ScaledValue)):
                raise InvalidTypeException("CoeffSequence values must be numbers, got {}.".format(type(value)))
        self.entries = entries

    @classmethod
    def from_values(cls, values, start=1, weights=None):
        """Build a sequence indexed start, start + 1, ... with weights 1 + m^2 unless given."""

        entries = []
        for offset, value in enumerate(values):
            m = start + offset
            weight = (1.0 + m * m) if weights is None else weights[offset]
            entries.append((m, weight, value))
        return cls(entries)

    @classmethod
    def read_csv(cls, path):
        """Read a `m,weight,re,im` file. Lines starting with '#' are skipped."""

        with open(path, newline="") as handle:
            rows = [row for row in csv.reader(handle) if row and not row[0].startswith("#")]
        if rows and rows[0][0].strip() == "m":
            rows = rows[1:]
        return cls([(int(row[0]), float(row[1]), complex(float(row[2]), float(row[3]))) for row in rows])

    def write_csv(self, path):
        with open(path, "w", newline="") as handle:
            handle.write(CSV_VERSION_LINE + "\n")
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["m", "weight", "re", "im"])
            for m, weight, value in self.entries:
                value = complex(value)
                writer.writerow([m, "{:.17g}".format(weight), "{:.17g}".format(value.real),
                                 "{:.17g}".format(value.imag)])

    def indices(self):
        return [m for m, _, _ in self.entries]

    def log_magnitudes(self):
        """log|u_m| per entry, -inf for zeros. ScaledValue entries keep their full range."""

        return [_log_abs(value) for _, _, value in self.entries]

    def __len__(self):
        return len(self.entries)


class RegularityReport(object):
    """The outcome of a regularity classification.

    Arguments:
        geometry {str} -- disk2d, ball3d, halfline or slab.
        case {str} -- The CaseLabel value.
        p {int} -- Order of regularity lost, None when the loss is infinite.

    Keyword Arguments:
        infinite {bool} -- True when no finite p exists. (default: {False})
        kernel {list} -- Kernel descriptions (dicts). (default: {None})
        infinite_kernel {bool} -- True when the kernel has infinite dimension. (default: {False})
        statement {str} -- The data/solution space statement. (default: {""})
        notes {list} -- Free-form notices. (default: {None})
    """

    def __init__(self, geometry, case, p, infinite=False, kernel=None, infinite_kernel=False, statement="",
                 notes=None):
        self.geometry = geometry
        self.case = case
        self.p = p
        self.infinite = infinite
        self.kernel = list(kernel or [])
        self.infinite_kernel = infinite_kernel
        self.statement = statement
        self.notes = list(notes or [])

    def to_dict(self):
        return {
            "geometry": self.geometry,
            "case": self.case,
            "p": self.p,
            "infinite": self.infinite,
            "kernel": self.kernel,
            "infinite_kernel": self.infinite_kernel,
            "statement": self.statement,
            "notes": self.notes,
        }

    def __repr__(self):
        return "RegularityReport(geometry={!r}, case={!r}, p={!r}, infinite={!r})".format(
            self.geometry, self.case, self.p, self.infinite)


class RegularityAnalysis(Core):
    """This class contains the sequence-level diagnostics shared by the geometry modules."""

    def decay_exponent(self, seq, fit_range=None):
        """Least-squares slope of log|u_m| against log m.

        Zero values are excluded from the fit and their number is logged.

        Arguments:
            seq {CoeffSequence} -- The sequence to fit.

        Keyword Arguments:
            fit_range {tuple} -- Inclusive (m_lo, m_hi) restriction. (default: {None})

        Returns:
            tuple -- (slope, r_squared)
        """

        if not isinstance(seq, CoeffSequence):
            raise InvalidTypeException("The decay_exponent() seq argument must be a CoeffSequence.")

        points = []
        skipped = 0
        for m, log_value in zip(seq.indices(), seq.log_magnitudes()):
            if fit_range is not None and not fit_range[0] <= m <= fit_range[1]:
                continue
            if m < 1 or log_value == float("-inf"):
                skipped += 1
                continue
            points.append((math.log(m), log_value))

        if skipped:
            self.log("decay_exponent: Skipped {} zero entries.".format(skipped))
        if len(points) < _MIN_FIT_POINTS:
            raise InsufficientDataException(
                "decay_exponent() needs at least {} nonzero entries, got {}.".format(_MIN_FIT_POINTS, len(points)))

        span = math.exp(points[-1][0] - points[0][0])
        if span < self._tolerance("fit_min_span"):
            raise InsufficientDataException("decay_exponent() needs index ratio >= {} (got {:.3g}).".format(
                self._tolerance("fit_min_span"), span))

        log_m, log_u = zip(*points)
        fit = stats.linregress(log_m, log_u)
        self.log("decay_exponent: Fitted slope {:.6f} on {} points.".format(fit.slope, len(points)))
        return float(fit.slope), float(fit.rvalue ** 2)

    def sobolev_partial_sums(self, seq, s, n_terms=None):
        """Partial sums of sum w_m^s |u_m|^2 with a convergence verdict.

        The verdict compares consecutive dyadic blocks (indices 2^j to 2^(j+1) - 1): a block ratio of at least
        `divergence_ratio` means the terms do not decay fast enough and the series is reported divergent; ratios
        below 0.9 are read as geometric decay of the blocks.

        Arguments:
            seq {CoeffSequence} -- The coefficients and their weights.
            s {float} -- Sobolev exponent.

        Keyword Arguments:
            n_terms {int} -- Use only the first n_terms entries. (default: {None})

        Returns:
            tuple -- (partial sums as floats, verdict) where verdict is convergent, divergent or inconclusive.
        """

        entries = seq.entries if n_terms is None else seq.entries[:n_terms]
        log_terms = [s * math.log(weight) + 2.0 * _log_abs(value) for _, weight, value in entries]
        indices = [m for m, _, _ in entries]

        log_partial = self._log_partial_sums(log_terms)
        verdict = self._dyadic_verdict(indices, log_terms)
        partial_sums = [math.exp(value) if value < 709 else float("inf") for value in log_partial]
        return partial_sums, verdict

    @staticmethod
    def _log_partial_sums(log_terms):
        if not log_terms:
            return []
        return [float(value) for value in np.logaddexp.accumulate(np.asarray(log_terms, dtype=float))]

    def _dyadic_verdict(self, indices, log_terms):
        """Internal method classifying a series from the log-sums of its complete dyadic blocks."""

        if not indices:
            return "inconclusive"

        last = indices[-1]
        blocks = {}
        for m, log_term in zip(indices, log_terms):
            j = int(math.floor(math.log2(max(m, 1))))
            # the block [2^j, 2^(j+1)) is only usable once it is complete
            if 2 ** (j + 1) - 1 > last:
                continue
            blocks.setdefault(j, []).append(log_term)

        block_logs = [float(np.logaddexp.reduce(np.asarray(blocks[j], dtype=float))) for j in sorted(blocks)]
        if len(block_logs) < 3:
            return "inconclusive"

        log_ratios = []
        for previous, current in zip(block_logs[-3:], block_logs[-2:]):
            if current == float("-inf"):
                log_ratios.append(float("-inf"))
            elif previous == float("-inf"):
                log_ratios.append(float("inf"))
            else:
                log_ratios.append(current - previous)

        if all(value >= math.log(self._tolerance("divergence_ratio")) for value in log_ratios):
            return "divergent"
        if all(value <= math.log(_CONVERGENT_RATIO) for value in log_ratios):
            return "convergent"
        return "inconclusive"


def _log_abs(value):
    if isinstance(value, ScaledValue):
        return value.log_abs()
    magnitude = abs(value)
    return math.log(magnitude) if magnitude > 0 else float("-inf")

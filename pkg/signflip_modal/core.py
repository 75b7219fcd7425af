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
This module contains the signflip-modal Core class.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from enum import Enum

from .exceptions import InvalidParameterException, InvalidTypeException

CSV_VERSION_LINE = "# signflip-modal v1"

DEFAULT_TOLERANCES = {
    "regime": 1e-12,
    "cutoff": 1e-10,
    "match": 1e-8,
    "near_zero": 1e-13,
    "branch_cut": 1e-14,
    "solve_residual": 1e-10,
    "slab_residual": 1e-9,
    "root_xtol": 1e-12,
    "root_residual": 1e-10,
    "divergence_ratio": 0.999,
    "truncation_warning": 1e-10,
    "truncation_stop": 1e-12,
    "fit_min_span": 5.0,
    "scan_subintervals": 400,
}


class CaseLabel(Enum):
    STANDARD = "Standard"
    CRITICAL = "Critical"
    SUPER_CRITICAL = "SuperCritical"

    @classmethod
    def parse(cls, value):
        """Accept a CaseLabel, its value or the CLI spelling (standard, critical, supercritical)."""

        if isinstance(value, cls):
            return value
        spellings = {
            "standard": cls.STANDARD,
            "critical": cls.CRITICAL,
            "supercritical": cls.SUPER_CRITICAL,
            "super-critical": cls.SUPER_CRITICAL,
        }
        try:
            return spellings[str(value).replace("_", "").lower()]
        except KeyError:
            raise InvalidParameterException(
                "'{}' is not a valid case. Valid choices are: standard, critical, supercritical.".format(value))


def classify_media(kappa, k_plus, k_minus, tolerance):
    """Regime of a contrast / wave-number triple, with relative equality tolerance."""

    if abs(kappa + 1.0) > tolerance:
        return CaseLabel.STANDARD
    if abs(k_plus - k_minus) > tolerance * max(k_plus, k_minus):
        return CaseLabel.CRITICAL
    return CaseLabel.SUPER_CRITICAL


class Core(object):
    """This class contains the plumbing shared by every analysis mixin: tolerance lookup, argument validation and
    the worker pool used for mode scans."""

    tolerances = dict(DEFAULT_TOLERANCES)
    threads = 1
    truncation = 3
    logging_level = "debug"

    def log(self, log_message):
        """Create properly formatted debug log messages.

        Arguments:
            log_message {str} -- The message to pass to the debug log.
        """

        log = logging.getLogger(__name__)

        set_logging = {
            "debug": log.debug,
            "critical": log.critical,
            "error": log.error,
            "warning": log.warning,
            "info": log.info
        }
        set_logging[self.logging_level](log_message)

    def classify_case(self, config, force_case=None):
        """Regime of a configuration.

        Arguments:
            config {object} -- A DiskBallConfig or a WaveguideConfig.

        Keyword Arguments:
            force_case {str} -- Override the computed label. (default: {None})

        Returns:
            CaseLabel -- Standard, Critical or SuperCritical.
        """

        if force_case is not None:
            return CaseLabel.parse(force_case)
        return classify_media(config.kappa, config.k_plus, config.k_minus, self._tolerance("regime"))

    def _tolerance(self, name):
        return self.tolerances[name]

    def _common_map(self, function, items):
        """Internal method that consolidates every per-mode scan.

        Arguments:
            function {callable} -- Applied to each item.
            items {iterable} -- The work items, typically mode indices.

        Returns:
            list -- The results, in the order of `items` regardless of the number of workers.
        """

        items = list(items)
        if self.threads <= 1 or len(items) < 2:
            return [function(item) for item in items]

        self.log("_common_map: Dispatching {} items across {} workers.".format(len(items), self.threads))
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(function, items))

    @staticmethod
    def _merge_tolerances(overrides):
        """Internal method used to validate user tolerance overrides against the defaults.

        Arguments:
            overrides {dict} -- Partial mapping of tolerance names to values.

        Returns:
            dict -- The complete tolerance table.
        """

        merged = dict(DEFAULT_TOLERANCES)
        if overrides is None:
            return merged
        if not isinstance(overrides, dict):
            raise InvalidTypeException("The tolerances argument must be a dict.")

        for name, value in overrides.items():
            if name not in DEFAULT_TOLERANCES:
                raise InvalidParameterException(
                    "'{}' is not a valid tolerance. Valid choices are: {}.".format(name, sorted(DEFAULT_TOLERANCES)))
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
                raise InvalidParameterException("The '{}' tolerance must be a positive number.".format(name))
            if name == "scan_subintervals":
                value = int(value)
            merged[name] = value
        return merged

    @staticmethod
    def _validate_positive(function_name, **values):
        """Internal method used to reject non-positive or non-finite real arguments."""

        for name, value in values.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidTypeException("The {}() {} argument must be a real number.".format(function_name, name))
            if not math.isfinite(value) or value <= 0:
                raise InvalidParameterException(
                    "The {}() {} argument must be positive, got {}.".format(function_name, name, value))

    @staticmethod
    def _validate_choice(function_name, name, value, valid_values):
        if value not in valid_values:
            raise InvalidParameterException(
                "The {}() {} argument must be one of the following: {}.".format(function_name, name, valid_values))

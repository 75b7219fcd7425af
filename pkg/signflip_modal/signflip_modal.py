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
This module contains the signflip-modal Analysis class.
"""

import logging
import os

from .disk_ball import DiskBall
from .exceptions import InvalidParameterException
from .field_synthesis import FieldSynthesis
from .radiation import Radiation
from .regularity_analysis import RegularityAnalysis
from .special_functions import SpecialFunctions
from .waveguide import Waveguide


class Analysis(SpecialFunctions, DiskBall, Waveguide, Radiation, RegularityAnalysis, FieldSynthesis):
    """This class is the main interaction point of the package: every analysis operation is one of its methods.

    Arguments:
        SpecialFunctions {class} -- Bessel, Hankel and spherical functions, oracles and large-order asymptotics.
        DiskBall {class} -- The per-mode systems of the negative disk and ball.
        Waveguide {class} -- The flat-interface half-line and slab waveguides.
        Radiation {class} -- Absorbing wave numbers and radiation conditions.
        RegularityAnalysis {class} -- Decay fits and Sobolev-type partial sums of coefficient sequences.
        FieldSynthesis {class} -- Fields rebuilt from modal coefficients and their interface checks.
    """

    def __init__(self, tolerances=None, threads=None, truncation=3, enable_logging=False, logging_level="debug"):
        """Constructor for the Analysis class which is used to initialize the class variables.

        Keyword Arguments:
            tolerances {dict} -- Overrides of DEFAULT_TOLERANCES. (default: {None})
            threads {int} -- Workers for the mode scans. If a value is not provided we will check for a
                             `SIGNFLIP_THREADS` environment variable, then fall back to 1. (default: {None})
            truncation {int} -- Default number of terms of the large-order series. (default: {3})
            enable_logging {bool} -- Flag to determine if logging will be enabled for the package. (default: {False})
            logging_level {str} -- Sets the threshold for logging to the provided to level. Logging messages which
                                   are less severe than level will be ignored. (default: {debug})
                                   (choices: {debug, critical, error, warning, info})
        """

        set_logging = {
            "debug": logging.DEBUG,
            "critical": logging.CRITICAL,
            "error": logging.ERROR,
            "warning": logging.WARNING,
            "info": logging.INFO,
        }

        if logging_level not in set_logging:
            raise InvalidParameterException(
                "'{}' is not a valid logging_level. Valid choices are 'debug', 'critical', 'error', 'warning', or "
                "'info'.".format(logging_level))

        self.logging_level = logging_level
        if enable_logging:
            logging.getLogger().setLevel(set_logging[self.logging_level])

        self.tolerances = self._merge_tolerances(tolerances)

        if threads is None:
            threads = os.environ.get("SIGNFLIP_THREADS")
            if threads is None:
                threads = 1
        try:
            threads = int(threads)
        except (TypeError, ValueError):
            raise InvalidParameterException("The number of threads must be a positive integer, got {}.".format(threads))
        if threads < 1:
            raise InvalidParameterException("The number of threads must be a positive integer, got {}.".format(threads))
        self.threads = threads

        if isinstance(truncation, bool) or not isinstance(truncation, int) or truncation < 0:
            raise InvalidParameterException("The truncation must be a nonnegative integer.")
        self.truncation = truncation

        self.log("Analysis: {} worker(s), truncation N={}.".format(self.threads, self.truncation))

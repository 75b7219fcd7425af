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
This module contains the signflip-modal DiskBall class.
"""

import math
import numbers

import numpy as np

from .core import Core
from .exceptions import (DomainException, FitUnstableException, InvalidParameterException, InvalidTypeException,
                         NumericalAssertionException)
from .regularity_analysis import CoeffSequence, RegularityReport
from .scaled import ScaledValue

# values of p for (Standard, Critical, SuperCritical)
REGULARITY_TABLE = {
    2: {"Standard": 0, "Critical": 2, "SuperCritical": 3},
    3: {"Standard": 0, "Critical": 1, "SuperCritical": 1},
}

MODE_TABLE_HEADER = ["m", "det_mantissa_re", "det_mantissa_im", "det_exp", "inv11_re", "inv11_im", "inv12_re",
                     "inv12_im", "inv21_re", "inv21_im", "inv22_re", "inv22_im"]

_MIN_FIT_POINTS = 10
_MIN_FIT_START = 10


def _check_real(name, value, positive=True):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise InvalidTypeException("The {} value must be a real number.".format(name))
    if not math.isfinite(value) or (positive and value <= 0):
        raise InvalidParameterException("The {} value must be positive and finite, got {}.".format(name, value))
    return float(value)


class DiskBallConfig(object):
    """A negative disk (dimension 2) or ball (dimension 3) of radius R in a positive background.

    Arguments:
        dimension {int} -- 2 or 3.
        radius {float} -- R > 0.
        kappa {float} -- Contrast sigma^+/sigma^- < 0.
        k_plus {float} -- Exterior wave number.
        k_minus {float} -- Interior wave number.
    """

    def __init__(self, dimension, radius, kappa, k_plus, k_minus):
        if dimension not in (2, 3):
            raise InvalidParameterException("The dimension must be 2 or 3, got {}.".format(dimension))
        self.dimension = dimension
        self.radius = _check_real("radius", radius)
        self.kappa = _check_real("kappa", kappa, positive=False)
        if self.kappa >= 0:
            raise InvalidParameterException("The contrast kappa must be negative, got {}.".format(kappa))
        self.k_plus = _check_real("k_plus", k_plus)
        self.k_minus = _check_real("k_minus", k_minus)

    @property
    def geometry(self):
        return "disk2d" if self.dimension == 2 else "ball3d"

    def with_radius(self, radius):
        return DiskBallConfig(self.dimension, radius, self.kappa, self.k_plus, self.k_minus)

    def __repr__(self):
        return "DiskBallConfig(dimension={}, radius={}, kappa={}, k_plus={}, k_minus={})".format(
            self.dimension, self.radius, self.kappa, self.k_plus, self.k_minus)


class ModeSystem2(object):
    """The 2x2 system [[1, -1], [a, b]] (u^-, u^+) = (f, g) of one angular mode.

    a = k^- C'/C for the interior function and b = -kappa k^+ H'/H for the exterior one, so D = a + b.
    """

    def __init__(self, mode, a, b, rhs):
        self.mode = mode
        self.a = complex(a)
        self.b = complex(b)
        self.matrix = np.array([[1.0, -1.0], [self.a, self.b]], dtype=complex)
        self.determinant = self.a + self.b
        self.rhs = np.array(rhs, dtype=complex)

    def inverse(self):
        if self.determinant == 0:
            return None
        return np.array([[self.b, 1.0], [-self.a, 1.0]], dtype=complex) / self.determinant

    def solve(self):
        return self.inverse().dot(self.rhs)

    def residual(self, x):
        """Backward error ||A x - rhs|| / (||A|| ||x|| + ||rhs||) in the max norm."""

        x = np.asarray(x, dtype=complex)
        scale = np.linalg.norm(self.matrix, np.inf) * np.max(np.abs(x)) + np.max(np.abs(self.rhs))
        if scale == 0:
            return 0.0
        return float(np.max(np.abs(self.matrix.dot(x) - self.rhs)) / scale)


class AsymptoticMatrix(object):
    """The matrix [[kappa m^p, R m^(p-1)], [-m^p, R m^(p-1)]] and the regime prefactor it is scaled by."""

    def __init__(self, p, kappa, radius, prefactor=1.0):
        self.p = p
        self.kappa = kappa
        self.radius = radius
        self.prefactor = prefactor

    def evaluate(self, m):
        m = float(m)
        return np.array([[self.kappa * m ** self.p, self.radius * m ** (self.p - 1)],
                         [-m ** self.p, self.radius * m ** (self.p - 1)]])

    def predicted(self, m):
        return self.prefactor * self.evaluate(m)


class DiskBall(Core):
    """This class contains the per-mode analysis of the negative disk (d=2) and ball (d=3)."""

    def build_system(self, config, m, f_m=0.0, g_m=0.0):
        """Assemble the system of one mode from the logarithmic derivatives at the interface.

        Arguments:
            config {DiskBallConfig} -- The configuration.
            m {int} -- Mode index n (d=2, folded to |n|) or degree l (d=3).

        Keyword Arguments:
            f_m {complex} -- Jump data. (default: {0.0})
            g_m {complex} -- Flux data. (default: {0.0})

        Returns:
            ModeSystem2 -- The assembled system.
        """

        m = self._mode_index("build_system", config, m)
        spherical = config.dimension == 3
        interior = self.ratio_cprime_c(m, config.k_minus * config.radius, "J", spherical=spherical)
        exterior = self.ratio_cprime_c(m, config.k_plus * config.radius, "H", spherical=spherical)

        a = config.k_minus * interior.real
        b = -config.kappa * config.k_plus * exterior
        return ModeSystem2(m, a, b, (f_m, g_m))

    def determinant(self, config, m):
        """D_m = k^- C'_m/C_m(k^- R) - kappa k^+ H'_m/H_m(k^+ R), never zero for a negative contrast.

        Arguments:
            config {DiskBallConfig} -- The configuration.
            m {int} -- Mode index.

        Returns:
            complex -- The determinant.
        """

        system = self.build_system(config, m)
        if system.determinant == 0:
            raise NumericalAssertionException("The determinant of mode {} vanished.".format(m))
        return system.determinant

    def determinant_margin(self, config, m):
        """Return the determinant with its modulus and log-modulus for nonvanishing checks.

        Returns:
            dict -- determinant, abs and log_abs.
        """

        determinant = self.determinant(config, m)
        return {
            "determinant": determinant,
            "abs": abs(determinant),
            "log_abs": ScaledValue(determinant).log_abs(),
        }

    def solve_mode(self, config, m, f_m, g_m):
        """Solve one mode with the closed-form inverse (1/D) [[b, 1], [-a, 1]].

        Arguments:
            config {DiskBallConfig} -- The configuration.
            m {int} -- Mode index.
            f_m {complex} -- Jump data.
            g_m {complex} -- Flux data.

        Returns:
            tuple -- (u_minus, u_plus)
        """

        system = self.build_system(config, m, f_m, g_m)
        if system.determinant == 0:
            raise NumericalAssertionException("The determinant of mode {} vanished.".format(m))

        solution = system.solve()
        residual = system.residual(solution)
        if residual > self._tolerance("solve_residual"):
            raise NumericalAssertionException(
                "solve_mode: residual {:.3e} of mode {} exceeds the tolerance.".format(residual, m))
        return complex(solution[0]), complex(solution[1])

    def asymptotic_matrix(self, config, force_case=None):
        """The regime's AsymptoticMatrix, prefactor included."""

        case = self.classify_case(config, force_case).value
        p = REGULARITY_TABLE[config.dimension][case]
        kappa, radius = config.kappa, config.radius

        if case == "Standard":
            prefactor = 1.0 / (kappa + 1.0)
        elif config.dimension == 3:
            prefactor = -1.0
        elif case == "Critical":
            gap = config.k_plus ** 2 - config.k_minus ** 2
            if gap == 0:
                raise InvalidParameterException("The critical prediction needs k_plus != k_minus.")
            prefactor = 2.0 / (radius ** 2 * gap)
        else:
            prefactor = 1.0 / (radius ** 2 * config.k_plus ** 2)
        return AsymptoticMatrix(p, kappa, radius, prefactor)

    def predicted_matrix(self, config, m, force_case=None):
        """Leading behaviour of the inverse of mode m: prefactor * M(p).

        Arguments:
            config {DiskBallConfig} -- The configuration.
            m {int} -- Mode index, at least 1.

        Keyword Arguments:
            force_case {str} -- Override the computed label. (default: {None})

        Returns:
            numpy.ndarray -- The 2x2 prediction.
        """

        m = self._mode_index("predicted_matrix", config, m)
        if m == 0:
            raise InvalidParameterException("predicted_matrix() needs m >= 1.")
        return self.asymptotic_matrix(config, force_case).predicted(m).astype(complex)

    def inverse_entry_slopes(self, config, m_range=(20, 100)):
        """Log-log slopes of the four entries of the exact inverse over a range of modes.

        Arguments:
            config {DiskBallConfig} -- The configuration.

        Keyword Arguments:
            m_range {tuple} -- Inclusive (m_lo, m_hi). (default: {(20, 100)})

        Returns:
            dict -- slopes and r_squared (2x2 nested lists), entries_12_22_coincide and the largest relative gap
                    between entries (1,2) and (2,2).
        """

        m_lo, m_hi = int(m_range[0]), int(m_range[1])
        if m_hi < m_lo:
            raise InvalidParameterException("inverse_entry_slopes() needs a nonempty range, got {}..{}.".format(
                m_lo, m_hi))
        if m_hi - m_lo + 1 < _MIN_FIT_POINTS or m_lo < _MIN_FIT_START:
            raise FitUnstableException(
                "inverse_entry_slopes() needs at least {} modes starting at m >= {}, got {}..{}.".format(
                    _MIN_FIT_POINTS, _MIN_FIT_START, m_lo, m_hi))
        if m_hi < self._tolerance("fit_min_span") * m_lo:
            raise FitUnstableException("inverse_entry_slopes() needs m_hi >= {} m_lo, got {}..{}.".format(
                self._tolerance("fit_min_span"), m_lo, m_hi))

        modes = list(range(m_lo, m_hi + 1))
        self.log("inverse_entry_slopes: Inverting {} modes of {}.".format(len(modes), config))
        inverses = self._common_map(lambda m: self.build_system(config, m).inverse(), modes)

        slopes = [[0.0, 0.0], [0.0, 0.0]]
        r_squared = [[0.0, 0.0], [0.0, 0.0]]
        for i in range(2):
            for j in range(2):
                seq = CoeffSequence([(m, 1.0, complex(inverse[i, j])) for m, inverse in zip(modes, inverses)])
                slopes[i][j], r_squared[i][j] = self.decay_exponent(seq)

        gap = max(abs(inverse[0, 1] - inverse[1, 1]) / abs(inverse[1, 1]) for inverse in inverses)
        return {
            "slopes": slopes,
            "r_squared": r_squared,
            "entries_12_22_coincide": bool(gap <= 1e-12),
            "max_gap_12_22": float(gap),
        }

    def regularity_loss(self, config, force_case=None):
        """Order of regularity lost for the disk or ball.

        Arguments:
            config {DiskBallConfig} -- The configuration.

        Keyword Arguments:
            force_case {str} -- Override the computed label. (default: {None})

        Returns:
            RegularityReport -- The classification.
        """

        case = self.classify_case(config, force_case).value
        p = REGULARITY_TABLE[config.dimension][case]
        statement = "(f, g) in H^(s+{p}) x H^(s+{p}) gives traces (u^-, u^+) in H^s x H^s".format(p=p)
        return RegularityReport(config.geometry, case, p, statement=statement)

    def curvature_limit(self, xi, kappa, k_plus, k_minus):
        """Limit of the disk determinant when R grows with n/R = xi fixed.

        Arguments:
            xi {float} -- The ratio n/R, larger than both wave numbers.
            kappa {float} -- Contrast.
            k_plus {float} -- Exterior wave number.
            k_minus {float} -- Interior wave number.

        Returns:
            float -- sqrt(xi^2 - k^-^2) + kappa sqrt(xi^2 - k^+^2)
        """

        self._validate_positive("curvature_limit", xi=xi, k_plus=k_plus, k_minus=k_minus)
        if xi <= max(k_plus, k_minus):
            raise DomainException("curvature_limit() needs xi > max(k_plus, k_minus) = {}, got {}.".format(
                max(k_plus, k_minus), xi))
        return math.sqrt(xi * xi - k_minus * k_minus) + kappa * math.sqrt(xi * xi - k_plus * k_plus)

    def curvature_convergence(self, xi, kappa, k_plus, k_minus, n_list):
        """Deviation of the exact disk determinant at R = n/xi from its limit, for each n.

        Returns:
            list -- (n, |D_n(n/xi) - limit|) pairs in the order of n_list.
        """

        limit = self.curvature_limit(xi, kappa, k_plus, k_minus)
        n_list = [int(n) for n in n_list]
        if any(later <= earlier for earlier, later in zip(n_list, n_list[1:])):
            raise InvalidParameterException("curvature_convergence() needs an ascending n_list.")

        def deviation(n):
            config = DiskBallConfig(2, n / float(xi), kappa, k_plus, k_minus)
            return n, abs(self.determinant(config, n) - limit)

        self.log("curvature_convergence: Limit {:.12g} at xi={}.".format(limit, xi))
        return self._common_map(deviation, n_list)

    def mode_table(self, config, m_range):
        """Rows for the per-mode CSV (header MODE_TABLE_HEADER)."""

        rows = []
        for m in range(int(m_range[0]), int(m_range[1]) + 1):
            system = self.build_system(config, m)
            determinant = ScaledValue(system.determinant)
            inverse = system.inverse()
            row = [m, determinant.mantissa.real, determinant.mantissa.imag, determinant.exponent]
            for value in inverse.flatten():
                row.extend([value.real, value.imag])
            rows.append(row)
        return rows

    @staticmethod
    def _mode_index(function_name, config, m):
        if isinstance(m, bool) or not isinstance(m, numbers.Integral):
            raise InvalidTypeException("The {}() mode index must be an integer.".format(function_name))
        if config.dimension == 2:
            return abs(int(m))
        if m < 0:
            raise InvalidParameterException("The {}() degree must be nonnegative for d=3.".format(function_name))
        return int(m)

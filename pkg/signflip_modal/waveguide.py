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
This module contains the signflip-modal Waveguide class.
"""

import cmath
import math
import numbers

import numpy as np
from scipy import optimize

from .core import CaseLabel, classify_media
from .exceptions import (CutoffException, InvalidParameterException, InvalidTypeException,
                         NumericalAssertionException, SingularModeException)
from .regularity_analysis import RegularityAnalysis, RegularityReport
from .scaled import ScaledValue

MODE_TABLE_HEADER = ["n", "lambda", "beta_plus_re", "beta_plus_im", "beta_minus_re", "beta_minus_im",
                     "det_mantissa_re", "det_mantissa_im", "det_exp"]

# order of regularity lost per geometry and case; None marks an infinite loss
REGULARITY_TABLE = {
    "halfline": {"Standard": 0, "Critical": 2, "SuperCritical": None},
    "slab": {"Standard": 0, "Critical": 2, "SuperCritical": None},
}


class TransverseBasis(object):
    """Eigenpairs (lambda_n, psi_n) of the cross-section Laplacian.

    Use the dirichlet(), neumann() or from_eigenvalues() constructors.
    """

    def __init__(self, provenance, length=None, eigenvalues=None, eigenfunctions=None):
        self.provenance = provenance
        self.length = length
        self._eigenvalues = list(eigenvalues) if eigenvalues is not None else None
        self._eigenfunctions = list(eigenfunctions) if eigenfunctions is not None else None

    @classmethod
    def dirichlet(cls, length=1.0):
        """psi_n(y) = sqrt(2/a) sin(n pi y / a), lambda_n = (n pi / a)^2, n >= 1."""
        return cls("dirichlet", length=_positive("length", length))

    @classmethod
    def neumann(cls, length=1.0):
        """psi_0 = 1/sqrt(a), psi_n(y) = sqrt(2/a) cos(n pi y / a), lambda_n = (n pi / a)^2, n >= 0."""
        return cls("neumann", length=_positive("length", length))

    @classmethod
    def from_eigenvalues(cls, eigenvalues, eigenfunctions=None):
        """A user spectrum indexed from 1. Repeated values encode multiplicity."""

        eigenvalues = [float(value) for value in eigenvalues]
        if not eigenvalues:
            raise InvalidParameterException("A user basis needs at least one eigenvalue.")
        if eigenvalues[0] < 0 or any(b < a for a, b in zip(eigenvalues, eigenvalues[1:])):
            raise InvalidParameterException("User eigenvalues must be nonnegative and nondecreasing.")
        if eigenfunctions is not None and len(eigenfunctions) != len(eigenvalues):
            raise InvalidParameterException("Provide one eigenfunction per eigenvalue.")
        return cls("user", eigenvalues=eigenvalues, eigenfunctions=eigenfunctions)

    @property
    def first_index(self):
        return 0 if self.provenance == "neumann" else 1

    def last_index(self, n_max=None):
        if self.provenance == "user":
            last = len(self._eigenvalues)
            return last if n_max is None else min(n_max, last)
        if n_max is None:
            raise InvalidParameterException("An analytic basis needs an explicit n_max.")
        return n_max

    def indices(self, n_max=None):
        return range(self.first_index, self.last_index(n_max) + 1)

    def eigenvalue(self, n):
        self._check_index(n)
        if self.provenance == "user":
            return self._eigenvalues[n - 1]
        return (n * math.pi / self.length) ** 2

    def eigenvalues_between(self, low, high):
        """(n, lambda_n) with low < lambda_n < high."""

        pairs = []
        n = self.first_index
        while True:
            if self.provenance == "user" and n > len(self._eigenvalues):
                break
            value = self.eigenvalue(n)
            if value >= high:
                break
            if value > low:
                pairs.append((n, value))
            n += 1
        return pairs

    def eigenfunction(self, n, y):
        self._check_index(n)
        if self.provenance == "dirichlet":
            return math.sqrt(2.0 / self.length) * math.sin(n * math.pi * y / self.length)
        if self.provenance == "neumann":
            if n == 0:
                return 1.0 / math.sqrt(self.length)
            return math.sqrt(2.0 / self.length) * math.cos(n * math.pi * y / self.length)
        if self._eigenfunctions is None:
            raise InvalidParameterException("This user basis carries no eigenfunction evaluators.")
        return self._eigenfunctions[n - 1](y)

    def _check_index(self, n):
        if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < self.first_index:
            raise InvalidParameterException("Mode index {} is out of range for a {} basis.".format(n, self.provenance))
        if self.provenance == "user" and n > len(self._eigenvalues):
            raise InvalidParameterException("Mode index {} exceeds the {} user eigenvalues.".format(
                n, len(self._eigenvalues)))

    def __repr__(self):
        if self.provenance == "user":
            return "TransverseBasis(user, {} eigenvalues)".format(len(self._eigenvalues))
        return "TransverseBasis({}, length={})".format(self.provenance, self.length)


class WaveguideConfig(object):
    """A flat interface at x = 0 between a positive medium (x < 0) and a negative one (x > 0, or 0 < x < L with a
    Dirichlet end at x = L).

    Arguments:
        basis {TransverseBasis} -- The cross-section spectrum.
        kappa {float} -- Contrast, negative.
        k_plus {float} -- Wave number of the positive medium.
        k_minus {float} -- Wave number of the negative medium.

    Keyword Arguments:
        geometry {str} -- halfline or slab. (default: {halfline})
        length {float} -- Slab thickness L, required for the slab. (default: {None})
        allow_positive {bool} -- Accept kappa > 0 for the trapped-mode diagnostics. (default: {False})
    """

    def __init__(self, basis, kappa, k_plus, k_minus, geometry="halfline", length=None, allow_positive=False):
        if not isinstance(basis, TransverseBasis):
            raise InvalidTypeException("The basis must be a TransverseBasis.")
        geometry = str(geometry).lower().replace("-", "").replace("_", "")
        if geometry not in ("halfline", "slab"):
            raise InvalidParameterException("The geometry must be halfline or slab, got {}.".format(geometry))
        if isinstance(kappa, bool) or not isinstance(kappa, numbers.Real) or kappa == 0:
            raise InvalidParameterException("The contrast kappa must be a nonzero real number.")
        if kappa > 0 and not allow_positive:
            raise InvalidParameterException("The contrast kappa must be negative, got {}.".format(kappa))

        self.basis = basis
        self.kappa = float(kappa)
        self.k_plus = _positive("k_plus", k_plus)
        self.k_minus = _positive("k_minus", k_minus)
        self.geometry = geometry
        self.length = _positive("length", length) if geometry == "slab" else None

    def __repr__(self):
        return "WaveguideConfig({}, kappa={}, k_plus={}, k_minus={}, geometry={}, length={})".format(
            self.basis, self.kappa, self.k_plus, self.k_minus, self.geometry, self.length)


class KernelMode(object):
    """A nontrivial solution with zero data, supported by the single mode n.

    Arguments:
        n {int} -- Mode index.
        eigenvalue {float} -- lambda_n.
        beta_plus {complex} -- Propagation constant of the positive medium.
        beta_minus {complex} -- Propagation constant of the negative medium.
        kind {str} -- SurfacePlasmon or TrappedMode.
        coefficients {tuple} -- (u+, u-) for the half-line, (u+, u-_+, u-_-) for the slab.
        basis {TransverseBasis} -- Used to evaluate psi_n.

    Keyword Arguments:
        length {float} -- Slab thickness; None for the half-line. (default: {None})
        kappa {float} -- The contrast the mode was computed with. (default: {None})
    """

    def __init__(self, n, eigenvalue, beta_plus, beta_minus, kind, coefficients, basis, length=None, kappa=None):
        self.n = n
        self.eigenvalue = eigenvalue
        self.beta_plus = complex(beta_plus)
        self.beta_minus = complex(beta_minus)
        self.kind = kind
        self.coefficients = tuple(complex(value) for value in coefficients)
        self.basis = basis
        self.length = length
        self.kappa = kappa

    def field(self, x, y):
        """u(x, y): exterior u+ e^(-i beta+ x) for x < 0, the negative-medium modes for x >= 0."""

        psi = self.basis.eigenfunction(self.n, y)
        if x < 0:
            return self.coefficients[0] * cmath.exp(-1j * self.beta_plus * x) * psi
        if self.length is None:
            return self.coefficients[1] * cmath.exp(-1j * self.beta_minus * x) * psi
        return (self.coefficients[1] * cmath.exp(1j * self.beta_minus * x)
                + self.coefficients[2] * cmath.exp(-1j * self.beta_minus * x)) * psi

    def to_dict(self):
        return {
            "n": self.n,
            "lambda": self.eigenvalue,
            "type": self.kind,
            "beta_plus": [self.beta_plus.real, self.beta_plus.imag],
            "beta_minus": [self.beta_minus.real, self.beta_minus.imag],
        }

    def __repr__(self):
        return "KernelMode(n={}, lambda={}, type={})".format(self.n, self.eigenvalue, self.kind)


class ModeSystem3(object):
    """The slab system [[-1, 1, 1], [c, b, -b], [0, E, 1/E]] with c = kappa beta+, b = beta-, E = e^(i beta- L),
    held in scaled arithmetic because E reaches e^(L sqrt(lambda))."""

    def __init__(self, mode, kappa_beta_plus, beta_minus, length, rhs):
        self.mode = mode
        self.c = complex(kappa_beta_plus)
        self.b = complex(beta_minus)
        self.e_plus = ScaledValue.from_exp(1j * self.b * length)
        self.e_minus = ScaledValue.from_exp(-1j * self.b * length)
        zero, one = ScaledValue(), ScaledValue.one()
        self.matrix = [
            [-one, one, one],
            [ScaledValue(self.c), ScaledValue(self.b), ScaledValue(-self.b)],
            [zero, self.e_plus, self.e_minus],
        ]
        self.rhs = [ScaledValue.from_complex(value) for value in rhs]
        self.determinant = (self.c - self.b) * self.e_plus + (-self.b - self.c) * self.e_minus

    def adjugate(self):
        b, c, e_plus, e_minus = self.b, self.c, self.e_plus, self.e_minus
        two_cos = e_plus + e_minus
        two_i_sin = e_plus - e_minus
        return [
            [b * two_cos, two_i_sin, ScaledValue(-2.0 * b)],
            [-c * e_minus, -e_minus, ScaledValue(c - b)],
            [c * e_plus, e_plus, ScaledValue(-b - c)],
        ]

    def inverse(self, determinant=None):
        determinant = self.determinant if determinant is None else determinant
        return [[entry / determinant for entry in row] for row in self.adjugate()]

    def apply(self, x):
        return [sum((entry * value for entry, value in zip(row, x)), ScaledValue()) for row in self.matrix]

    def residual(self, x):
        """Backward error max|A x - rhs| / (max row sum |A| * max|x| + max|rhs|), in scaled arithmetic."""

        x = [ScaledValue.from_complex(value) for value in x]
        misfit = max(((value - target).log_abs() for value, target in zip(self.apply(x), self.rhs)))
        norm_a = max(float(np.logaddexp.reduce([entry.log_abs() for entry in row])) for row in self.matrix)
        norm_x = max(value.log_abs() for value in x)
        norm_b = max(value.log_abs() for value in self.rhs)
        scale = float(np.logaddexp(norm_a + norm_x, norm_b))
        if scale == float("-inf"):
            return 0.0
        return math.exp(misfit - scale) if misfit > float("-inf") else 0.0


class Waveguide(RegularityAnalysis):
    """This class contains the flat-interface waveguide analysis: propagation constants, the half-line and slab
    mode systems, kernel detection and the weighted-space diagnostics."""

    def beta(self, lam, k, side):
        """Propagation constant with the sign choices that select decaying or outgoing modes.

        Arguments:
            lam {float} -- Transverse eigenvalue.
            k {float} -- Wave number.
            side {str} -- plus (positive medium) or minus (negative medium).

        Returns:
            complex -- sqrt(k^2 - lam) when lam < k^2, otherwise +i sqrt(lam - k^2) (plus) or -i sqrt(lam - k^2)
                       (minus).
        """

        self._validate_choice("beta", "side", side, ["plus", "minus"])
        k_squared = k * k
        if abs(lam - k_squared) <= self._tolerance("cutoff") * max(abs(lam), k_squared):
            raise CutoffException(lam, k)
        if lam < k_squared:
            return complex(math.sqrt(k_squared - lam), 0.0)
        root = math.sqrt(lam - k_squared)
        return complex(0.0, root if side == "plus" else -root)

    def det_unbounded(self, config, n):
        """D_n = beta-_n - kappa beta+_n of the half-line system.

        Returns:
            complex -- Exactly zero for super-critical evanescent modes.
        """

        beta_plus, beta_minus, kappa = self._mode_betas(config, n)
        return beta_minus - kappa * beta_plus

    def kernel_scan_unbounded(self, config, n_max):
        """Kernel of the half-line problem among modes up to n_max.

        Returns:
            dict -- case, infinite_kernel, kernel_indices, kernel_modes, lambda_star, admissible, nearest_index,
                    nearest_lambda and gap.
        """

        case = self.classify_case(config)
        indices = list(config.basis.indices(n_max))
        report = {
            "case": case.value,
            "infinite_kernel": False,
            "kernel_indices": [],
            "kernel_modes": [],
            "lambda_star": None,
            "admissible": None,
            "nearest_index": None,
            "nearest_lambda": None,
            "gap": None,
        }
        threshold = max(config.k_plus, config.k_minus) ** 2

        if case is CaseLabel.SUPER_CRITICAL:
            report["infinite_kernel"] = True
            kernel = [n for n in indices if config.basis.eigenvalue(n) > threshold]
        elif case is CaseLabel.STANDARD:
            kappa2 = config.kappa ** 2
            lambda_star = (kappa2 * config.k_plus ** 2 - config.k_minus ** 2) / (kappa2 - 1.0)
            report["lambda_star"] = lambda_star
            report["admissible"] = lambda_star > threshold
            if indices:
                nearest = min(indices, key=lambda n: abs(config.basis.eigenvalue(n) - lambda_star))
                report["nearest_index"] = nearest
                report["nearest_lambda"] = config.basis.eigenvalue(nearest)
                report["gap"] = abs(report["nearest_lambda"] - lambda_star)
            kernel = []
            if report["admissible"]:
                tolerance = self._tolerance("match") * abs(lambda_star)
                kernel = [n for n in indices if abs(config.basis.eigenvalue(n) - lambda_star) <= tolerance]
        else:
            kernel = []

        report["kernel_indices"] = kernel
        report["kernel_modes"] = self._common_map(lambda n: self._unbounded_kernel_mode(config, n), kernel)
        self.log("kernel_scan_unbounded: {} kernel modes up to n={} ({}).".format(len(kernel), n_max, case.value))
        return report

    def solve_unbounded(self, config, n, f_n, g_n):
        """Solve the half-line system A (u+, u-) = (f, -i g) with A^-1 = (-1/D) [[beta-, 1], [kappa beta+, 1]].

        Arguments:
            config {WaveguideConfig} -- Half-line configuration.
            n {int} -- Mode index.
            f_n {complex} -- Jump data.
            g_n {complex} -- Flux data (d/dx orientation).

        Returns:
            tuple -- (u_plus, u_minus)
        """

        self._require_geometry("solve_unbounded", config, "halfline")
        beta_plus, beta_minus, kappa = self._mode_betas(config, n)
        determinant = beta_minus - kappa * beta_plus
        scale = abs(beta_minus) + abs(kappa * beta_plus)
        if abs(determinant) <= self._tolerance("near_zero") * scale:
            raise SingularModeException(n, determinant)

        matrix = np.array([[-1.0, 1.0], [kappa * beta_plus, -beta_minus]], dtype=complex)
        rhs = np.array([f_n, -1j * g_n], dtype=complex)
        inverse = -np.array([[beta_minus, 1.0], [kappa * beta_plus, 1.0]], dtype=complex) / determinant
        solution = inverse.dot(rhs)

        misfit = np.max(np.abs(matrix.dot(solution) - rhs))
        bound = np.linalg.norm(matrix, np.inf) * np.max(np.abs(solution)) + np.max(np.abs(rhs))
        if misfit > self._tolerance("solve_residual") * bound:
            raise NumericalAssertionException("solve_unbounded: residual {:.3e} of mode {}.".format(misfit, n))
        return complex(solution[0]), complex(solution[1])

    def predicted_inverse_unbounded(self, config, n, force_case=None):
        """Leading behaviour prefactor * M(p) * diag(1, -1) of the map (f, g) -> (u-, u+) for large lambda_n.

        M(p) = [[kappa lambda^(p/2), lambda^((p-1)/2)], [-lambda^(p/2), lambda^((p-1)/2)]].

        Returns:
            numpy.ndarray -- The 2x2 prediction.
        """

        case = self.classify_case(config, force_case)
        lam = config.basis.eigenvalue(n)
        if case is CaseLabel.STANDARD:
            p, prefactor = 0, 1.0 / (1.0 + config.kappa)
        elif case is CaseLabel.CRITICAL:
            p, prefactor = 2, 2.0 / (config.k_plus ** 2 - config.k_minus ** 2)
        else:
            raise InvalidParameterException("The super-critical half-line has no inverse to predict.")

        kappa = -1.0 if case is CaseLabel.CRITICAL else config.kappa
        matrix = np.array([[kappa * lam ** (p / 2.0), -lam ** ((p - 1) / 2.0)],
                           [-lam ** (p / 2.0), -lam ** ((p - 1) / 2.0)]], dtype=complex)
        return prefactor * matrix

    def det_slab(self, config, n):
        """Determinant of the slab system of mode n in scaled arithmetic.

        The super-critical determinant uses the closed forms 2 beta+ e^(i beta+ L) (evanescent) and
        -2 beta- e^(i beta- L) (propagating); every other regime uses det_slab_expanded.

        Returns:
            ScaledValue -- D_n.
        """

        self._require_geometry("det_slab", config, "slab")
        case = self.classify_case(config)
        beta_plus, beta_minus, _ = self._mode_betas(config, n)
        if case is CaseLabel.SUPER_CRITICAL:
            if beta_plus.imag > 0:
                return 2.0 * beta_plus * ScaledValue.from_exp(1j * beta_plus * config.length)
            return -2.0 * beta_minus * ScaledValue.from_exp(1j * beta_minus * config.length)
        return self.det_slab_expanded(config, n)

    def det_slab_expanded(self, config, n):
        """D_n = (kappa beta+ - beta-) e^(i beta- L) - (beta- + kappa beta+) e^(-i beta- L), i.e.
        -2 beta- cos(beta- L) + 2i kappa beta+ sin(beta- L) with the exponentials kept apart.

        Returns:
            ScaledValue -- D_n.
        """

        self._require_geometry("det_slab_expanded", config, "slab")
        return self._slab_system(config, n, 0.0, 0.0).determinant

    def solve_slab(self, config, n, f_n, g_n):
        """Solve the slab system with the closed-form adjugate inverse.

        The physical flux datum g (d/dx orientation) enters the system as -i g.

        Arguments:
            config {WaveguideConfig} -- Slab configuration.
            n {int} -- Mode index.
            f_n {complex} -- Jump data.
            g_n {complex} -- Flux data.

        Returns:
            tuple -- (u_plus, u_minus_plus, u_minus_minus) as ScaledValue.
        """

        system = self._slab_system(config, n, f_n, g_n)
        determinant = self.det_slab(config, n)
        scale = float(np.logaddexp(
            ScaledValue((system.c - system.b)).log_abs() + system.e_plus.log_abs(),
            ScaledValue((system.b + system.c)).log_abs() + system.e_minus.log_abs()))
        if determinant.log_abs() - scale <= math.log(self._tolerance("near_zero")):
            raise SingularModeException(n, complex(determinant))

        inverse = system.inverse(determinant)
        solution = [sum((entry * value for entry, value in zip(row, system.rhs)), ScaledValue()) for row in inverse]
        residual = system.residual(solution)
        if residual > self._tolerance("slab_residual"):
            raise NumericalAssertionException("solve_slab: residual {:.3e} of mode {}.".format(residual, n))
        return tuple(solution)

    def slab_inverse(self, config, n):
        """Exact inverse of the slab system of mode n (3x3 ScaledValue rows)."""

        system = self._slab_system(config, n, 0.0, 0.0)
        return system.inverse(self.det_slab(config, n))

    def predicted_slab_columns(self, config, n, force_case=None):
        """Leading behaviour of columns 1-2 of the slab inverse (acting on f and on -i g).

        Returns:
            list -- 3 rows of 2 ScaledValue entries.
        """

        self._require_geometry("predicted_slab_columns", config, "slab")
        case = self.classify_case(config, force_case)
        lam = config.basis.eigenvalue(n)
        root = math.sqrt(lam)
        decay = ScaledValue.from_exp(-2.0 * config.length * root)

        if case is CaseLabel.STANDARD:
            p, prefactor, kappa = 0, ScaledValue(1.0 / (1.0 + config.kappa)), config.kappa
        elif case is CaseLabel.CRITICAL:
            p, prefactor, kappa = 2, ScaledValue(2.0 / (config.k_plus ** 2 - config.k_minus ** 2)), -1.0
        else:
            p, prefactor, kappa = 0, 0.5 * ScaledValue.from_exp(2.0 * config.length * root), -1.0

        first = lam ** (p / 2.0)
        second = lam ** ((p - 1) / 2.0)
        rows = [
            [ScaledValue(-first), ScaledValue(-1j * second)],
            [decay * (-kappa * first), decay * (1j * second)],
            [ScaledValue(kappa * first), ScaledValue(-1j * second)],
        ]
        return [[prefactor * entry for entry in row] for row in rows]

    def trapped_mode_roots(self, config):
        """Certified roots of t cos(t L) + kappa s+ sin(t L), t = sqrt(k-^2 - lam), s+ = sqrt(lam - k+^2), on
        (k+^2, k-^2).

        Returns:
            list -- Increasing roots.
        """

        self._require_geometry("trapped_mode_roots", config, "slab")
        low, high = config.k_plus ** 2, config.k_minus ** 2
        if low >= high:
            return []

        kappa, length = config.kappa, config.length

        def dispersion(lam):
            t = math.sqrt(max(high - lam, 0.0))
            return t * math.cos(t * length) + kappa * math.sqrt(max(lam - low, 0.0)) * math.sin(t * length)

        scale = config.k_minus * (1.0 + abs(kappa))
        return self._bracket_roots("trapped_mode_roots", config, dispersion, low, high, scale)

    def trapped_mode_scan(self, config):
        """Trapped modes: roots of the trapped-mode dispersion relation that coincide with a transverse eigenvalue.

        Returns:
            list -- KernelMode instances of type TrappedMode.
        """

        roots = self.trapped_mode_roots(config)
        return self._match_spectrum(config, roots, "TrappedMode")

    def plasmon_roots(self, config, lambda_max):
        """Certified roots of s- cosh(s- L) + kappa s+ sinh(s- L), s+- = sqrt(lam - k+-^2), on (max k^2, lambda_max).

        The relation is evaluated divided by e^(s- L), which keeps it finite for any lambda.

        Returns:
            list -- Increasing roots.
        """

        self._require_geometry("plasmon_roots", config, "slab")
        low = max(config.k_plus, config.k_minus) ** 2
        if lambda_max <= low or config.kappa > 0:
            return []

        kappa, length = config.kappa, config.length
        k_plus2, k_minus2 = config.k_plus ** 2, config.k_minus ** 2

        # s-^2 - kappa^2 s+^2 = (1 - kappa^2) lam + (kappa^2 k+^2 - k-^2), linear in lam
        slope, offset = 1.0 - kappa ** 2, kappa ** 2 * k_plus2 - k_minus2
        tolerance = self._tolerance("regime")
        if abs(slope) <= tolerance and abs(offset) <= tolerance * max(1.0, k_minus2):
            # super-critical: the relation reduces to s e^(-2 s L) > 0
            self.log("plasmon_roots: Super-critical slab, no surface plasmon.")
            return []

        def dispersion(lam):
            s_minus = math.sqrt(max(lam - k_minus2, 0.0))
            s_plus = math.sqrt(max(lam - k_plus2, 0.0))
            damping = math.exp(-2.0 * s_minus * length)
            # s- + kappa s+ without cancellation (kappa < 0)
            denominator = s_minus - kappa * s_plus
            difference = (slope * lam + offset) / denominator if denominator > 0 else 0.0
            return 0.5 * difference * (1.0 + damping) - kappa * s_plus * damping

        scale = math.sqrt(lambda_max) * (1.0 + abs(kappa))
        return self._bracket_roots("plasmon_roots", config, dispersion, low, lambda_max, scale)

    def plasmon_scan(self, config, lambda_max):
        """Surface plasmons of the slab: plasmon roots that coincide with a transverse eigenvalue.

        Returns:
            list -- KernelMode instances of type SurfacePlasmon.
        """

        roots = self.plasmon_roots(config, lambda_max)
        return self._match_spectrum(config, roots, "SurfacePlasmon")

    def regularity_report(self, config, force_case=None, n_max=200, lambda_max=None):
        """Order of regularity lost for the half-line or the slab, with the exceptional kernel.

        Keyword Arguments:
            force_case {str} -- Override the computed label. (default: {None})
            n_max {int} -- Modes scanned for kernels. (default: {200})
            lambda_max {float} -- Upper end of the plasmon scan. (default: {lambda_{n_max}})

        Returns:
            RegularityReport -- The classification.
        """

        case = self.classify_case(config, force_case)
        p = REGULARITY_TABLE[config.geometry][case.value]
        notes = []

        if config.geometry == "halfline":
            scan = self.kernel_scan_unbounded(config, n_max)
            kernel = [mode.to_dict() for mode in scan["kernel_modes"]]
            if case is CaseLabel.SUPER_CRITICAL:
                notes.append("strongly ill-posed: every mode with lambda_n > max(k^2) is a surface plasmon")
                return RegularityReport("halfline", case.value, None, infinite=True, kernel=kernel,
                                        infinite_kernel=True, statement="kernel of infinite dimension", notes=notes)
            if scan["lambda_star"] is not None:
                notes.append("lambda* = {:.17g} ({})".format(
                    scan["lambda_star"], "admissible" if scan["admissible"] else "inadmissible"))
            statement = "(f, g) in H^(s+{p}) x H^(s+{p}-1) gives traces in H^s".format(p=p)
            return RegularityReport("halfline", case.value, p, kernel=kernel, statement=statement, notes=notes)

        if lambda_max is None:
            lambda_max = config.basis.eigenvalue(config.basis.last_index(n_max))
        kernel = [mode.to_dict() for mode in self.trapped_mode_scan(config) + self.plasmon_scan(config, lambda_max)]
        if case is CaseLabel.SUPER_CRITICAL:
            statement = "(f, g) must lie in the weighted space G^s_L x G^(s-1)_L (weights e^(2 L sqrt(lambda_n)))"
            return RegularityReport("slab", case.value, None, infinite=True, kernel=kernel, statement=statement)
        statement = "(f, g) in H^(s+{p}) x H^(s+{p}-1) gives traces in H^s".format(p=p)
        return RegularityReport("slab", case.value, p, kernel=kernel, statement=statement)

    def weighted_membership(self, coeffs, basis, s, L, n_max=None):
        """Partial sums of sum e^(2 L sqrt(lambda_n)) (1 + lambda_n)^s |u_n|^2 with a dyadic-block verdict.

        Arguments:
            coeffs {list} -- u_n for n = basis.first_index, ... (complex or ScaledValue).
            basis {TransverseBasis} -- The spectrum.
            s {float} -- Sobolev exponent.
            L {float} -- Weight length, nonnegative.

        Keyword Arguments:
            n_max {int} -- Use modes up to n_max. (default: {None})

        Returns:
            dict -- partial_sums (ScaledValue), log_partial_sums and verdict.
        """

        if L < 0:
            raise InvalidParameterException("The weighted_membership() L argument must be nonnegative.")
        coeffs = list(coeffs)
        last = basis.first_index + len(coeffs) - 1
        if n_max is not None:
            last = min(last, n_max)

        indices, log_terms = [], []
        for offset, n in enumerate(range(basis.first_index, last + 1)):
            lam = basis.eigenvalue(n)
            value = coeffs[offset]
            log_value = value.log_abs() if isinstance(value, ScaledValue) else (
                math.log(abs(value)) if value != 0 else float("-inf"))
            indices.append(n)
            log_terms.append(2.0 * L * math.sqrt(lam) + s * math.log1p(lam) + 2.0 * log_value)

        log_partial = self._log_partial_sums(log_terms)
        verdict = self._dyadic_verdict([n + 1 - basis.first_index for n in indices], log_terms)
        return {
            "partial_sums": [ScaledValue.from_exp(value) if value > float("-inf") else ScaledValue()
                             for value in log_partial],
            "log_partial_sums": log_partial,
            "verdict": verdict,
        }

    def source_distance_check(self, L, d, s=0.0):
        """Whether a source at distance d from the interface yields data in the weighted space of a slab of
        thickness L.

        Returns:
            dict -- well_posed, rate (blow-up exponent per sqrt(lambda_n), 0 when well posed) and verdict.
        """

        self._validate_positive("source_distance_check", L=L, d=d)
        if d >= 2.0 * L:
            return {
                "well_posed": True,
                "rate": 0.0,
                "verdict": "well-posed: (f, g) in G^{s}_L".format(s=s),
            }
        rate = 2.0 * L - d
        return {
            "well_posed": False,
            "rate": rate,
            "verdict": "exponential blow-up rate {:.17g} sqrt(lambda_n); traces are not distributions of finite "
                       "order".format(rate),
        }

    def waveguide_mode_table(self, config, n_range):
        """Rows for the waveguide CSV (header MODE_TABLE_HEADER)."""

        rows = []
        for n in range(int(n_range[0]), int(n_range[1]) + 1):
            beta_plus, beta_minus, _ = self._mode_betas(config, n)
            if config.geometry == "slab":
                determinant = self.det_slab(config, n)
            else:
                determinant = ScaledValue(self.det_unbounded(config, n))
            rows.append([n, config.basis.eigenvalue(n), beta_plus.real, beta_plus.imag, beta_minus.real,
                         beta_minus.imag, determinant.mantissa.real, determinant.mantissa.imag,
                         determinant.exponent])
        return rows

    def _mode_betas(self, config, n):
        """Internal method returning (beta+, beta-, kappa) with the regime's equalities imposed exactly."""

        case = classify_media(config.kappa, config.k_plus, config.k_minus, self._tolerance("regime"))
        kappa, k_plus, k_minus = config.kappa, config.k_plus, config.k_minus
        if case is not CaseLabel.STANDARD:
            kappa = -1.0
        if case is CaseLabel.SUPER_CRITICAL:
            k_minus = k_plus

        lam = config.basis.eigenvalue(n)
        return self.beta(lam, k_plus, "plus"), self.beta(lam, k_minus, "minus"), kappa

    def _slab_system(self, config, n, f_n, g_n):
        self._require_geometry("slab system", config, "slab")
        beta_plus, beta_minus, kappa = self._mode_betas(config, n)
        return ModeSystem3(n, kappa * beta_plus, beta_minus, config.length, (f_n, -1j * g_n, 0.0))

    def _unbounded_kernel_mode(self, config, n):
        beta_plus, beta_minus, kappa = self._mode_betas(config, n)
        return KernelMode(n, config.basis.eigenvalue(n), beta_plus, beta_minus, "SurfacePlasmon", (1.0, 1.0),
                          config.basis, kappa=kappa)

    def _bracket_roots(self, function_name, config, dispersion, low, high, scale):
        """Internal method locating sign changes on a grid refined around every eigenvalue of (low, high)."""

        nodes = [low] + [value for _, value in config.basis.eigenvalues_between(low, high)] + [high]
        subintervals = int(self._tolerance("scan_subintervals"))
        grid = []
        for start, stop in zip(nodes, nodes[1:]):
            if stop > start:
                grid.extend(np.linspace(start, stop, subintervals + 1)[:-1].tolist())
        grid.append(high)

        values = [dispersion(lam) for lam in grid]
        roots = []
        for (a, fa), (b, fb) in zip(zip(grid, values), zip(grid[1:], values[1:])):
            if fa == 0:
                # the scan interval is open
                if a == low:
                    continue
                root = a
            elif fa * fb < 0:
                root = optimize.bisect(dispersion, a, b, xtol=self._tolerance("root_xtol"))
            else:
                continue
            if roots and abs(root - roots[-1]) <= 10 * self._tolerance("root_xtol"):
                continue
            if abs(dispersion(root)) > self._tolerance("root_residual") * max(1.0, scale):
                raise NumericalAssertionException("{}: root {} failed its residual certificate.".format(
                    function_name, root))
            roots.append(root)

        self.log("{}: {} roots on ({}, {}).".format(function_name, len(roots), low, high))
        return roots

    def _match_spectrum(self, config, roots, kind):
        modes = []
        for root in roots:
            tolerance = self._tolerance("match") * abs(root)
            for n, value in config.basis.eigenvalues_between(root - 2 * tolerance, root + 2 * tolerance):
                if abs(value - root) <= tolerance:
                    modes.append(self._slab_kernel_mode(config, n, kind))
        return modes

    def _slab_kernel_mode(self, config, n, kind):
        beta_plus, beta_minus, kappa = self._mode_betas(config, n)
        phase = cmath.exp(1j * beta_minus * config.length)
        coefficients = (2j * cmath.sin(beta_minus * config.length), -1.0 / phase, phase)
        return KernelMode(n, config.basis.eigenvalue(n), beta_plus, beta_minus, kind, coefficients, config.basis,
                          length=config.length, kappa=kappa)

    @staticmethod
    def _require_geometry(function_name, config, geometry):
        if not isinstance(config, WaveguideConfig):
            raise InvalidTypeException("The {}() config argument must be a WaveguideConfig.".format(function_name))
        if config.geometry != geometry:
            raise InvalidParameterException("{}() needs a {} configuration, got {}.".format(
                function_name, geometry, config.geometry))


def _positive(name, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Real) or not math.isfinite(value) or value <= 0:
        raise InvalidParameterException("The {} value must be a positive real number, got {}.".format(name, value))
    return float(value)

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
This module contains the signflip-modal FieldSynthesis class.
"""

import cmath
import csv
import math
import warnings
from collections.abc import Mapping

import numpy as np
from scipy import integrate

from .core import CSV_VERSION_LINE, Core
from .disk_ball import DiskBallConfig
from .exceptions import DomainException, InvalidParameterException, InvalidTypeException, TruncationWarning
from .scaled import ScaledValue
from .waveguide import KernelMode, WaveguideConfig

GRID_HEADER_2D = ["x", "y", "re", "im", "region"]
GRID_HEADER_3D = ["x", "y", "z", "re", "im", "region"]

_GEOMETRIES = ["disk2d", "ball3d", "halfline", "slab"]
_REGIONS = ["minus", "plus"]
_MAX_SHELLS = 1000
_MIN_RADIUS = 1e-8


class ModalField(object):
    """A truncated modal series on both sides of the interface.

    Coefficients are keyed by n (disk2d, halfline, slab) or by (l, m) (ball3d) and hold (u^-, u^+) for the disk and
    the ball, (u^+, u^-) for the half-line and (u^+, u^-_+, u^-_-) for the slab.

    Arguments:
        geometry {str} -- disk2d, ball3d, halfline or slab.
        coefficients {dict} -- Mode key to coefficient tuple.

    Keyword Arguments:
        config {object} -- The DiskBallConfig or WaveguideConfig the coefficients solve. (default: {None})
        basis {TransverseBasis} -- Transverse basis when no config is given. (default: {None})
        length {float} -- Slab thickness when no config is given. (default: {None})
        kappa {float} -- Contrast when no config is given. (default: {None})
        betas {dict} -- Mode n to (beta+, beta-) for the waveguides. (default: {None})
    """

    def __init__(self, geometry, coefficients, config=None, basis=None, length=None, kappa=None, betas=None):
        if geometry not in _GEOMETRIES:
            raise InvalidParameterException("The geometry must be one of the following: {}.".format(_GEOMETRIES))
        if not coefficients:
            raise InvalidParameterException("A ModalField needs at least one mode.")
        for key, values in coefficients.items():
            for value in values:
                if not _finite(value):
                    raise DomainException("The coefficients of mode {} are not finite.".format(key))
        if geometry in ("halfline", "slab") and not betas:
            raise InvalidParameterException("A waveguide field needs the propagation constants of its modes.")

        self.geometry = geometry
        self.coefficients = dict(coefficients)
        self.config = config
        self.basis = basis if basis is not None else getattr(config, "basis", None)
        self.length = length if length is not None else getattr(config, "length", None)
        self.kappa = kappa if kappa is not None else getattr(config, "kappa", None)
        self.betas = dict(betas or {})
        self._radial_cache = {}

    @property
    def n_modes(self):
        """Number of shells: N + 1 for |n| <= N (disk) or l <= N (ball), the number of modes otherwise."""

        if self.geometry == "disk2d":
            return max(abs(n) for n in self.coefficients) + 1
        if self.geometry == "ball3d":
            return max(ell for ell, _ in self.coefficients) + 1
        return len(self.coefficients)

    def shells(self):
        """Mode keys grouped by shell, innermost first."""

        groups = {}
        for key in self.coefficients:
            if self.geometry == "disk2d":
                shell = abs(key)
            elif self.geometry == "ball3d":
                shell = key[0]
            else:
                shell = key
            groups.setdefault(shell, []).append(key)
        return [sorted(groups[shell]) for shell in sorted(groups)]

    def trace_coefficients(self, region):
        """Coefficients of the trace on the interface for one side, in mode order."""

        traces = []
        for shell in self.shells():
            for key in shell:
                values = self.coefficients[key]
                if self.geometry in ("disk2d", "ball3d"):
                    traces.append(complex(values[0] if region == "minus" else values[1]))
                elif self.geometry == "halfline":
                    traces.append(complex(values[1] if region == "minus" else values[0]))
                elif region == "minus":
                    traces.append(complex(ScaledValue.from_complex(values[1]) + ScaledValue.from_complex(values[2])))
                else:
                    traces.append(complex(values[0]))
        return traces

    def __repr__(self):
        return "ModalField(geometry={}, n_modes={})".format(self.geometry, self.n_modes)


class FieldSynthesis(Core):
    """This class contains the reconstruction of fields from their modal coefficients and the physical-space
    checks of the transmission conditions."""

    def angular_basis(self, kind, *args):
        """Evaluate one function of an angular or transverse basis.

        Arguments:
            kind {str} -- fourier (n, theta), spherical_harmonic (l, m, theta, phi) or transverse (n, y, basis).

        Returns:
            complex -- The value.
        """

        self._validate_choice("angular_basis", "kind", kind, ["fourier", "spherical_harmonic", "transverse"])
        if kind == "fourier":
            n, theta = args
            return cmath.exp(1j * n * theta) / math.sqrt(2.0 * math.pi)
        if kind == "spherical_harmonic":
            ell, m, theta, phi = args
            if ell < 0 or abs(m) > ell:
                raise InvalidParameterException("Spherical harmonics need |m| <= l, got l={} m={}.".format(ell, m))
            if not 0.0 <= theta <= math.pi or not 0.0 <= phi < 2.0 * math.pi:
                raise DomainException("Spherical angles must satisfy 0 <= theta <= pi and 0 <= phi < 2 pi.")
            return _spherical_harmonic(ell, m, theta, phi)
        n, y, basis = args
        return complex(basis.eigenfunction(n, y))

    def solve_field(self, config, f_coeffs, g_coeffs, n_modes=None):
        """Solve every mode of the data and collect the coefficients as a ModalField.

        Data are callables of the mode key or mappings from it (missing keys are zero). Without n_modes the series
        stops once three consecutive shells each contribute less than `truncation_stop` of the running norm.

        Arguments:
            config {object} -- DiskBallConfig or WaveguideConfig.
            f_coeffs {dict} -- Jump data per mode.
            g_coeffs {dict} -- Flux data per mode.

        Keyword Arguments:
            n_modes {int} -- Number of shells to solve. (default: {None})

        Returns:
            ModalField -- The synthesized field.
        """

        if isinstance(config, DiskBallConfig):
            geometry = config.geometry
        elif isinstance(config, WaveguideConfig):
            geometry = config.geometry
        else:
            raise InvalidTypeException("The solve_field() config argument must be a DiskBallConfig or a "
                                       "WaveguideConfig.")
        if n_modes is not None and (not isinstance(n_modes, int) or n_modes < 1):
            raise InvalidParameterException("The solve_field() n_modes argument must be a positive integer.")

        first = config.basis.first_index if geometry in ("halfline", "slab") else 0
        last = None
        if geometry in ("halfline", "slab") and config.basis.provenance == "user":
            last = config.basis.last_index()

        coefficients, betas = {}, {}
        running, quiet_shells = 0.0, 0
        shell = first
        while True:
            if n_modes is not None and shell - first >= n_modes:
                break
            if last is not None and shell > last:
                break
            if n_modes is None and shell - first >= _MAX_SHELLS:
                warnings.warn("solve_field: stopped after {} shells without convergence.".format(_MAX_SHELLS),
                              TruncationWarning)
                break

            contribution = 0.0
            for key in _shell_keys(geometry, shell):
                values = self._solve_key(config, geometry, key, _datum(f_coeffs, key), _datum(g_coeffs, key))
                coefficients[key] = values
                contribution += sum(math.exp(2.0 * _log_abs(value)) for value in values)
                if geometry in ("halfline", "slab"):
                    beta_plus, beta_minus, _ = self._mode_betas(config, key)
                    betas[key] = (beta_plus, beta_minus)

            running += contribution
            if n_modes is None:
                if contribution <= self._tolerance("truncation_stop") ** 2 * running:
                    quiet_shells += 1
                else:
                    quiet_shells = 0
                if quiet_shells >= 3:
                    break
            shell += 1

        self.log("solve_field: Solved {} modes of the {} geometry.".format(len(coefficients), geometry))
        return ModalField(geometry, coefficients, config=config, betas=betas)

    def evaluate(self, field, point, region=None):
        """Value of the truncated series at a point.

        Points are (r, theta) for disk2d, (r, theta, phi) for ball3d and (x, y) for the waveguides.

        Keyword Arguments:
            region {str} -- minus or plus. Inferred from the point when omitted; the interface defaults to minus.
                            (default: {None})

        Returns:
            complex -- u(point).
        """

        return self._synthesize(field, point, region, derivative=False)

    def evaluate_normal_derivative(self, field, point, region=None):
        """Term-by-term derivative of the series: d/dr for the disk and the ball, d/dx for the waveguides."""

        return self._synthesize(field, point, region, derivative=True)

    def transmission_residual(self, field, data, sample_points):
        """Maximum jump and flux misfits on interface samples.

        Arguments:
            field {ModalField} -- Both sides from the same solve.
            data {tuple} -- (f, g) as callables of the interface point, or as mode-coefficient mappings.
            sample_points {list} -- theta (disk), (theta, phi) (ball) or y (waveguides).

        Returns:
            tuple -- (max |u^- - u^+ - f|, max |d_n u^- - kappa d_n u^+ - g|)
        """

        if field.kappa is None:
            raise InvalidParameterException("transmission_residual() needs a field with a contrast.")
        f_data, g_data = data
        jump_residual, flux_residual = 0.0, 0.0
        for sample in sample_points:
            point = self._interface_point(field, sample)
            jump = self.evaluate(field, point, "minus") - self.evaluate(field, point, "plus")
            flux = (self.evaluate_normal_derivative(field, point, "minus")
                    - field.kappa * self.evaluate_normal_derivative(field, point, "plus"))
            jump_residual = max(jump_residual, abs(jump - self._interface_datum(field, f_data, sample)))
            flux_residual = max(flux_residual, abs(flux - self._interface_datum(field, g_data, sample)))

        self.log("transmission_residual: jump {:.3e}, flux {:.3e} on {} samples.".format(
            jump_residual, flux_residual, len(sample_points)))
        return jump_residual, flux_residual

    def end_residual(self, field, sample_points):
        """max |u^-(L, y)| of a slab field over the samples y."""

        if field.geometry != "slab":
            raise InvalidParameterException("end_residual() needs a slab field.")
        return max(abs(self.evaluate(field, (field.length, y), "minus")) for y in sample_points)

    def parseval_check(self, field, region="minus"):
        """Compare the L2 norm of the synthesized interface trace with the l2 norm of its coefficients.

        The trapezoidal rule on 4 N uniform nodes is exact for the trigonometric products involved; the sphere uses
        Gauss-Legendre nodes in cos(theta).

        Returns:
            dict -- trace_norm, coefficient_norm, relative_gap and passed (gap <= 1e-8).
        """

        self._validate_choice("parseval_check", "region", region, _REGIONS)
        nodes = max(4 * field.n_modes, 16)
        coefficient_norm = math.sqrt(sum(abs(value) ** 2 for value in field.trace_coefficients(region)))

        if field.geometry == "disk2d":
            thetas = np.linspace(0.0, 2.0 * math.pi, nodes + 1)
            values = [abs(self.evaluate(field, (field.config.radius, theta), region)) ** 2 for theta in thetas]
            trace_norm = math.sqrt(integrate.trapezoid(values, thetas))
        elif field.geometry == "ball3d":
            cosines, weights = np.polynomial.legendre.leggauss(nodes)
            phis = np.linspace(0.0, 2.0 * math.pi, nodes, endpoint=False)
            total = 0.0
            for cosine, weight in zip(cosines, weights):
                theta = math.acos(float(cosine))
                ring = sum(abs(self.evaluate(field, (field.config.radius, theta, phi), region)) ** 2 for phi in phis)
                total += weight * ring * 2.0 * math.pi / nodes
            trace_norm = math.sqrt(total)
        else:
            if field.basis.provenance == "user":
                raise InvalidParameterException("parseval_check() needs an analytic transverse basis.")
            ys = np.linspace(0.0, field.basis.length, nodes + 1)
            values = [abs(self.evaluate(field, (0.0, y), region)) ** 2 for y in ys]
            trace_norm = math.sqrt(integrate.trapezoid(values, ys))

        gap = abs(trace_norm - coefficient_norm) / coefficient_norm if coefficient_norm > 0 else trace_norm
        return {
            "trace_norm": trace_norm,
            "coefficient_norm": coefficient_norm,
            "relative_gap": gap,
            "passed": gap <= 1e-8,
        }

    def kernel_field(self, kernel_mode):
        """Wrap a KernelMode as a single-mode ModalField."""

        if not isinstance(kernel_mode, KernelMode):
            raise InvalidTypeException("The kernel_field() kernel_mode argument must be a KernelMode.")
        geometry = "halfline" if kernel_mode.length is None else "slab"
        return ModalField(geometry, {kernel_mode.n: kernel_mode.coefficients}, basis=kernel_mode.basis,
                          length=kernel_mode.length, kappa=kernel_mode.kappa,
                          betas={kernel_mode.n: (kernel_mode.beta_plus, kernel_mode.beta_minus)})

    def grid_rows(self, field, points):
        """Rows `x,y[,z],re,im,region` of the field on a list of points, in the order of `points`."""

        def row(point):
            region = self._infer_region(field, point, None)
            value = self.evaluate(field, point, region)
            return _cartesian(field.geometry, point) + [value.real, value.imag, region]

        return self._common_map(row, points)

    def write_grid_csv(self, path, field, points):
        header = GRID_HEADER_3D if field.geometry == "ball3d" else GRID_HEADER_2D
        with open(path, "w", newline="") as handle:
            handle.write(CSV_VERSION_LINE + "\n")
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in self.grid_rows(field, points):
                writer.writerow(["{:.17g}".format(value) for value in row[:-1]] + [row[-1]])

    def _solve_key(self, config, geometry, key, f_value, g_value):
        """Internal method returning the coefficient tuple of one mode key."""

        if geometry == "disk2d":
            return self.solve_mode(config, key, f_value, g_value)
        if geometry == "ball3d":
            return self.solve_mode(config, key[0], f_value, g_value)
        if f_value == 0 and g_value == 0:
            return (0j, 0j) if geometry == "halfline" else (ScaledValue(), ScaledValue(), ScaledValue())
        if geometry == "halfline":
            return self.solve_unbounded(config, key, f_value, g_value)
        return self.solve_slab(config, key, f_value, g_value)

    def _synthesize(self, field, point, region, derivative):
        if not isinstance(field, ModalField):
            raise InvalidTypeException("The field argument must be a ModalField.")
        region = self._infer_region(field, point, region)

        shells = field.shells()
        running = 0j
        last_shell = 0j
        for shell in shells:
            last_shell = sum(self._term(field, key, point, region, derivative) for key in shell)
            running += last_shell

        # a single-shell field is exact, not truncated
        if len(shells) > 1 and abs(last_shell) > self._tolerance("truncation_warning") * abs(running):
            warnings.warn("The last shell contributes {:.3e} of the series at {}.".format(
                abs(last_shell) / abs(running) if running else float("inf"), point), TruncationWarning)
        return running

    def _term(self, field, key, point, region, derivative):
        """Internal method returning one mode's contribution at a point."""

        values = field.coefficients[key]
        geometry = field.geometry

        if geometry == "disk2d":
            r, theta = point
            coefficient = values[0] if region == "minus" else values[1]
            if coefficient == 0:
                return 0j
            angular = cmath.exp(1j * key * theta) / math.sqrt(2.0 * math.pi)
            return coefficient * angular * self._radial(field, abs(key), r, region, derivative)

        if geometry == "ball3d":
            r, theta, phi = point
            coefficient = values[0] if region == "minus" else values[1]
            if coefficient == 0:
                return 0j
            ell, m = key
            return coefficient * _spherical_harmonic(ell, m, theta, phi) * self._radial(field, ell, r, region,
                                                                                        derivative)

        x, y = point
        beta_plus, beta_minus = field.betas[key]
        values = [ScaledValue.from_complex(value) for value in values]
        psi = field.basis.eigenfunction(key, y)
        if region == "plus":
            term = values[0] * ScaledValue.from_exp(-1j * beta_plus * x)
            if derivative:
                term = term * (-1j * beta_plus)
        elif geometry == "halfline":
            term = values[1] * ScaledValue.from_exp(-1j * beta_minus * x)
            if derivative:
                term = term * (-1j * beta_minus)
        else:
            forward = values[1] * ScaledValue.from_exp(1j * beta_minus * x)
            backward = values[2] * ScaledValue.from_exp(-1j * beta_minus * x)
            term = (forward - backward) * (1j * beta_minus) if derivative else forward + backward
        return complex(term) * psi

    def _radial(self, field, order, r, region, derivative):
        """Internal method returning C(k r)/C(k R) or its r-derivative as a complex number."""

        config = field.config
        spherical = field.geometry == "ball3d"
        k = config.k_minus if region == "minus" else config.k_plus
        which = "J" if region == "minus" else "H"

        cache_key = (order, region)
        if cache_key not in field._radial_cache:
            field._radial_cache[cache_key] = self._radial_value(order, k * config.radius, which, spherical)
        denominator = field._radial_cache[cache_key]

        if derivative:
            if r < _MIN_RADIUS:
                raise DomainException("Normal derivatives are only available for r >= {}.".format(_MIN_RADIUS))
            if spherical:
                numerator = self.spherical(order, k * r, "j'" if which == "J" else "h'")
            else:
                numerator = self.derivative(order, k * r, which)
            return complex(k * numerator / denominator)
        if r == config.radius:
            return 1.0
        return complex(self._radial_value(order, k * r, which, spherical) / denominator)

    def _radial_value(self, order, argument, which, spherical):
        if which == "J" and argument == 0:
            return ScaledValue.one() if order == 0 else ScaledValue()
        if spherical:
            return self.spherical(order, argument, "j" if which == "J" else "h")
        if which == "J":
            return self.bessel_j(order, argument)
        return self.hankel1(order, argument)

    def _infer_region(self, field, point, region):
        """Internal method resolving the region of a point; a stated region must match the point."""

        if region is not None:
            self._validate_choice("evaluate", "region", region, _REGIONS)

        if field.geometry in ("disk2d", "ball3d"):
            r = point[0]
            if r < 0:
                raise DomainException("The radius of a point must be nonnegative.")
            interface = field.config.radius
            inferred = "minus" if r < interface else ("plus" if r > interface else None)
        else:
            x = point[0]
            if field.geometry == "slab" and x > field.length:
                raise DomainException("The point x={} lies beyond the slab end x={}.".format(x, field.length))
            inferred = "plus" if x < 0 else ("minus" if x > 0 else None)

        if region is None:
            return inferred or "minus"
        if inferred is not None and inferred != region:
            raise DomainException("The point {} lies in the {} region, not in the {} region.".format(
                point, inferred, region))
        return region

    @staticmethod
    def _interface_point(field, sample):
        if field.geometry == "disk2d":
            return (field.config.radius, sample)
        if field.geometry == "ball3d":
            return (field.config.radius,) + tuple(sample)
        return (0.0, sample)

    def _interface_datum(self, field, data, sample):
        """Internal method evaluating interface data given as a callable or as mode coefficients."""

        if data is None:
            return 0j
        if callable(data):
            return complex(data(sample))
        total = 0j
        for key in field.coefficients:
            value = _datum(data, key)
            if value == 0:
                continue
            if field.geometry == "disk2d":
                total += value * cmath.exp(1j * key * sample) / math.sqrt(2.0 * math.pi)
            elif field.geometry == "ball3d":
                total += value * _spherical_harmonic(key[0], key[1], sample[0], sample[1])
            else:
                total += value * field.basis.eigenfunction(key, sample)
        return total


def _spherical_harmonic(ell, m, theta, phi):
    """Y_l^m(theta, phi) with the Condon-Shortley phase, via the normalized (l - m)-recurrence."""

    order = abs(m)
    x = math.cos(theta)
    s = math.sin(theta)

    # normalized P_m^m, then upward in l
    current = 1.0 / math.sqrt(4.0 * math.pi)
    for i in range(1, order + 1):
        current *= -math.sqrt((2.0 * i + 1.0) / (2.0 * i)) * s
    if ell > order:
        previous, current = current, x * math.sqrt(2.0 * order + 3.0) * current
        for degree in range(order + 2, ell + 1):
            a = math.sqrt((4.0 * degree * degree - 1.0) / (degree * degree - order * order))
            b = math.sqrt(((degree - 1.0) ** 2 - order * order) / (4.0 * (degree - 1.0) ** 2 - 1.0))
            previous, current = current, a * (x * current - b * previous)

    value = current * cmath.exp(1j * order * phi)
    if m < 0:
        return (-1) ** order * value.conjugate()
    return value


def _shell_keys(geometry, shell):
    if geometry == "disk2d":
        return [0] if shell == 0 else [-shell, shell]
    if geometry == "ball3d":
        return [(shell, m) for m in range(-shell, shell + 1)]
    return [shell]


def _datum(data, key):
    if data is None:
        return 0j
    if callable(data):
        return complex(data(key))
    if isinstance(data, Mapping):
        return complex(data.get(key, 0.0))
    raise InvalidTypeException("Modal data must be a callable or a mapping, got {}.".format(type(data)))


def _cartesian(geometry, point):
    if geometry == "disk2d":
        r, theta = point
        return [r * math.cos(theta), r * math.sin(theta)]
    if geometry == "ball3d":
        r, theta, phi = point
        return [r * math.sin(theta) * math.cos(phi), r * math.sin(theta) * math.sin(phi), r * math.cos(theta)]
    return [float(point[0]), float(point[1])]


def _log_abs(value):
    if isinstance(value, ScaledValue):
        return value.log_abs()
    magnitude = abs(value)
    return math.log(magnitude) if magnitude > 0 else float("-inf")


def _finite(value):
    if isinstance(value, ScaledValue):
        return True
    value = complex(value)
    return math.isfinite(value.real) and math.isfinite(value.imag)

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
This module contains the signflip-modal SpecialFunctions class.
"""

import csv
import math
import numbers

import mpmath
import numpy as np
from scipy import special

from .core import CSV_VERSION_LINE, Core
from .exceptions import (DomainException, InvalidOrderException, InvalidParameterException, InvalidTypeException,
                         NearZeroDenominatorException, PrecisionUnreachableException)
from .scaled import ScaledValue

# recurrences rescale by e^-230 (about 1e-100) once a value passes 1e100
_RESCALE_LIMIT = 1e100
_RESCALE_STEP = 230
# below this argument the leading small-argument forms are exact in double precision
_TINY_ARGUMENT = 1e-8
_CF_EPS = 1e-16
_CF_TINY = 1e-300
_MAX_CF_ITERATIONS = 100000

_ORACLE_MAX_DIGITS = 100
_ORACLE_MAX_ORDER = 300
_ORACLE_MAX_ARGUMENT = 100.0


class Order(object):
    """A Bessel order restricted to integers n (cylindrical problems) or half-integers l + 1/2 (spherical problems).

    Arguments:
        value {float} -- The order. Accepts an existing Order.
    """

    __slots__ = ("value", "kind", "base", "index")

    def __init__(self, value):
        if isinstance(value, Order):
            value = value.value
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise InvalidTypeException("A Bessel order must be a real number, got {}.".format(type(value)))
        if value < 0:
            raise InvalidOrderException("A Bessel order must be nonnegative, got {}.".format(value))

        twice = 2 * float(value)
        rounded = int(round(twice))
        if abs(twice - rounded) > 1e-9:
            raise InvalidOrderException(
                "A Bessel order must be an integer or a half-integer, got {}.".format(value))

        if rounded % 2 == 0:
            self.kind = "integer"
            self.base = 0.0
            self.index = rounded // 2
        else:
            self.kind = "half-integer"
            self.base = 0.5
            self.index = (rounded - 1) // 2
        self.value = self.base + self.index

    def __repr__(self):
        return "Order({})".format(self.value)


def _double_factorial(n):
    """n!! for n >= -1 as an exact int."""

    result = 1
    for factor in range(n, 0, -2):
        result *= factor
    return result


def _gamma_scaled(nu):
    """Gamma(nu) for a positive integer or half-integer nu, from exact factorial products."""

    order = Order(nu)
    if order.kind == "integer":
        if order.index < 1:
            raise InvalidOrderException("Gamma has a pole at {}.".format(nu))
        return ScaledValue.from_mpmath(mpmath.mpf(math.factorial(order.index - 1)))

    ell = order.index
    with mpmath.workdps(30):
        value = mpmath.sqrt(mpmath.pi) * mpmath.mpf(_double_factorial(2 * ell - 1)) / mpmath.mpf(2) ** ell
    return ScaledValue.from_mpmath(value)


def _small_argument_j(nu, r):
    x = 0.5 * r
    leading = ScaledValue.from_exp(nu * math.log(x)) / _gamma_scaled(nu + 1)
    return leading * (1.0 - x * x / (nu + 1))


def _small_argument_y(nu, r):
    if nu == 0:
        return ScaledValue.from_complex(2.0 / math.pi * (math.log(0.5 * r) + np.euler_gamma))
    return -_gamma_scaled(nu) * ScaledValue.from_exp(nu * math.log(2.0 / r)) / math.pi


def _j_range(base, n_lo, n_hi, r):
    """J at orders base + n for n_lo <= n <= n_hi, by downward recurrence from well above max(order, r).

    Integer orders are normalized with 1 = J_0 + 2 sum J_2k, half-integer orders with
    sum (2n + 1) j_n^2 = 1; the latter fixes only the modulus so the sign is read from j_0 or j_1.
    """

    if r < _TINY_ARGUMENT:
        return dict((n, _small_argument_j(base + n, r)) for n in range(n_lo, n_hi + 1))

    top = max(base + n_hi, r)
    n_start = int(math.ceil(top)) + 20 + int(math.ceil(10.0 * math.sqrt(top)))
    integer = base == 0.0

    f_next, f, scale = 0.0, 1.0, 0
    norm = 0.0
    raw = {}
    for n in range(n_start, -1, -1):
        if n_lo <= n <= n_hi or n <= 1:
            raw[n] = (f, scale)
        if integer:
            if n == 0:
                norm += f
            elif n % 2 == 0:
                norm += 2.0 * f
        else:
            norm += (2 * n + 1) * f * f
        if n == 0:
            break

        f_next, f = f, 2.0 * (base + n) / r * f - f_next
        if abs(f) > _RESCALE_LIMIT:
            factor = math.exp(-_RESCALE_STEP)
            f *= factor
            f_next *= factor
            norm *= factor if integer else factor * factor
            scale += _RESCALE_STEP

    if integer:
        normalizer = ScaledValue(norm, scale)
    else:
        normalizer = ScaledValue(math.sqrt(math.pi / (2.0 * r) * norm), scale)
        # J_1/2 is proportional to sin r, J_3/2 to sin r / r - cos r
        closed = (math.sin(r), math.sin(r) / r - math.cos(r))
        pick = 0 if abs(closed[0]) >= abs(closed[1]) else 1
        if (closed[pick] > 0) != (raw[pick][0] > 0):
            normalizer = -normalizer

    return dict((n, ScaledValue(raw[n][0], raw[n][1]) / normalizer) for n in range(n_lo, n_hi + 1))


def _y_range(base, n_hi, r):
    """Y at orders base + n for 0 <= n <= n_hi by upward recurrence (the dominant direction)."""

    if r < _TINY_ARGUMENT:
        return [_small_argument_y(base + n, r) for n in range(n_hi + 1)]

    if base == 0.0:
        previous, current = float(special.y0(r)), float(special.y1(r))
    else:
        c = math.sqrt(2.0 / (math.pi * r))
        previous, current = -c * math.cos(r), -c * (math.cos(r) / r + math.sin(r))

    values = [ScaledValue(previous), ScaledValue(current)]
    scale = 0
    for n in range(1, n_hi):
        previous, current = current, 2.0 * (base + n) / r * current - previous
        if abs(current) > _RESCALE_LIMIT:
            factor = math.exp(-_RESCALE_STEP)
            current *= factor
            previous *= factor
            scale += _RESCALE_STEP
        values.append(ScaledValue(current, scale))
    return values[:n_hi + 1]


def _u_polynomial(k, p):
    if k == 0:
        return 1.0
    if k == 1:
        return (3 * p - 5 * p ** 3) / 24.0
    if k == 2:
        return (81 * p ** 2 - 462 * p ** 4 + 385 * p ** 6) / 1152.0
    return (30375 * p ** 3 - 369603 * p ** 5 + 765765 * p ** 7 - 425425 * p ** 9) / 414720.0


def _v_polynomial(k, p):
    if k == 0:
        return 1.0
    if k == 1:
        return (-9 * p + 7 * p ** 3) / 24.0
    if k == 2:
        return (-135 * p ** 2 + 594 * p ** 4 - 455 * p ** 6) / 1152.0
    return (-42525 * p ** 3 + 451737 * p ** 5 - 883575 * p ** 7 + 475475 * p ** 9) / 414720.0


class SpecialFunctions(Core):
    """This class contains the cylinder and spherical Bessel machinery: scaled evaluations at large order, stable
    logarithmic-derivative ratios, the large-order and Debye expansions and an arbitrary-precision series oracle."""

    def bessel_j(self, nu, r):
        """Bessel function of the first kind J_nu(r).

        Arguments:
            nu {float} -- Integer or half-integer order.
            r {float} -- Nonnegative argument. r = 0 is handled analytically.

        Returns:
            ScaledValue -- J_nu(r), real-valued.
        """

        order = self._order("bessel_j", nu)
        r = self._argument("bessel_j", r, allow_zero=True)
        if r == 0:
            return ScaledValue.one() if order.value == 0 else ScaledValue()
        return _j_range(order.base, order.index, order.index, r)[order.index]

    def bessel_y(self, nu, r):
        """Bessel function of the second kind Y_nu(r).

        Arguments:
            nu {float} -- Integer or half-integer order.
            r {float} -- Positive argument.

        Returns:
            ScaledValue -- Y_nu(r), real-valued.
        """

        order = self._order("bessel_y", nu)
        r = self._argument("bessel_y", r)
        return _y_range(order.base, order.index, r)[order.index]

    def hankel1(self, nu, r):
        """Hankel function of the first kind H_nu = J_nu + i Y_nu.

        Arguments:
            nu {float} -- Integer or half-integer order.
            r {float} -- Positive argument.

        Returns:
            ScaledValue -- H_nu(r).
        """

        order = self._order("hankel1", nu)
        r = self._argument("hankel1", r)
        return self._cylinder("H", order, order.index, order.index, r)[order.index]

    def derivative(self, nu, r, which="J"):
        """First derivative of a cylinder function, from C'_nu = C_{nu-1} - (nu/r) C_nu.

        Orders below one use the equivalent C'_nu = (nu/r) C_nu - C_{nu+1}.

        Arguments:
            nu {float} -- Integer or half-integer order.
            r {float} -- Positive argument.

        Keyword Arguments:
            which {str} -- The cylinder function. (default: {J}) (choices: {J, Y, H})

        Returns:
            ScaledValue -- C'_nu(r).
        """

        self._validate_choice("derivative", "which", which, ["J", "Y", "H"])
        order = self._order("derivative", nu)
        r = self._argument("derivative", r)
        return self._value_and_derivative(which, order, r)[1]

    def spherical(self, ell, r, which="j"):
        """Spherical Bessel and Hankel functions through c_l(r) = sqrt(pi / 2r) C_{l+1/2}(r).

        Arguments:
            ell {int} -- Nonnegative integer degree.
            r {float} -- Positive argument.

        Keyword Arguments:
            which {str} -- The function. Primed names are derivatives. (default: {j}) (choices: {j, y, h, j', y', h'})

        Returns:
            ScaledValue -- The requested value.
        """

        valid_which = ["j", "y", "h", "j'", "y'", "h'"]
        self._validate_choice("spherical", "which", which, valid_which)
        ell = self._degree("spherical", ell)
        r = self._argument("spherical", r)

        value, slope = self._value_and_derivative(which[0].upper(), Order(ell + 0.5), r)
        prefactor = math.sqrt(math.pi / (2.0 * r))
        if which.endswith("'"):
            return prefactor * (slope - value / (2.0 * r))
        return prefactor * value

    def ratio_cprime_c(self, nu, r, which="J", spherical=False):
        """Logarithmic derivative C'(r)/C(r) without forming C itself.

        J'/J comes from the continued fraction nu/r - 1/(2(nu+1)/r - 1/(2(nu+2)/r - ...)) evaluated by the modified
        Lentz method; H'/H from the upward recurrence of rho = H_{nu+1}/H_nu, which is stable for the dominant
        solution. With spherical=True, nu is the degree l and the result is c_l'/c_l = C'_{l+1/2}/C_{l+1/2} - 1/(2r).

        Arguments:
            nu {float} -- Order (or degree when spherical).
            r {float} -- Positive argument.

        Keyword Arguments:
            which {str} -- The cylinder function. (default: {J}) (choices: {J, H})
            spherical {bool} -- Interpret nu as a spherical degree. (default: {False})

        Returns:
            complex -- The ratio (real for J).
        """

        self._validate_choice("ratio_cprime_c", "which", which, ["J", "H"])
        if spherical:
            order = Order(self._degree("ratio_cprime_c", nu) + 0.5)
        else:
            order = self._order("ratio_cprime_c", nu)
        r = self._argument("ratio_cprime_c", r)

        if which == "J":
            ratio = complex(self._j_log_derivative(order, r))
        else:
            ratio = self._h_log_derivative(order, r)

        if spherical:
            ratio -= 1.0 / (2.0 * r)
        return ratio

    def wronskian_residual(self, nu, r):
        """Relative residual of J_nu Y'_nu - J'_nu Y_nu = 2/(pi r), evaluated in scaled arithmetic.

        Arguments:
            nu {float} -- Integer or half-integer order.
            r {float} -- Positive argument.

        Returns:
            float -- |W - 2/(pi r)| * (pi r / 2).
        """

        order = self._order("wronskian_residual", nu)
        r = self._argument("wronskian_residual", r)

        j, j_prime = self._value_and_derivative("J", order, r)
        y, y_prime = self._value_and_derivative("Y", order, r)
        wronskian = complex(j * y_prime - j_prime * y)
        return abs(wronskian - 2.0 / (math.pi * r)) * (math.pi * r / 2.0)

    def besseltmp_residual(self, nu, alpha, beta, lam):
        """Relative residual of the imaginary-part identity

            Im(J'_nu(alpha)/J_nu(alpha) + lam H'_nu(beta)/H_nu(beta)) = lam (2/(pi beta)) / (J_nu(beta)^2 + Y_nu(beta)^2)

        whose right-hand side never vanishes for lam != 0, so J'/J + lam H'/H has no real zero.

        Arguments:
            nu {float} -- Integer or half-integer order.
            alpha {float} -- Positive argument of the J ratio.
            beta {float} -- Positive argument of the H ratio.
            lam {float} -- Nonzero real weight.

        Returns:
            float -- |lhs - rhs| / |rhs|.
        """

        if lam == 0:
            raise InvalidParameterException("The besseltmp_residual() lam argument must be nonzero.")
        order = self._order("besseltmp_residual", nu)
        beta = self._argument("besseltmp_residual", beta)

        lhs = (self.ratio_cprime_c(order.value, alpha, "J") + lam * self.ratio_cprime_c(order.value, beta, "H")).imag

        j = _j_range(order.base, order.index, order.index, beta)[order.index]
        y = _y_range(order.base, order.index, beta)[order.index]
        rhs = ScaledValue(lam * 2.0 / (math.pi * beta)) / (j * j + y * y)
        return abs(complex((ScaledValue(lhs) - rhs) / rhs))

    def series_oracle_j(self, nu, r, digits=30):
        """Arbitrary-precision J_nu(r) by direct summation of sum (-1)^k (r/2)^(2k+nu) / (k! Gamma(k+nu+1)).

        The working precision carries r/ln(10) guard digits to absorb the cancellation between terms of size up to
        e^r. Summation stops once the terms decrease by at least a factor two per step and the geometric tail bound
        falls below 10^-digits relative to the partial sum.

        Arguments:
            nu {float} -- Integer or half-integer order, at most 300.
            r {float} -- Argument in [0, 100].

        Keyword Arguments:
            digits {int} -- Certified significant digits, at most 100. (default: {30})

        Returns:
            mpmath.mpf -- J_nu(r).
        """

        order, r = self._oracle_arguments("series_oracle_j", nu, r, digits, allow_zero=True)
        self.log("series_oracle_j: Summing J_{}({}) to {} digits.".format(order.value, r, digits))
        if r == 0:
            return mpmath.mpf(1) if order.value == 0 else mpmath.mpf(0)
        return _oracle_j(order.value, r, digits)

    def series_oracle_y(self, nu, r, digits=30):
        """Arbitrary-precision Y_nu(r).

        Integer orders use the logarithmic series

            Y_n = (2/pi)(log(r/2) + gamma) J_n - (1/pi) sum_{k<n} (n-k-1)!/k! (r/2)^(2k-n)
                  - (1/pi) sum_k (-1)^k (H_k + H_{n+k}) (r/2)^(2k+n) / (k! (n+k)!)

        with gamma the Euler-Mascheroni constant and H_k the harmonic numbers. Half-integer orders use
        Y_{l+1/2} = (-1)^(l+1) J_{-l-1/2}.

        Arguments:
            nu {float} -- Integer or half-integer order, at most 300.
            r {float} -- Argument in (0, 100].

        Keyword Arguments:
            digits {int} -- Certified significant digits, at most 100. (default: {30})

        Returns:
            mpmath.mpf -- Y_nu(r).
        """

        order, r = self._oracle_arguments("series_oracle_y", nu, r, digits, allow_zero=False)
        self.log("series_oracle_y: Summing Y_{}({}) to {} digits.".format(order.value, r, digits))
        if order.kind == "integer":
            return _oracle_y_integer(order.index, r, digits)
        return _oracle_y_half_integer(order.index, r, digits)

    def large_order_j(self, nu, r, N=None, derivative=False):
        """Large-order expansion J_nu(r) ~ (r/2)^nu / Gamma(nu+1) sum_{k<=N} (-1)^k (r/2)^2k Gamma(nu+1) / (k! Gamma(nu+k+1)).

        The derivative form multiplies term k by (nu + 2k)/r. The relative error is O(nu^-(N+1)).

        Arguments:
            nu {float} -- Order, at least 1.
            r {float} -- Positive argument.

        Keyword Arguments:
            N {int} -- Retained correction terms. (default: {the instance truncation})
            derivative {bool} -- Return the expansion of J'_nu. (default: {False})

        Returns:
            ScaledValue -- The truncated expansion.
        """

        order, r, N = self._large_order_arguments("large_order_j", nu, r, N)
        nu = order.value
        x2 = 0.25 * r * r

        total, term = 0.0, 1.0
        for k in range(N + 1):
            if k > 0:
                term *= -x2 / (k * (nu + k))
            total += (nu + 2 * k) / r * term if derivative else term

        prefactor = ScaledValue.from_exp(nu * math.log(0.5 * r)) / _gamma_scaled(nu + 1)
        return prefactor * total

    def large_order_h(self, nu, r, N=None, derivative=False):
        """Large-order expansion H_nu(r) ~ -(i/pi) Gamma(nu) (2/r)^nu sum_{k<=N} Gamma(nu-k)/(k! Gamma(nu)) (r/2)^2k.

        The J_nu part is exponentially smaller and is dropped. The derivative form is
        (i/pi) Gamma(nu) (2/r)^nu / r sum (nu - 2k) [...].

        Arguments:
            nu {float} -- Order, at least 1 and larger than N.
            r {float} -- Positive argument.

        Keyword Arguments:
            N {int} -- Retained correction terms. (default: {the instance truncation})
            derivative {bool} -- Return the expansion of H'_nu. (default: {False})

        Returns:
            ScaledValue -- The truncated expansion.
        """

        order, r, N = self._large_order_arguments("large_order_h", nu, r, N)
        nu = order.value
        if N >= nu:
            raise InvalidParameterException(
                "The large_order_h() N argument must be smaller than the order {}.".format(nu))
        x2 = 0.25 * r * r

        total, term = 0.0, 1.0
        for k in range(N + 1):
            if k > 0:
                term *= x2 / (k * (nu - k))
            total += (nu - 2 * k) / r * term if derivative else term

        prefactor = _gamma_scaled(nu) * ScaledValue.from_exp(nu * math.log(2.0 / r)) / math.pi
        if derivative:
            return prefactor * (1j * total)
        return prefactor * (-1j * total)

    def large_order_j_spherical(self, ell, r, N=None, derivative=False):
        """Large-degree expansion j_l(r) ~ r^l/(2l+1)!! sum_{k<=N} (-1)^k (2l+1)!!/(k! (2l+2k+1)!!) (r^2/2)^k.

        Arguments:
            ell {int} -- Degree, at least 1.
            r {float} -- Positive argument.

        Keyword Arguments:
            N {int} -- Retained correction terms. (default: {the instance truncation})
            derivative {bool} -- Return the expansion of j'_l. (default: {False})

        Returns:
            ScaledValue -- The truncated expansion.
        """

        ell, r, N = self._large_degree_arguments("large_order_j_spherical", ell, r, N)
        half_r2 = 0.5 * r * r

        total, term = 0.0, 1.0
        for k in range(N + 1):
            if k > 0:
                term *= -half_r2 / (k * (2 * ell + 2 * k + 1))
            total += (ell + 2 * k) / r * term if derivative else term

        prefactor = ScaledValue.from_exp(ell * math.log(r)) / ScaledValue.from_mpmath(
            mpmath.mpf(_double_factorial(2 * ell + 1)))
        return prefactor * total

    def large_order_y_spherical(self, ell, r, N=None, derivative=False):
        """Large-degree expansion y_l(r) ~ -(2l-1)!!/r^(l+1) sum_{k<=N} (2l-2k-1)!!/(k! (2l-1)!!) (r^2/2)^k.

        Arguments:
            ell {int} -- Degree, at least 1 and at least N.
            r {float} -- Positive argument.

        Keyword Arguments:
            N {int} -- Retained correction terms. (default: {the instance truncation})
            derivative {bool} -- Return the expansion of y'_l. (default: {False})

        Returns:
            ScaledValue -- The truncated expansion.
        """

        ell, r, N = self._large_degree_arguments("large_order_y_spherical", ell, r, N)
        if N > ell:
            raise InvalidParameterException(
                "The large_order_y_spherical() N argument must not exceed the degree {}.".format(ell))
        half_r2 = 0.5 * r * r

        total, term = 0.0, 1.0
        for k in range(N + 1):
            if k > 0:
                term *= half_r2 / (k * (2 * ell - 2 * k + 1))
            total += (ell + 1 - 2 * k) / r * term if derivative else -term

        prefactor = ScaledValue.from_mpmath(mpmath.mpf(_double_factorial(2 * ell - 1))) / ScaledValue.from_exp(
            (ell + 1) * math.log(r))
        return prefactor * total

    def large_order_h_spherical(self, ell, r, N=None, derivative=False):
        """Large-degree expansion h_l ~ i y_l (and h'_l ~ i y'_l); the j_l part is exponentially smaller.

        Arguments:
            ell {int} -- Degree, at least 1 and at least N.
            r {float} -- Positive argument.

        Keyword Arguments:
            N {int} -- Retained correction terms. (default: {the instance truncation})
            derivative {bool} -- Return the expansion of h'_l. (default: {False})

        Returns:
            ScaledValue -- The truncated expansion.
        """

        return 1j * self.large_order_y_spherical(ell, r, N, derivative)

    def debye(self, kind, n, z, derivative=False, terms=0):
        """Debye expansion at order n and argument n z with z = sech(alpha), 0 < z < 1.

            J_n(n sech a)  ~ e^{n(tanh a - a)} / sqrt(2 pi n tanh a) sum U_k(coth a) / n^k
            H_n(n sech a)  ~ -i e^{n(a - tanh a)} / sqrt(pi n tanh a / 2) sum (-1)^k U_k(coth a) / n^k
            J'_n(n sech a) ~ sqrt(sinh 2a / (4 pi n)) e^{n(tanh a - a)} sum V_k(coth a) / n^k
            H'_n(n sech a) ~ i sqrt(sinh 2a / (pi n)) e^{n(a - tanh a)} sum (-1)^k V_k(coth a) / n^k

        Convergence in n slows down as z approaches 1 because coth(alpha) blows up.

        Arguments:
            kind {str} -- The function. (choices: {J, H})
            n {int} -- Positive order.
            z {float} -- The ratio argument/order, in (0, 1).

        Keyword Arguments:
            derivative {bool} -- Return the expansion of the derivative. (default: {False})
            terms {int} -- Number of U_k (or V_k) corrections, 0 to 3. (default: {0})

        Returns:
            ScaledValue -- The expansion value.
        """

        self._validate_choice("debye", "kind", kind, ["J", "H"])
        self._validate_choice("debye", "terms", terms, [0, 1, 2, 3])
        if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 1:
            raise InvalidParameterException("The debye() n argument must be a positive integer.")
        if isinstance(z, bool) or not isinstance(z, numbers.Real) or not 0 < z < 1:
            raise DomainException("The debye() z argument must lie in (0, 1), got {}.".format(z))

        alpha = math.acosh(1.0 / z)
        tanh_alpha = math.sqrt(1.0 - z * z)
        coth_alpha = 1.0 / tanh_alpha
        sign = 1.0 if kind == "J" else -1.0
        polynomial = _v_polynomial if derivative else _u_polynomial
        correction = sum((sign ** k) * polynomial(k, coth_alpha) / n ** k for k in range(terms + 1))

        self.log("debye: Evaluating the {}{} expansion at n={}, z={}.".format(kind, "'" if derivative else "", n, z))
        if kind == "J":
            growth = ScaledValue.from_exp(n * (tanh_alpha - alpha))
            if derivative:
                return growth * (math.sqrt(math.sinh(2 * alpha) / (4 * math.pi * n)) * correction)
            return growth * (correction / math.sqrt(2 * math.pi * n * tanh_alpha))

        growth = ScaledValue.from_exp(n * (alpha - tanh_alpha))
        if derivative:
            return growth * (1j * math.sqrt(math.sinh(2 * alpha) / (math.pi * n)) * correction)
        return growth * (-1j * correction / math.sqrt(0.5 * math.pi * n * tanh_alpha))

    def dump_golden_values(self, path, points, digits=30, which="J"):
        """Write oracle values as CSV rows `nu,r,value_mantissa,value_exponent,digits`.

        The value is value_mantissa * e^value_exponent with the mantissa printed to `digits` significant digits.

        Arguments:
            path {str} -- Output file.
            points {list} -- (nu, r) pairs.

        Keyword Arguments:
            digits {int} -- Oracle digits. (default: {30})
            which {str} -- The function. (default: {J}) (choices: {J, Y})

        Returns:
            int -- The number of rows written.
        """

        self._validate_choice("dump_golden_values", "which", which, ["J", "Y"])
        oracle = self.series_oracle_j if which == "J" else self.series_oracle_y

        rows = []
        for nu, r in points:
            value = oracle(nu, r, digits)
            with mpmath.workdps(digits + 10):
                if value == 0:
                    mantissa, exponent = mpmath.mpf(0), 0
                else:
                    exponent = int(mpmath.floor(mpmath.log(abs(value))))
                    mantissa = value * mpmath.exp(-exponent)
                rows.append([repr(float(nu)), repr(float(r)), mpmath.nstr(mantissa, digits), exponent, digits])

        self.log("dump_golden_values: Writing {} {} values to {}.".format(len(rows), which, path))
        with open(path, "w", newline="") as handle:
            handle.write(CSV_VERSION_LINE + "\n")
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["nu", "r", "value_mantissa", "value_exponent", "digits"])
            writer.writerows(rows)
        return len(rows)

    def _cylinder(self, which, order, n_lo, n_hi, r):
        """Internal method returning {n: C_{base+n}(r)} for n_lo <= n <= n_hi."""

        if which == "J":
            return _j_range(order.base, n_lo, n_hi, r)
        y = _y_range(order.base, n_hi, r)
        if which == "Y":
            return dict((n, y[n]) for n in range(n_lo, n_hi + 1))
        j = _j_range(order.base, n_lo, n_hi, r)
        return dict((n, j[n] + y[n] * 1j) for n in range(n_lo, n_hi + 1))

    def _value_and_derivative(self, which, order, r):
        """Internal method returning (C_nu(r), C'_nu(r)) from one recurrence pass."""

        n = order.index
        nu = order.value
        if nu >= 1:
            values = self._cylinder(which, order, n - 1, n, r)
            return values[n], values[n - 1] - values[n] * (nu / r)
        values = self._cylinder(which, order, n, n + 1, r)
        return values[n], values[n] * (nu / r) - values[n + 1]

    def _j_log_derivative(self, order, r):
        nu = order.value
        xi = 1.0 / r
        h = nu * xi
        if h < _CF_TINY:
            h = _CF_TINY
        b = 2.0 * xi * nu
        d = 0.0
        c = h
        for _ in range(_MAX_CF_ITERATIONS):
            b += 2.0 * xi
            d = b - d
            if abs(d) < _CF_TINY:
                d = _CF_TINY
            c = b - 1.0 / c
            if abs(c) < _CF_TINY:
                c = _CF_TINY
            d = 1.0 / d
            delta = c * d
            h = delta * h
            if abs(delta - 1.0) < _CF_EPS:
                break
        else:
            raise PrecisionUnreachableException(
                "The continued fraction for J'_{}/J_{} at r={} did not converge.".format(nu, nu, r))

        # nu/r - h is J_{nu+1}/J_nu; a huge value means J_nu is negligible next to its neighbour
        if abs(nu * xi - h) * self._tolerance("near_zero") > 1.0:
            raise NearZeroDenominatorException(nu, r, "J")
        return h

    @staticmethod
    def _h_log_derivative(order, r):
        if order.kind == "integer":
            rho = complex(special.hankel1(1, r) / special.hankel1(0, r))
        else:
            rho = complex(1.0 / r, -1.0)
        for n in range(order.index):
            rho = 2.0 * (order.base + n + 1) / r - 1.0 / rho
        return order.value / r - rho

    def _order(self, function_name, nu):
        try:
            return Order(nu)
        except InvalidOrderException as error:
            raise InvalidOrderException("{}: {}".format(function_name, error))

    @staticmethod
    def _degree(function_name, ell):
        if isinstance(ell, bool) or not isinstance(ell, numbers.Integral) or ell < 0:
            raise InvalidOrderException("The {}() degree must be a nonnegative integer, got {}.".format(
                function_name, ell))
        return int(ell)

    @staticmethod
    def _argument(function_name, r, allow_zero=False):
        if isinstance(r, bool) or not isinstance(r, numbers.Real):
            raise InvalidTypeException("The {}() r argument must be a real number.".format(function_name))
        r = float(r)
        if not math.isfinite(r) or r < 0 or (r == 0 and not allow_zero):
            raise DomainException("The {}() r argument must be {}, got {}.".format(
                function_name, "nonnegative" if allow_zero else "positive", r))
        return r

    def _oracle_arguments(self, function_name, nu, r, digits, allow_zero):
        order = self._order(function_name, nu)
        r = self._argument(function_name, r, allow_zero=allow_zero)
        if order.value > _ORACLE_MAX_ORDER:
            raise InvalidParameterException("The {}() order must not exceed {}.".format(
                function_name, _ORACLE_MAX_ORDER))
        if r > _ORACLE_MAX_ARGUMENT:
            raise InvalidParameterException("The {}() r argument must not exceed {}.".format(
                function_name, _ORACLE_MAX_ARGUMENT))
        if isinstance(digits, bool) or not isinstance(digits, numbers.Integral) or digits < 1:
            raise InvalidParameterException("The {}() digits argument must be a positive integer.".format(
                function_name))
        if digits > _ORACLE_MAX_DIGITS:
            raise PrecisionUnreachableException("{}: at most {} digits can be certified, {} requested.".format(
                function_name, _ORACLE_MAX_DIGITS, digits))
        return order, r

    def _large_order_arguments(self, function_name, nu, r, N):
        order = self._order(function_name, nu)
        if order.value < 1:
            raise InvalidOrderException("The {}() order must be at least 1, got {}.".format(function_name, nu))
        r = self._argument(function_name, r)
        return order, r, self._truncation(function_name, N)

    def _large_degree_arguments(self, function_name, ell, r, N):
        ell = self._degree(function_name, ell)
        if ell < 1:
            raise InvalidOrderException("The {}() degree must be at least 1.".format(function_name))
        r = self._argument(function_name, r)
        return ell, r, self._truncation(function_name, N)

    def _truncation(self, function_name, N):
        if N is None:
            N = self.truncation
        if isinstance(N, bool) or not isinstance(N, numbers.Integral) or N < 0:
            raise InvalidParameterException("The {}() N argument must be a nonnegative integer.".format(
                function_name))
        return int(N)


def _guard_digits(r):
    return 10 + int(math.ceil(r / math.log(10.0)))


def _oracle_j(nu, r, digits):
    with mpmath.workdps(digits + _guard_digits(r)):
        x = mpmath.mpf(r) / 2
        x2 = x * x
        order = mpmath.mpf(nu)
        eps = mpmath.mpf(10) ** (-(digits + 1))

        term = x ** order / mpmath.gamma(order + 1)
        total = term
        k = 0
        while True:
            k += 1
            term = -term * x2 / (k * (k + order))
            total += term
            following = x2 / ((k + 1) * (k + 1 + order))
            if following <= 0.5 and abs(term) * following / (1 - following) <= eps * abs(total):
                break
            if k > 100000:
                raise PrecisionUnreachableException("The J series for order {} at r={} did not settle.".format(nu, r))
        if total == 0:
            raise PrecisionUnreachableException("J_{}({}) cancels to zero at the working precision.".format(nu, r))
        return +total


def _oracle_y_integer(n, r, digits):
    with mpmath.workdps(digits + _guard_digits(r)):
        x = mpmath.mpf(r) / 2
        x2 = x * x
        eps = mpmath.mpf(10) ** (-(digits + 1))

        j_n = _oracle_j(n, r, digits + 5)
        logarithmic = 2 / mpmath.pi * (mpmath.log(x) + mpmath.euler) * j_n

        finite = mpmath.mpf(0)
        for k in range(n):
            finite += mpmath.factorial(n - k - 1) / mpmath.factorial(k) * x ** (2 * k - n)

        harmonic_k = mpmath.mpf(0)
        harmonic_nk = mpmath.fsum(mpmath.mpf(1) / j for j in range(1, n + 1))
        base = x ** n / mpmath.factorial(n)
        tail = base * (harmonic_k + harmonic_nk)
        k = 0
        while True:
            k += 1
            base = -base * x2 / (k * (n + k))
            harmonic_k += mpmath.mpf(1) / k
            harmonic_nk += mpmath.mpf(1) / (n + k)
            term = base * (harmonic_k + harmonic_nk)
            tail += term
            following = x2 / ((k + 1) * (n + k + 1))
            if following <= 0.25 and 2 * abs(term) <= eps * abs(tail):
                break
            if k > 100000:
                raise PrecisionUnreachableException("The Y series for order {} at r={} did not settle.".format(n, r))

        return +(logarithmic - (finite + tail) / mpmath.pi)


def _oracle_y_half_integer(ell, r, digits):
    nu = ell + 0.5
    with mpmath.workdps(digits + _guard_digits(r)):
        x = mpmath.mpf(r) / 2
        x2 = x * x
        order = mpmath.mpf(ell) + mpmath.mpf(1) / 2
        eps = mpmath.mpf(10) ** (-(digits + 1))

        # J_{-nu} = sum (-1)^k (r/2)^(2k-nu) / (k! Gamma(k-nu+1)); Gamma has no pole at half-integers
        term = x ** (-order) / mpmath.gamma(1 - order)
        total = term
        k = 0
        while True:
            k += 1
            term = -term * x2 / (k * (k - order))
            total += term
            following = x2 / ((k + 1) * abs(k + 1 - order))
            if k > nu and following <= 0.5 and abs(term) * following / (1 - following) <= eps * abs(total):
                break
            if k > 100000:
                raise PrecisionUnreachableException("The Y series for order {} at r={} did not settle.".format(nu, r))
        return +((-1) ** (ell + 1) * total)

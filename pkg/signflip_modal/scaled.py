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
This module contains the ScaledValue class, a complex number stored as a mantissa and a natural exponent.
"""

import cmath
import math
import numbers

import mpmath

from .exceptions import DomainException, InvalidTypeException

# exp(x) underflows to zero below this exponent
_UNDERFLOW = -745
_SQRT_E = math.sqrt(math.e)


class ScaledValue(object):
    """A complex number m * e^E with e^-1 <= |m| < e (or m == 0).

    The exponent is an unbounded Python int, so values such as H_300(0.1) or e^{L sqrt(lambda)} for large
    eigenvalues are carried without overflow.

    Arguments:
        mantissa {complex} -- The unnormalized mantissa.

    Keyword Arguments:
        exponent {int} -- The unnormalized exponent (power of e). (default: {0})
    """

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa=0j, exponent=0):
        mantissa = complex(mantissa)
        if not (math.isfinite(mantissa.real) and math.isfinite(mantissa.imag)):
            raise DomainException("A ScaledValue mantissa must be finite, got {}.".format(mantissa))

        if mantissa == 0:
            self.mantissa = 0j
            self.exponent = 0
            return

        shift = int(math.floor(math.log(abs(mantissa))))
        if shift != 0:
            # subnormal mantissas need more than one step
            remaining = -shift
            while abs(remaining) > 700:
                step = 700 if remaining > 0 else -700
                mantissa = mantissa * math.exp(step)
                remaining -= step
            mantissa = mantissa * math.exp(remaining)
            # exp(-shift) rounding may leave |m| a hair outside [1/e, e)
            if abs(mantissa) >= math.e:
                mantissa = mantissa / math.e
                shift += 1
            elif abs(mantissa) < 1.0 / math.e:
                mantissa = mantissa * math.e
                shift -= 1
        self.mantissa = mantissa
        self.exponent = int(exponent) + shift

    @classmethod
    def from_complex(cls, value):
        """Wrap a plain number.

        Arguments:
            value {complex} -- Any int, float or complex (numpy scalars included).

        Returns:
            ScaledValue -- The same value in scaled form.
        """

        if isinstance(value, ScaledValue):
            return value
        if isinstance(value, int) and not isinstance(value, bool) and abs(value) > 2 ** 1000:
            return cls.from_mpmath(mpmath.mpf(value))
        if not isinstance(value, numbers.Number):
            raise InvalidTypeException("A ScaledValue can only be built from a number, got {}.".format(type(value)))
        return cls(complex(value), 0)

    @classmethod
    def from_exp(cls, z):
        """Return e^z for a (possibly huge) complex exponent z."""

        z = complex(z)
        whole = int(math.floor(z.real))
        return cls(math.exp(z.real - whole) * cmath.exp(1j * z.imag), whole)

    @classmethod
    def from_mpmath(cls, value):
        """Convert an mpmath mpf or mpc without passing through a (possibly overflowing) double."""

        if value == 0:
            return cls()
        with mpmath.workdps(30):
            whole = int(mpmath.floor(mpmath.log(abs(value))))
            scaled = value * mpmath.exp(-whole)
            return cls(complex(scaled), whole)

    @classmethod
    def one(cls):
        return cls(1.0, 0)

    def _align(self, other):
        """Returns a tuple (sm, om, e) such that self == sm * e^e and other == om * e^e."""

        other = _coerce(other)
        sm, se = self.mantissa, self.exponent
        om, oe = other.mantissa, other.exponent

        if sm == 0:
            return sm, om, oe
        if om == 0:
            return sm, om, se
        if se >= oe:
            gap = oe - se
            return sm, (om * math.exp(gap) if gap > _UNDERFLOW else 0j), se
        gap = se - oe
        return (sm * math.exp(gap) if gap > _UNDERFLOW else 0j), om, oe

    def __add__(self, other):
        sm, om, e = self._align(other)
        return ScaledValue(sm + om, e)

    __radd__ = __add__

    def __sub__(self, other):
        sm, om, e = self._align(other)
        return ScaledValue(sm - om, e)

    def __rsub__(self, other):
        sm, om, e = self._align(other)
        return ScaledValue(om - sm, e)

    def __mul__(self, other):
        other = _coerce(other)
        return ScaledValue(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.mantissa == 0:
            raise ZeroDivisionError("ScaledValue division by zero")
        return ScaledValue(self.mantissa / other.mantissa, self.exponent - other.exponent)

    def __rtruediv__(self, other):
        return _coerce(other).__truediv__(self)

    def __neg__(self):
        return ScaledValue(-self.mantissa, self.exponent)

    def __pos__(self):
        return self

    def __abs__(self):
        return ScaledValue(abs(self.mantissa), self.exponent)

    def __pow__(self, power):
        if not isinstance(power, numbers.Integral):
            raise InvalidTypeException("ScaledValue only supports integer powers.")
        if power == 0:
            return ScaledValue.one()
        if self.mantissa == 0:
            if power < 0:
                raise ZeroDivisionError("ScaledValue division by zero")
            return ScaledValue()
        result = ScaledValue.from_exp(power * cmath.log(self.mantissa))
        return ScaledValue(result.mantissa, result.exponent + power * self.exponent)

    def __eq__(self, other):
        if not isinstance(other, ScaledValue):
            try:
                other = _coerce(other)
            except InvalidTypeException:
                return NotImplemented
        return self.mantissa == other.mantissa and self.exponent == other.exponent

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def __complex__(self):
        if self.mantissa == 0:
            return 0j
        try:
            scale = math.exp(self.exponent)
        except OverflowError:
            scale = float("inf")
        real = self.mantissa.real * scale if self.mantissa.real != 0 else 0.0
        imag = self.mantissa.imag * scale if self.mantissa.imag != 0 else 0.0
        return complex(real, imag)

    def __float__(self):
        return complex(self).real

    def __bool__(self):
        return self.mantissa != 0

    def __repr__(self):
        return "ScaledValue(mantissa={!r}, exponent={})".format(self.mantissa, self.exponent)

    def to_complex(self):
        """Return the plain complex value (components overflow to +-inf, underflow to 0)."""
        return complex(self)

    @property
    def real(self):
        return ScaledValue(self.mantissa.real, self.exponent)

    @property
    def imag(self):
        return ScaledValue(self.mantissa.imag, self.exponent)

    def conjugate(self):
        return ScaledValue(self.mantissa.conjugate(), self.exponent)

    def is_zero(self):
        return self.mantissa == 0

    def log_abs(self):
        """Return log|value| (-inf for zero)."""

        if self.mantissa == 0:
            return float("-inf")
        return math.log(abs(self.mantissa)) + self.exponent

    def log(self):
        """Return the principal complex logarithm."""

        if self.mantissa == 0:
            raise DomainException("The logarithm of zero is undefined.")
        return cmath.log(self.mantissa) + self.exponent

    def sqrt(self):
        """Return the principal square root."""

        if self.mantissa == 0:
            return ScaledValue()
        root = cmath.sqrt(self.mantissa)
        if self.exponent % 2:
            return ScaledValue(root * _SQRT_E, (self.exponent - 1) // 2)
        return ScaledValue(root, self.exponent // 2)

    def isclose(self, other, rel_tol=1e-12):
        """Relative comparison that works far outside the double range."""

        other = _coerce(other)
        if self.mantissa == 0 and other.mantissa == 0:
            return True
        scale = max(self.log_abs(), other.log_abs())
        return (self - other).log_abs() - scale <= math.log(rel_tol)


def _coerce(value):
    if isinstance(value, ScaledValue):
        return value
    return ScaledValue.from_complex(value)

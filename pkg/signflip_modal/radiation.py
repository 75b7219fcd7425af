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
This module contains the signflip-modal Radiation class.
"""

import cmath
import math
import numbers

import numpy as np

from .core import Core
from .exceptions import BranchCutException, InvalidParameterException, InvalidTypeException, NumericalAssertionException

DEFAULT_ETA_SEQUENCE = tuple(float(value) for value in np.geomspace(1e-1, 1e-8, 8))


class AbsorbingMedium(object):
    """A medium with permittivity epsilon + i eta and permeability mu + i gamma at angular frequency omega.

    Arguments:
        epsilon {float} -- Real permittivity, nonzero.
        mu {float} -- Real permeability with the sign of epsilon.
        omega {float} -- Positive angular frequency.
        eta {float} -- Positive dielectric absorption.
        gamma {float} -- Positive magnetic absorption.
    """

    def __init__(self, epsilon, mu, omega, eta, gamma):
        for name, value in (("epsilon", epsilon), ("mu", mu), ("omega", omega), ("eta", eta), ("gamma", gamma)):
            if isinstance(value, bool) or not isinstance(value, numbers.Real) or not math.isfinite(value):
                raise InvalidTypeException("The AbsorbingMedium {} must be a finite real number.".format(name))
        if epsilon == 0 or mu == 0 or (epsilon > 0) != (mu > 0):
            raise InvalidParameterException("epsilon and mu must be nonzero with the same sign.")
        if omega <= 0 or eta <= 0 or gamma <= 0:
            raise InvalidParameterException("omega, eta and gamma must be positive.")
        self.epsilon = float(epsilon)
        self.mu = float(mu)
        self.omega = float(omega)
        self.eta = float(eta)
        self.gamma = float(gamma)

    @property
    def negative(self):
        return self.epsilon < 0


class RadiationProfile(object):
    """A one-dimensional profile u(x) = sum a_j e^(i q_j x).

    Arguments:
        terms {list} -- (amplitude, q) pairs.
        k {float} -- Reference wave number used by the radiation conditions.
    """

    def __init__(self, terms, k):
        self.terms = [(complex(amplitude), float(q)) for amplitude, q in terms]
        self.k = float(k)

    @classmethod
    def outgoing_positive(cls, k):
        """e^(ikx): outgoing in a positive medium."""
        return cls([(1.0, k)], k)

    @classmethod
    def outgoing_negative(cls, k):
        """e^(-ikx): the transmitted wave of a negative medium, whose phase travels backwards."""
        return cls([(1.0, -k)], k)

    @classmethod
    def superposition(cls, *profiles):
        terms = [term for profile in profiles for term in profile.terms]
        return cls(terms, profiles[0].k)

    def value(self, x):
        return sum(amplitude * cmath.exp(1j * q * x) for amplitude, q in self.terms)

    def derivative(self, x):
        return sum(1j * q * amplitude * cmath.exp(1j * q * x) for amplitude, q in self.terms)


class Radiation(Core):
    """This class contains the branch-cut square root, the absorbing wave number and the radiation conditions of
    positive and negative media."""

    def branch_sqrt(self, z):
        """Square root with the branch cut on [0, +inf): sqrt(|z|) e^(i arg(z)/2) with arg(z) in (0, 2 pi).

        Arguments:
            z {complex} -- Any number off the nonnegative real axis.

        Returns:
            complex -- The root, with a positive imaginary part.
        """

        if isinstance(z, bool) or not isinstance(z, numbers.Number):
            raise InvalidTypeException("The branch_sqrt() z argument must be a number.")
        z = complex(z)
        if z == 0:
            raise BranchCutException(z)

        argument = cmath.phase(z)
        if argument < 0:
            argument += 2.0 * math.pi
        tolerance = self._tolerance("branch_cut")
        if argument < tolerance or 2.0 * math.pi - argument < tolerance:
            raise BranchCutException(z)
        return math.sqrt(abs(z)) * cmath.exp(0.5j * argument)

    def absorbing_wavenumber(self, medium):
        """k = (omega^2 (epsilon + i eta)(mu + i gamma))^(1/2) with the branch of branch_sqrt.

        Arguments:
            medium {AbsorbingMedium} -- The medium.

        Returns:
            complex -- The wave number; Im k > 0, and Re k < 0 for a negative medium.
        """

        if not isinstance(medium, AbsorbingMedium):
            raise InvalidTypeException("The absorbing_wavenumber() medium argument must be an AbsorbingMedium.")

        k = self.branch_sqrt(medium.omega ** 2 * complex(medium.epsilon, medium.eta) * complex(medium.mu, medium.gamma))
        if not k.imag > 0:
            raise NumericalAssertionException("The absorbing wave number {} has a nonpositive imaginary part.".format(k))
        if (k.real < 0) != medium.negative:
            raise NumericalAssertionException("The absorbing wave number {} has the wrong real sign for a {} "
                                              "medium.".format(k, "negative" if medium.negative else "positive"))
        return k

    def limiting_k(self, sign, k, eta_sequence=None):
        """Vanishing-absorption limit of k_{eta,eta} for epsilon = mu = +-1 and omega = k.

        Arguments:
            sign {str} -- The material sign. (choices: {positive, negative})
            k {float} -- Positive wave number.

        Keyword Arguments:
            eta_sequence {list} -- Decreasing absorptions. (default: {1e-1 ... 1e-8, geometric})

        Returns:
            dict -- limit, etas, values, deviations and monotone_tail (deviations decrease over the last five).
        """

        self._validate_choice("limiting_k", "sign", sign, ["positive", "negative"])
        self._validate_positive("limiting_k", k=k)
        etas = [float(value) for value in (eta_sequence or DEFAULT_ETA_SEQUENCE)]
        if any(value <= 0 for value in etas) or any(b >= a for a, b in zip(etas, etas[1:])):
            raise InvalidParameterException("The limiting_k() eta_sequence must be positive and decreasing.")

        unit = 1.0 if sign == "positive" else -1.0
        limit = unit * k
        values = [self.absorbing_wavenumber(AbsorbingMedium(unit, unit, k, eta, eta)) for eta in etas]
        deviations = [abs(value - limit) for value in values]
        tail = deviations[-5:]

        self.log("limiting_k: Smallest deviation {:.3e} for the {} material.".format(deviations[-1], sign))
        return {
            "limit": limit,
            "etas": etas,
            "values": values,
            "deviations": deviations,
            "monotone_tail": all(b < a for a, b in zip(tail, tail[1:])),
        }

    def radiation_residual(self, profile, x):
        """Pointwise residuals of the Sommerfeld condition u' - iku and of the reversed condition u' + iku.

        Arguments:
            profile {RadiationProfile} -- The profile, with its reference wave number k.
            x {float} -- Positive sample point.

        Returns:
            tuple -- (|u' - i k u|, |u' + i k u|)
        """

        if not isinstance(profile, RadiationProfile):
            raise InvalidTypeException("The radiation_residual() profile argument must be a RadiationProfile.")
        self._validate_positive("radiation_residual", x=x)

        value = profile.value(x)
        slope = profile.derivative(x)
        return abs(slope - 1j * profile.k * value), abs(slope + 1j * profile.k * value)

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


class SignFlipException(Exception):
    """Base class for exceptions in this module."""
    pass


class InvalidParameterException(SignFlipException):
    """Exception related to the parameters provided in the function. This can be related to an issue with the value
    itself or to a combination of values that describes no valid configuration."""
    pass


class InvalidTypeException(SignFlipException):
    """Exception related to the wrong Python type being provided in the function parameters."""
    pass


class InvalidOrderException(InvalidParameterException):
    """Exception raised when a Bessel order is negative or is neither an integer nor a half-integer."""
    pass


class ConfigException(InvalidParameterException):
    """Exception related to a command line run configuration that cannot be parsed or validated."""
    pass


class DomainException(SignFlipException):
    """Exception raised when an argument lies outside the domain of the requested function."""
    pass


class BranchCutException(DomainException):
    """Exception raised when a square root is requested on (or too close to) its branch cut, the nonnegative real
    axis."""

    def __init__(self, z):
        self.z = z

    def __str__(self):
        return("The argument {} lies on the branch cut [0, +inf) of the square root.".format(self.z))


class CutoffException(DomainException):
    """Exception raised when a transverse eigenvalue coincides with a squared wave number, so that the propagation
    constant vanishes.

    Arguments:
        DomainException {class} -- Exception raised when an argument lies outside the domain of the requested function.
    """

    def __init__(self, eigenvalue, wavenumber):
        self.eigenvalue = eigenvalue
        self.wavenumber = wavenumber

    def __str__(self):
        return("The eigenvalue {} collides with the cut-off value k^2 = {} (k = {}).".format(
            self.eigenvalue, self.wavenumber ** 2, self.wavenumber))


class NearZeroDenominatorException(SignFlipException):
    """Exception raised when a cylinder function used as a denominator vanishes to working precision, e.g. when
    k^- R is a zero of J_m."""

    def __init__(self, order, argument, which="J"):
        self.order = order
        self.argument = argument
        self.which = which

    def __str__(self):
        return("{}_{}({}) vanishes to working precision and cannot be used as a denominator.".format(
            self.which, self.order, self.argument))


class SingularModeException(SignFlipException):
    """Exception raised when the system of a mode is singular, i.e. the mode belongs to the kernel."""

    def __init__(self, mode, determinant=0.0):
        self.mode = mode
        self.determinant = determinant

    def __str__(self):
        return("The system of mode {} is singular (determinant {}).".format(self.mode, self.determinant))


class PrecisionUnreachableException(SignFlipException):
    """Exception raised when a series cannot certify the requested number of digits."""
    pass


class FitUnstableException(SignFlipException):
    """Exception raised when a log-log regression is requested on a range that is too short to be meaningful."""
    pass


class InsufficientDataException(SignFlipException):
    """Exception raised when a sequence has too few usable entries for the requested analysis."""
    pass


class NumericalAssertionException(SignFlipException):
    """Exception raised when a computed result fails one of its own post-condition checks."""
    pass


class TruncationWarning(UserWarning):
    """Warning emitted when a truncated modal series has not visibly converged."""
    pass

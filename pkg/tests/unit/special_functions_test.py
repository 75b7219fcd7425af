import csv
import math

import mpmath
import pytest
from scipy import special

from signflip_modal import Order
from signflip_modal.core import CSV_VERSION_LINE
from signflip_modal.exceptions import (DomainException, InvalidOrderException, InvalidParameterException,
                                       NearZeroDenominatorException, PrecisionUnreachableException)

ORDERS = [0, 1, 5, 20, 60]
ARGUMENTS = [0.5, 1.0, 5.0, 10.0, 20.0]


@pytest.mark.parametrize('value, kind, index', [(0, "integer", 0), (7, "integer", 7), (2.5, "half-integer", 2)])
def test_order(value, kind, index):
    order = Order(value)

    assert order.kind == kind
    assert order.index == index
    assert order.value == value


@pytest.mark.parametrize('value', [-1, 0.3, 1.25])
def test_order_invalid(value):
    with pytest.raises(InvalidOrderException):
        Order(value)


def test_bessel_j_at_zero(analysis):

    assert complex(analysis.bessel_j(0, 0.0)) == 1.0
    assert analysis.bessel_j(3, 0.0).is_zero()


@pytest.mark.parametrize('nu', ORDERS)
@pytest.mark.parametrize('r', ARGUMENTS)
def test_bessel_j_matches_scipy(analysis, nu, r):

    assert complex(analysis.bessel_j(nu, r)).real == pytest.approx(special.jv(nu, r), rel=1e-9)


def test_bessel_j_half_integer(analysis):

    assert complex(analysis.bessel_j(0.5, 2.0)).real == pytest.approx(math.sqrt(2.0 / (math.pi * 2.0)) * math.sin(2.0),
                                                                      rel=1e-12)


def test_bessel_j_large_order_beyond_double_range(analysis):
    with mpmath.workdps(30):
        expected = float(mpmath.log(mpmath.besselj(300, 0.1)))

    assert analysis.bessel_j(300, 0.1).log_abs() == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize('nu, r', [(0, 1.0), (1, 0.7), (10, 3.0), (2.5, 4.0)])
def test_bessel_y_matches_scipy(analysis, nu, r):

    assert complex(analysis.bessel_y(nu, r)).real == pytest.approx(special.yv(nu, r), rel=1e-10)


def test_hankel1_matches_scipy(analysis):
    value = complex(analysis.hankel1(3, 2.0))

    assert value == pytest.approx(complex(special.hankel1(3, 2.0)), rel=1e-10)


def test_bessel_y_at_zero(analysis):
    with pytest.raises(DomainException):
        analysis.bessel_y(1, 0.0)


def test_bessel_j_invalid_order(analysis):
    with pytest.raises(InvalidOrderException):
        analysis.bessel_j(0.3, 1.0)


@pytest.mark.parametrize('nu', [0, 2, 7.5])
def test_derivative_matches_scipy(analysis, nu):

    assert complex(analysis.derivative(nu, 3.0, "J")).real == pytest.approx(special.jvp(nu, 3.0), rel=1e-10)
    assert complex(analysis.derivative(nu, 3.0, "Y")).real == pytest.approx(special.yvp(nu, 3.0), rel=1e-10)


@pytest.mark.parametrize('which, expected', [
    ("j", special.spherical_jn(2, 1.5)),
    ("y", special.spherical_yn(2, 1.5)),
    ("j'", special.spherical_jn(2, 1.5, derivative=True)),
    ("y'", special.spherical_yn(2, 1.5, derivative=True)),
])
def test_spherical_matches_scipy(analysis, which, expected):

    assert complex(analysis.spherical(2, 1.5, which)).real == pytest.approx(expected, rel=1e-10)


def test_spherical_invalid_choice(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.spherical(2, 1.5, "k")


@pytest.mark.parametrize('nu, r', [(5, 3.0), (0, 1.0), (40, 7.0), (1.5, 2.0)])
def test_ratio_cprime_c_j(analysis, nu, r):

    assert analysis.ratio_cprime_c(nu, r, "J").real == pytest.approx(special.jvp(nu, r) / special.jv(nu, r),
                                                                     rel=1e-10)


@pytest.mark.parametrize('nu, r', [(5, 3.0), (0, 1.0), (40, 7.0)])
def test_ratio_cprime_c_h(analysis, nu, r):
    expected = complex(special.h1vp(nu, r) / special.hankel1(nu, r))

    assert analysis.ratio_cprime_c(nu, r, "H") == pytest.approx(expected, rel=1e-10)


def test_ratio_cprime_c_spherical(analysis):
    expected = special.spherical_jn(3, 2.0, derivative=True) / special.spherical_jn(3, 2.0)

    assert analysis.ratio_cprime_c(3, 2.0, "J", spherical=True).real == pytest.approx(expected, rel=1e-9)


def test_ratio_cprime_c_at_bessel_zero(analysis):
    with pytest.raises(NearZeroDenominatorException):
        analysis.ratio_cprime_c(0, float(special.jn_zeros(0, 1)[0]), "J")


@pytest.mark.parametrize('nu', [0, 3, 10, 60, 4.5])
@pytest.mark.parametrize('r', [0.5, 5.0, 20.0])
def test_wronskian_residual(analysis, nu, r):

    assert analysis.wronskian_residual(nu, r) < 1e-10


@pytest.mark.parametrize('lam', [-2.0, -0.5, 3.0])
def test_besseltmp_residual(analysis, lam):

    assert analysis.besseltmp_residual(3, 2.0, 5.0, lam) < 1e-9


def test_besseltmp_residual_zero_weight(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.besseltmp_residual(3, 2.0, 5.0, 0.0)


def test_series_oracle_j(analysis):
    value = analysis.series_oracle_j(5, 3.0, digits=30)

    with mpmath.workdps(40):
        expected = mpmath.besselj(5, 3)
        assert abs(value - expected) <= mpmath.mpf(10) ** -28 * abs(expected)


@pytest.mark.parametrize('nu, r', [(2, 1.5), (0, 4.0), (1.5, 2.0)])
def test_series_oracle_y(analysis, nu, r):
    value = analysis.series_oracle_y(nu, r, digits=30)

    with mpmath.workdps(40):
        expected = mpmath.bessely(nu, r)
        assert abs(value - expected) <= mpmath.mpf(10) ** -25 * abs(expected)


@pytest.mark.parametrize('nu, r', [(0, 1.0), (7, 12.0), (35, 30.0)])
def test_bessel_j_agrees_with_oracle(analysis, nu, r):

    assert complex(analysis.bessel_j(nu, r)).real == pytest.approx(float(analysis.series_oracle_j(nu, r)), rel=1e-10)


def test_series_oracle_precision_limit(analysis):
    with pytest.raises(PrecisionUnreachableException):
        analysis.series_oracle_j(2, 1.0, digits=101)


@pytest.mark.parametrize('nu, r', [(301, 1.0), (2, 100.5)])
def test_series_oracle_domain(analysis, nu, r):
    with pytest.raises(InvalidParameterException):
        analysis.series_oracle_j(nu, r)


def test_large_order_j(analysis):

    assert analysis.large_order_j(100, 1.0, N=3).isclose(analysis.bessel_j(100, 1.0), rel_tol=1e-10)


def test_large_order_h(analysis):

    assert analysis.large_order_h(100, 1.0, N=3).isclose(analysis.hankel1(100, 1.0), rel_tol=1e-9)


def test_large_order_derivative(analysis):

    assert analysis.large_order_j(80, 0.5, N=3, derivative=True).isclose(analysis.derivative(80, 0.5, "J"),
                                                                         rel_tol=1e-9)


def test_large_order_j_spherical(analysis):

    assert analysis.large_order_j_spherical(50, 1.0, N=3).isclose(analysis.spherical(50, 1.0, "j"), rel_tol=1e-9)


def test_large_order_h_spherical(analysis):

    assert analysis.large_order_h_spherical(50, 1.0, N=3).isclose(analysis.spherical(50, 1.0, "h"), rel_tol=1e-8)


def test_large_order_default_truncation(analysis):

    assert analysis.large_order_j(100, 1.0) == analysis.large_order_j(100, 1.0, N=analysis.truncation)


def test_large_order_h_truncation_too_large(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.large_order_h(2, 1.0, N=3)


def test_large_order_order_zero(analysis):
    with pytest.raises(InvalidOrderException):
        analysis.large_order_j(0, 1.0)


@pytest.mark.parametrize('kind, reference', [("J", "bessel_j"), ("H", "hankel1")])
def test_debye_expansion(analysis, kind, reference):
    exact = getattr(analysis, reference)(200, 100.0)

    coarse = analysis.debye(kind, 200, 0.5, terms=0)
    fine = analysis.debye(kind, 200, 0.5, terms=3)

    assert fine.isclose(exact, rel_tol=1e-6)
    assert abs(complex((fine - exact) / exact)) < abs(complex((coarse - exact) / exact))


def test_debye_derivative(analysis):

    assert analysis.debye("J", 200, 0.5, derivative=True, terms=3).isclose(analysis.derivative(200, 100.0, "J"),
                                                                          rel_tol=1e-6)


@pytest.mark.parametrize('z', [0.0, 1.0, 1.5])
def test_debye_domain(analysis, z):
    with pytest.raises(DomainException):
        analysis.debye("J", 10, z)


def test_dump_golden_values(analysis, tmp_path):
    path = tmp_path / "golden.csv"

    assert analysis.dump_golden_values(str(path), [(0, 1.0), (2.5, 3.0), (4, 0.0)], digits=20) == 3

    with open(str(path)) as handle:
        lines = handle.read().splitlines()
    assert lines[0] == CSV_VERSION_LINE
    rows = list(csv.reader(lines[1:]))
    assert rows[0] == ["nu", "r", "value_mantissa", "value_exponent", "digits"]
    mantissa, exponent = float(rows[1][2]), int(rows[1][3])
    assert mantissa * math.exp(exponent) == pytest.approx(special.j0(1.0), rel=1e-14)
    assert float(rows[3][2]) == 0.0

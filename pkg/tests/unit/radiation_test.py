import cmath
import math

import pytest

from signflip_modal import AbsorbingMedium, RadiationProfile
from signflip_modal.exceptions import BranchCutException, InvalidParameterException, InvalidTypeException


@pytest.mark.parametrize('z, expected', [(-4.0, 2j), (-1j, cmath.exp(0.75j * math.pi)), (1j, cmath.exp(0.25j * math.pi))])
def test_branch_sqrt(analysis, z, expected):

    assert analysis.branch_sqrt(z) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize('z', [0.0, 4.0, complex(4.0, 1e-16), complex(4.0, -1e-16)])
def test_branch_sqrt_on_cut(analysis, z):
    with pytest.raises(BranchCutException):
        analysis.branch_sqrt(z)


def test_branch_sqrt_has_positive_imaginary_part(analysis):
    for z in (-1.0 + 0.1j, -1.0 - 0.1j, 3.0 + 2.0j, 3.0 - 2.0j):
        assert analysis.branch_sqrt(z).imag > 0


def test_absorbing_wavenumber_positive(analysis):
    k = analysis.absorbing_wavenumber(AbsorbingMedium(1.0, 1.0, 2.0, 0.1, 0.1))

    assert k == pytest.approx(2.0 * (1.0 + 0.1j))


def test_absorbing_wavenumber_negative(analysis):
    k = analysis.absorbing_wavenumber(AbsorbingMedium(-1.0, -1.0, 2.0, 0.1, 0.1))

    assert k.real < 0
    assert k.imag > 0
    assert k == pytest.approx(2.0 * (-1.0 + 0.1j))


def test_absorbing_wavenumber_invalid_medium(analysis):
    with pytest.raises(InvalidTypeException):
        analysis.absorbing_wavenumber((1.0, 1.0, 2.0, 0.1, 0.1))


@pytest.mark.parametrize('arguments', [
    (1.0, -1.0, 2.0, 0.1, 0.1),
    (0.0, 1.0, 2.0, 0.1, 0.1),
    (1.0, 1.0, 2.0, 0.0, 0.1),
])
def test_absorbing_medium_invalid(arguments):
    with pytest.raises(InvalidParameterException):
        AbsorbingMedium(*arguments)


@pytest.mark.parametrize('sign, limit', [("positive", 2.0), ("negative", -2.0)])
def test_limiting_k(analysis, sign, limit):
    result = analysis.limiting_k(sign, 2.0)

    assert result["limit"] == limit
    assert result["monotone_tail"]
    assert result["deviations"][-1] < 1e-7
    assert len(result["values"]) == len(result["etas"]) == 8


def test_limiting_k_increasing_sequence(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.limiting_k("positive", 2.0, eta_sequence=[1e-3, 1e-2])


def test_radiation_residual_outgoing_positive(analysis):
    sommerfeld, reversed_condition = analysis.radiation_residual(RadiationProfile.outgoing_positive(3.0), 50.0)

    assert sommerfeld < 1e-12
    assert reversed_condition == pytest.approx(6.0)


def test_radiation_residual_outgoing_negative(analysis):
    sommerfeld, reversed_condition = analysis.radiation_residual(RadiationProfile.outgoing_negative(3.0), 50.0)

    assert reversed_condition < 1e-12
    assert sommerfeld == pytest.approx(6.0)


def test_radiation_residual_superposition(analysis):
    profile = RadiationProfile.superposition(RadiationProfile.outgoing_positive(1.0),
                                             RadiationProfile.outgoing_negative(1.0))

    sommerfeld, reversed_condition = analysis.radiation_residual(profile, 2.0)

    assert sommerfeld > 1.0
    assert reversed_condition > 1.0


def test_radiation_residual_invalid_point(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.radiation_residual(RadiationProfile.outgoing_positive(1.0), -1.0)

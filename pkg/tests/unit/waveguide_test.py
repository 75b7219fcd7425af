import cmath
import math

import numpy as np
import pytest

from signflip_modal import CaseLabel, ScaledValue, TransverseBasis, WaveguideConfig
from signflip_modal.exceptions import (CutoffException, InvalidParameterException, InvalidTypeException,
                                       SingularModeException)

DIRICHLET = TransverseBasis.dirichlet(1.0)

HALFLINE_STANDARD = WaveguideConfig(DIRICHLET, -3.0, 1.0, 2.0)
HALFLINE_CRITICAL = WaveguideConfig(DIRICHLET, -1.0, 1.0, 3.0)
HALFLINE_SUPER_CRITICAL = WaveguideConfig(DIRICHLET, -1.0, 2.0, 2.0)

SLAB_STANDARD = WaveguideConfig(DIRICHLET, -3.0, 1.0, 2.0, geometry="slab", length=0.5)
SLAB_CRITICAL = WaveguideConfig(DIRICHLET, -1.0, 1.0, 3.0, geometry="slab", length=1.0)
SLAB_SUPER_CRITICAL = WaveguideConfig(DIRICHLET, -1.0, 2.0, 2.0, geometry="slab", length=1.0)

# tanh(s L) = 1/2 at lambda_1 = pi^2 with s = sqrt(pi^2 - 1)
PLASMON_LENGTH = math.atanh(0.5) / math.sqrt(math.pi ** 2 - 1.0)
SLAB_PLASMON = WaveguideConfig(DIRICHLET, -2.0, 1.0, 1.0, geometry="slab", length=PLASMON_LENGTH)

# tan(t L) = t / s+ at lambda_1 = pi^2 with t = sqrt(16 - pi^2), s+ = sqrt(pi^2 - 1)
TRAPPED_T = math.sqrt(16.0 - math.pi ** 2)
TRAPPED_LENGTH = math.atan(TRAPPED_T / math.sqrt(math.pi ** 2 - 1.0)) / TRAPPED_T
SLAB_TRAPPED = WaveguideConfig(DIRICHLET, -1.0, 1.0, 4.0, geometry="slab", length=TRAPPED_LENGTH)

# lambda* = (kappa^2 k+^2 - k-^2) / (kappa^2 - 1) = pi^2 for kappa = -2, k- = 1
HALFLINE_PLASMON = WaveguideConfig(DIRICHLET, -2.0, math.sqrt((3.0 * math.pi ** 2 + 1.0) / 4.0), 1.0)


def test_transverse_basis_dirichlet():

    assert DIRICHLET.first_index == 1
    assert DIRICHLET.eigenvalue(2) == pytest.approx(4.0 * math.pi ** 2)
    assert [n for n, _ in DIRICHLET.eigenvalues_between(0.0, 50.0)] == [1, 2]
    assert DIRICHLET.eigenfunction(1, 0.5) == pytest.approx(math.sqrt(2.0))


def test_transverse_basis_neumann():
    basis = TransverseBasis.neumann(2.0)

    assert basis.first_index == 0
    assert basis.eigenvalue(0) == 0.0
    assert basis.eigenfunction(0, 1.3) == pytest.approx(1.0 / math.sqrt(2.0))
    assert list(basis.indices(3)) == [0, 1, 2, 3]


def test_transverse_basis_user():
    basis = TransverseBasis.from_eigenvalues([1.0, 2.0, 2.0, 5.0])

    assert basis.eigenvalue(3) == 2.0
    assert basis.last_index(10) == 4
    assert basis.eigenvalues_between(1.0, 5.0) == [(2, 2.0), (3, 2.0)]
    with pytest.raises(InvalidParameterException):
        basis.eigenfunction(1, 0.5)
    with pytest.raises(InvalidParameterException):
        basis.eigenvalue(5)


def test_transverse_basis_user_decreasing():
    with pytest.raises(InvalidParameterException):
        TransverseBasis.from_eigenvalues([2.0, 1.0])


def test_transverse_basis_analytic_needs_n_max():
    with pytest.raises(InvalidParameterException):
        DIRICHLET.last_index()


def test_transverse_basis_index_below_first():
    with pytest.raises(InvalidParameterException):
        DIRICHLET.eigenvalue(0)


def test_waveguide_config_geometry_spelling():

    assert WaveguideConfig(DIRICHLET, -3.0, 1.0, 2.0, geometry="half-line").geometry == "halfline"


@pytest.mark.parametrize('arguments, keywords', [
    ((DIRICHLET, 3.0, 1.0, 2.0), {}),
    ((DIRICHLET, 0.0, 1.0, 2.0), {}),
    ((DIRICHLET, -3.0, 1.0, 2.0), {"geometry": "slab"}),
    ((DIRICHLET, -3.0, 1.0, 2.0), {"geometry": "annulus"}),
    ((DIRICHLET, -3.0, -1.0, 2.0), {}),
])
def test_waveguide_config_invalid(arguments, keywords):
    with pytest.raises(InvalidParameterException):
        WaveguideConfig(*arguments, **keywords)


def test_waveguide_config_invalid_basis():
    with pytest.raises(InvalidTypeException):
        WaveguideConfig([1.0, 2.0], -3.0, 1.0, 2.0)


def test_waveguide_config_positive_contrast_allowed():

    assert WaveguideConfig(DIRICHLET, 2.0, 1.0, 2.0, allow_positive=True).kappa == 2.0


def test_beta(analysis):

    assert analysis.beta(1.0, 2.0, "plus") == pytest.approx(math.sqrt(3.0))
    assert analysis.beta(1.0, 2.0, "minus") == pytest.approx(math.sqrt(3.0))
    assert analysis.beta(9.0, 2.0, "plus") == pytest.approx(1j * math.sqrt(5.0))
    assert analysis.beta(9.0, 2.0, "minus") == pytest.approx(-1j * math.sqrt(5.0))


def test_beta_cutoff(analysis):
    with pytest.raises(CutoffException):
        analysis.beta(4.0, 2.0, "plus")


def test_det_unbounded_super_critical_vanishes(analysis):
    for n in range(1, 20):
        assert analysis.det_unbounded(HALFLINE_SUPER_CRITICAL, n) == 0


def test_det_unbounded_standard(analysis):
    expected = -1j * math.sqrt(math.pi ** 2 - 4.0) + 3j * math.sqrt(math.pi ** 2 - 1.0)

    determinant = analysis.det_unbounded(HALFLINE_STANDARD, 1)

    assert determinant == pytest.approx(expected, rel=1e-14)
    assert determinant.imag == pytest.approx(6.512, abs=1e-3)


def test_det_unbounded_propagating_modes(analysis):
    config = WaveguideConfig(TransverseBasis.from_eigenvalues([0.5]), -3.0, 1.0, 2.0)

    assert analysis.det_unbounded(config, 1) == pytest.approx(math.sqrt(3.5) + 3.0 * math.sqrt(0.5))


def test_kernel_scan_unbounded_inadmissible(analysis):
    scan = analysis.kernel_scan_unbounded(HALFLINE_STANDARD, 50)

    assert scan["case"] == "Standard"
    assert scan["lambda_star"] == pytest.approx(5.0 / 8.0)
    assert scan["admissible"] is False
    assert scan["kernel_indices"] == []


def test_kernel_scan_unbounded_admissible_without_eigenvalue(analysis):
    config = WaveguideConfig(DIRICHLET, -2.0, 3.0, 1.0)

    scan = analysis.kernel_scan_unbounded(config, 50)

    assert scan["lambda_star"] == pytest.approx(35.0 / 3.0)
    assert scan["admissible"] is True
    assert scan["kernel_indices"] == []
    assert scan["nearest_index"] == 1
    assert scan["gap"] == pytest.approx(35.0 / 3.0 - math.pi ** 2)


def test_kernel_scan_unbounded_user_spectrum(analysis):
    config = WaveguideConfig(TransverseBasis.from_eigenvalues([1.0, 35.0 / 3.0, 20.0]), -2.0, 3.0, 1.0)

    scan = analysis.kernel_scan_unbounded(config, 3)

    assert scan["kernel_indices"] == [2]
    assert abs(analysis.det_unbounded(config, 2)) < 1e-12


def test_kernel_scan_unbounded_super_critical(analysis):
    scan = analysis.kernel_scan_unbounded(HALFLINE_SUPER_CRITICAL, 10)

    assert scan["infinite_kernel"] is True
    assert scan["kernel_indices"] == list(range(1, 11))
    assert all(mode.kind == "SurfacePlasmon" for mode in scan["kernel_modes"])


def test_kernel_scan_unbounded_critical(analysis):

    assert analysis.kernel_scan_unbounded(HALFLINE_CRITICAL, 50)["kernel_indices"] == []


def test_unbounded_kernel_mode_field(analysis):
    scan = analysis.kernel_scan_unbounded(HALFLINE_PLASMON, 20)

    assert scan["kernel_indices"] == [1]
    mode = scan["kernel_modes"][0]
    assert mode.to_dict()["type"] == "SurfacePlasmon"
    assert mode.field(-1e-12, 0.3) == pytest.approx(mode.field(0.0, 0.3), abs=1e-9)

    decay = math.sqrt(math.pi ** 2 - 1.0)
    assert abs(mode.field(2.0, 0.3)) == pytest.approx(abs(mode.field(0.0, 0.3)) * math.exp(-2.0 * decay), rel=1e-9)
    decay_plus = math.sqrt(math.pi ** 2 - HALFLINE_PLASMON.k_plus ** 2)
    assert abs(mode.field(-2.0, 0.3)) == pytest.approx(abs(mode.field(0.0, 0.3)) * math.exp(-2.0 * decay_plus),
                                                       rel=1e-9)


@pytest.mark.parametrize('config', [HALFLINE_STANDARD, HALFLINE_CRITICAL])
def test_solve_unbounded_satisfies_system(analysis, config):
    n, f, g = 3, 1.0 + 0.5j, -2.0
    beta_plus, beta_minus, kappa = analysis._mode_betas(config, n)

    u_plus, u_minus = analysis.solve_unbounded(config, n, f, g)

    assert u_minus - u_plus == pytest.approx(f, abs=1e-12)
    assert kappa * beta_plus * u_plus - beta_minus * u_minus == pytest.approx(-1j * g, abs=1e-10)


def test_solve_unbounded_super_critical_is_singular(analysis):
    with pytest.raises(SingularModeException):
        analysis.solve_unbounded(HALFLINE_SUPER_CRITICAL, 1, 1.0, 0.0)


def test_solve_unbounded_needs_halfline(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.solve_unbounded(SLAB_STANDARD, 1, 1.0, 0.0)


@pytest.mark.parametrize('config', [HALFLINE_STANDARD, HALFLINE_CRITICAL])
def test_predicted_inverse_unbounded(analysis, config):
    n = 200
    predicted = analysis.predicted_inverse_unbounded(config, n)

    u_plus_f, u_minus_f = analysis.solve_unbounded(config, n, 1.0, 0.0)
    u_plus_g, u_minus_g = analysis.solve_unbounded(config, n, 0.0, 1.0)
    exact = np.array([[u_minus_f, u_minus_g], [u_plus_f, u_plus_g]])

    assert np.all(np.abs(exact / predicted - 1.0) < 1e-3)


def test_predicted_inverse_unbounded_super_critical(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.predicted_inverse_unbounded(HALFLINE_SUPER_CRITICAL, 5)


def test_det_slab_super_critical_identity(analysis):
    s = math.sqrt(math.pi ** 2 - 4.0)

    closed_form = analysis.det_slab(SLAB_SUPER_CRITICAL, 1)
    expanded = analysis.det_slab_expanded(SLAB_SUPER_CRITICAL, 1)

    assert complex(closed_form) == pytest.approx(2j * s * math.exp(-s), rel=1e-12)
    assert closed_form.isclose(expanded, rel_tol=1e-12)


def test_det_slab_standard_growth(analysis):
    n = 1000
    root = n * math.pi
    leading = ScaledValue.from_exp(SLAB_STANDARD.length * root) * (1j * (1.0 + SLAB_STANDARD.kappa) * root)

    ratio = complex(analysis.det_slab(SLAB_STANDARD, n) / leading)

    assert ratio == pytest.approx(1.0, abs=1e-2)


def test_det_slab_critical_growth(analysis):
    n = 1000
    root = n * math.pi
    leading = ScaledValue.from_exp(SLAB_CRITICAL.length * root) * (0.5j * (1.0 - 9.0) / root)

    ratio = complex(analysis.det_slab(SLAB_CRITICAL, n) / leading)

    assert ratio == pytest.approx(1.0, abs=1e-2)


def test_det_slab_huge_modes_stay_finite(analysis):
    determinant = analysis.det_slab(SLAB_STANDARD, 5000)

    assert determinant.log_abs() > 700
    assert math.isfinite(determinant.log_abs())


@pytest.mark.parametrize('config', [SLAB_STANDARD, SLAB_CRITICAL])
def test_solve_slab_satisfies_system(analysis, config):
    n, f, g = 3, 1.0, 0.5 - 1.0j

    u_plus, u_minus_plus, u_minus_minus = [complex(value) for value in analysis.solve_slab(config, n, f, g)]
    beta_plus, beta_minus, kappa = analysis._mode_betas(config, n)
    phase = cmath.exp(1j * beta_minus * config.length)

    assert -u_plus + u_minus_plus + u_minus_minus == pytest.approx(f, abs=1e-10)
    assert (kappa * beta_plus * u_plus + beta_minus * (u_minus_plus - u_minus_minus)
            == pytest.approx(-1j * g, abs=1e-9))
    assert u_minus_plus * phase + u_minus_minus / phase == pytest.approx(0.0, abs=1e-9)


def test_solve_slab_super_critical_growth(analysis):
    n = 20
    s = math.sqrt((n * math.pi) ** 2 - 4.0)

    u_plus = analysis.solve_slab(SLAB_SUPER_CRITICAL, n, 1.0, 0.0)[0]

    assert u_plus.isclose(-0.5 * (ScaledValue.from_exp(2.0 * s) + 1.0), rel_tol=1e-9)


def test_solve_slab_at_plasmon_is_singular(analysis):
    with pytest.raises(SingularModeException):
        analysis.solve_slab(SLAB_PLASMON, 1, 1.0, 0.0)


def test_slab_inverse(analysis):
    system = analysis._slab_system(SLAB_STANDARD, 4, 0.0, 0.0)
    inverse = analysis.slab_inverse(SLAB_STANDARD, 4)

    for i in range(3):
        for j in range(3):
            entry = sum((system.matrix[i][k] * inverse[k][j] for k in range(3)), ScaledValue())
            assert abs(complex(entry) - (1.0 if i == j else 0.0)) < 1e-9


@pytest.mark.parametrize('config', [SLAB_STANDARD, SLAB_CRITICAL])
def test_predicted_slab_columns(analysis, config):
    n = 40
    inverse = analysis.slab_inverse(config, n)
    predicted = analysis.predicted_slab_columns(config, n)

    for row in (0, 2):
        for column in (0, 1):
            assert complex(inverse[row][column] / predicted[row][column]) == pytest.approx(1.0, abs=1e-2)
    assert complex(inverse[1][0] / predicted[1][0]) == pytest.approx(1.0, abs=0.1)


def test_plasmon_scan(analysis):
    roots = analysis.plasmon_roots(SLAB_PLASMON, 50.0)

    assert roots == [pytest.approx(math.pi ** 2, rel=1e-10)]
    modes = analysis.plasmon_scan(SLAB_PLASMON, 50.0)
    assert [(mode.n, mode.kind) for mode in modes] == [(1, "SurfacePlasmon")]
    assert abs(complex(analysis.det_slab(SLAB_PLASMON, 1))) < 1e-10


def test_plasmon_scan_super_critical_is_empty(analysis):

    assert analysis.plasmon_roots(SLAB_SUPER_CRITICAL, 500.0) == []


@pytest.mark.parametrize('length', [0.25, 1.0, 3.0])
def test_plasmon_scan_super_critical_far_spectrum(analysis, length):
    config = WaveguideConfig(DIRICHLET, -1.0, 2.0, 2.0, geometry="slab", length=length)

    assert analysis.plasmon_roots(config, 2000.0) == []
    assert analysis.plasmon_scan(config, 2000.0) == []


def test_plasmon_roots_far_spectrum_keeps_known_root(analysis):
    # the relation tends to -s/2 at large lambda, so no root appears past pi^2

    assert analysis.plasmon_roots(SLAB_PLASMON, 5000.0) == [pytest.approx(math.pi ** 2, rel=1e-10)]


def test_plasmon_scan_positive_contrast_is_empty(analysis):
    config = WaveguideConfig(DIRICHLET, 1.0, 1.0, 1.0, geometry="slab", length=1.0, allow_positive=True)

    assert analysis.plasmon_roots(config, 500.0) == []


def test_trapped_mode_scan(analysis):
    modes = analysis.trapped_mode_scan(SLAB_TRAPPED)

    assert [(mode.n, mode.kind) for mode in modes] == [(1, "TrappedMode")]
    assert abs(complex(analysis.det_slab(SLAB_TRAPPED, 1))) < 1e-10

    mode = modes[0]
    assert abs(mode.field(TRAPPED_LENGTH, 0.4)) < 1e-12
    assert mode.field(-1e-12, 0.4) == pytest.approx(mode.field(0.0, 0.4), abs=1e-9)


def test_trapped_mode_roots_empty_interval(analysis):

    assert analysis.trapped_mode_roots(SLAB_SUPER_CRITICAL) == []


def test_trapped_mode_roots_positive_contrast(analysis):
    config = WaveguideConfig(DIRICHLET, 2.0, 1.0, 6.0, geometry="slab", length=2.0, allow_positive=True)

    roots = analysis.trapped_mode_roots(config)

    assert roots
    assert all(1.0 < root < 36.0 for root in roots)
    assert roots == sorted(roots)


def test_trapped_mode_roots_needs_slab(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.trapped_mode_roots(HALFLINE_STANDARD)


@pytest.mark.parametrize('config, p', [
    (HALFLINE_STANDARD, 0),
    (HALFLINE_CRITICAL, 2),
    (SLAB_STANDARD, 0),
    (SLAB_CRITICAL, 2),
])
def test_regularity_report_finite_loss(analysis, config, p):
    report = analysis.regularity_report(config, n_max=40)

    assert report.p == p
    assert not report.infinite


def test_regularity_report_halfline_super_critical(analysis):
    report = analysis.regularity_report(HALFLINE_SUPER_CRITICAL, n_max=40)

    assert report.p is None
    assert report.infinite
    assert report.infinite_kernel
    assert len(report.kernel) == 40


def test_regularity_report_slab_super_critical(analysis):
    report = analysis.regularity_report(SLAB_SUPER_CRITICAL, n_max=40)

    assert report.infinite
    assert "weighted" in report.statement
    assert report.kernel == []


def test_regularity_report_slab_plasmon(analysis):
    report = analysis.regularity_report(SLAB_PLASMON, n_max=10)

    assert report.case == CaseLabel.STANDARD.value
    assert [mode["type"] for mode in report.kernel] == ["SurfacePlasmon"]


def test_weighted_membership(analysis):
    convergent = [math.exp(-2.0 * n * math.pi) for n in range(1, 65)]
    divergent = [math.exp(-0.5 * n * math.pi) for n in range(1, 65)]

    assert analysis.weighted_membership(convergent, DIRICHLET, 0.0, 1.0)["verdict"] == "convergent"
    result = analysis.weighted_membership(divergent, DIRICHLET, 0.0, 1.0)
    assert result["verdict"] == "divergent"
    assert result["partial_sums"][-1].log_abs() == pytest.approx(result["log_partial_sums"][-1])


def test_weighted_membership_negative_length(analysis):
    with pytest.raises(InvalidParameterException):
        analysis.weighted_membership([1.0], DIRICHLET, 0.0, -1.0)


def test_source_distance_check(analysis):

    assert analysis.source_distance_check(1.0, 2.0)["well_posed"]
    result = analysis.source_distance_check(1.0, 0.5)
    assert not result["well_posed"]
    assert result["rate"] == pytest.approx(1.5)


def test_waveguide_mode_table(analysis):
    rows = analysis.waveguide_mode_table(SLAB_STANDARD, (1, 3))

    assert [row[0] for row in rows] == [1, 2, 3]
    assert all(len(row) == 9 for row in rows)

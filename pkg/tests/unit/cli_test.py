import json
import math

import pytest
from pydantic import ValidationError

from signflip_modal import cli
from signflip_modal.core import CSV_VERSION_LINE
from signflip_modal.exceptions import ConfigException, NumericalAssertionException

DISK_STANDARD = {
    "geometry": {"kind": "disk2d", "radius": 1.0},
    "media": {"kappa": -3.0, "k_plus": 2.0, "k_minus": 2.0},
}


def write_config(tmp_path, document):
    path = tmp_path / "run.json"
    path.write_text(json.dumps(document))
    return str(path)


def run_main(tmp_path, command, document, *extra):
    out = tmp_path / "out"
    code = cli.main([command, "--config", write_config(tmp_path, document), "--out", str(out)] + list(extra))
    return code, out


def test_parse_modes():

    assert cli.parse_modes("20..100") == (20, 100)
    assert cli.parse_modes("7..7") == (7, 7)


@pytest.mark.parametrize('text', ['20-100', 'a..b', '100..20'])
def test_parse_modes_invalid(text):
    with pytest.raises(ConfigException):
        cli.parse_modes(text)


def test_load_config_missing_file(tmp_path):
    with pytest.raises(ConfigException):
        cli.load_config(str(tmp_path / "missing.json"))


def test_load_config_invalid_json(tmp_path):
    path = tmp_path / "run.json"
    path.write_text("{not json")
    with pytest.raises(ConfigException):
        cli.load_config(str(path))


def test_load_config_unknown_field(tmp_path):
    with pytest.raises(ConfigException):
        cli.load_config(write_config(tmp_path, dict(DISK_STANDARD, colour="blue")))


def test_media_block_from_conductivities():
    media = cli.MediaBlock(sigma_plus=1.0, sigma_minus=-2.0, k_plus=1.0, k_minus=1.0)

    assert media.kappa == -0.5


def test_media_block_from_material_constants():
    media = cli.MediaBlock(kappa=-1.0, epsilon_plus=1.0, mu_plus=4.0, epsilon_minus=-1.0, mu_minus=-9.0, omega=0.5)

    assert media.k_plus == pytest.approx(1.0)
    assert media.k_minus == pytest.approx(1.5)


@pytest.mark.parametrize('media', [
    {"kappa": -1.0, "sigma_plus": 1.0, "sigma_minus": -1.0, "k_plus": 1.0, "k_minus": 1.0},
    {"k_plus": 1.0, "k_minus": 1.0},
    {"kappa": 0.0, "k_plus": 1.0, "k_minus": 1.0},
    {"kappa": -1.0, "k_plus": 1.0},
    {"kappa": -1.0, "k_plus": 1.0, "epsilon_minus": 1.0, "mu_minus": -1.0, "omega": 1.0},
])
def test_media_block_invalid(media):
    with pytest.raises(ValidationError):
        cli.MediaBlock(**media)


def test_geometry_block_slab_needs_length():
    with pytest.raises(ValidationError):
        cli.GeometryBlock(kind="slab")


def test_basis_block_user_needs_eigenvalues():
    with pytest.raises(ValidationError):
        cli.BasisBlock(kind="user")


def test_build_geometry_positive_disk():
    run = cli.RunConfig.model_validate({
        "geometry": {"kind": "disk2d"},
        "media": {"kappa": 2.0, "k_plus": 1.0, "k_minus": 1.0},
    })

    assert cli.build_geometry(run) is None


def test_build_geometry_user_basis():
    run = cli.RunConfig.model_validate({
        "geometry": {"kind": "halfline", "basis": {"kind": "user", "eigenvalues": [1.0, 4.0]}},
        "media": {"kappa": -3.0, "k_plus": 1.0, "k_minus": 2.0},
    })
    config = cli.build_geometry(run)

    assert config.geometry == "halfline"
    assert config.basis.provenance == "user"


def test_build_geometry_needs_media():
    with pytest.raises(ConfigException):
        cli.build_geometry(cli.RunConfig.model_validate({"geometry": {"kind": "disk2d"}}))


def test_main_classify(tmp_path):
    code, out = run_main(tmp_path, "classify", DISK_STANDARD)

    assert code == cli.EXIT_OK
    assert not (out / "classify.csv").exists()
    summary = json.loads((out / "classify.json").read_text())
    assert summary["case"] == "Standard"
    assert summary["p"] == 0


def test_main_classify_force_case(tmp_path):
    code, out = run_main(tmp_path, "classify", DISK_STANDARD, "--force-case", "critical")

    assert code == cli.EXIT_OK
    assert json.loads((out / "classify.json").read_text())["case"] == "Critical"


def test_main_classify_positive_contrast(tmp_path):
    document = {
        "geometry": {"kind": "ball3d"},
        "media": {"kappa": 2.0, "k_plus": 1.0, "k_minus": 1.0},
    }
    code, out = run_main(tmp_path, "classify", document)

    assert code == cli.EXIT_OK
    summary = json.loads((out / "classify.json").read_text())
    assert summary["case"] == "PositivePositive"
    assert summary["p"] == 0


def test_main_slopes(tmp_path):
    code, out = run_main(tmp_path, "slopes", DISK_STANDARD, "--modes", "20..100")

    assert code == cli.EXIT_OK
    lines = (out / "slopes.csv").read_text().splitlines()
    assert lines[0] == CSV_VERSION_LINE
    assert len(lines) == 2 + 81
    summary = json.loads((out / "slopes.json").read_text())
    assert summary["matches"] is True
    assert summary["predicted"] == [[0, -1], [0, -1]]


def test_main_slopes_mismatch(tmp_path, mocker):
    mock_fit = mocker.patch('signflip_modal.cli.Analysis.inverse_entry_slopes', autospec=True, spec_set=True)
    mock_fit.return_value = {"slopes": [[3.0, 2.0], [3.0, 2.0]], "r_squared": [[1.0, 1.0], [1.0, 1.0]]}
    mocker.patch('signflip_modal.cli.Analysis.mode_table', autospec=True, spec_set=True, return_value=[])

    code, out = run_main(tmp_path, "slopes", DISK_STANDARD, "--emit", "json")

    assert code == cli.EXIT_NUMERICAL
    assert json.loads((out / "slopes.json").read_text())["matches"] is False


def test_main_slopes_needs_disk(tmp_path):
    document = {
        "geometry": {"kind": "halfline"},
        "media": {"kappa": -3.0, "k_plus": 1.0, "k_minus": 2.0},
    }

    assert run_main(tmp_path, "slopes", document)[0] == cli.EXIT_CONFIG


def test_main_numerical_failure(tmp_path, mocker):
    mock_loss = mocker.patch('signflip_modal.cli.Analysis.regularity_loss', autospec=True, spec_set=True)
    mock_loss.side_effect = NumericalAssertionException("residual too large")

    code, out = run_main(tmp_path, "classify", DISK_STANDARD)

    assert code == cli.EXIT_NUMERICAL
    assert not out.exists()


def test_main_kernel_scan_halfline(tmp_path):
    document = {
        "geometry": {"kind": "halfline"},
        "media": {"kappa": -3.0, "k_plus": 1.0, "k_minus": 2.0},
    }
    code, out = run_main(tmp_path, "kernel-scan", document, "--modes", "1..5")

    assert code == cli.EXIT_OK
    assert json.loads((out / "kernel_scan.json").read_text())["kernel_indices"] == []
    lines = (out / "kernel_scan.csv").read_text().splitlines()
    assert lines[0] == CSV_VERSION_LINE
    assert len(lines) == 2 + 5


def test_main_kernel_scan_slab_plasmon(tmp_path):
    document = {
        "geometry": {"kind": "slab", "length": math.atanh(0.5) / math.sqrt(math.pi ** 2 - 1.0)},
        "media": {"kappa": -2.0, "k_plus": 1.0, "k_minus": 1.0},
        "lambda_max": 50.0,
    }
    code, out = run_main(tmp_path, "kernel-scan", document, "--modes", "1..2", "--emit", "json")

    assert code == cli.EXIT_OK
    summary = json.loads((out / "kernel_scan.json").read_text())
    assert [mode["n"] for mode in summary["plasmon_modes"]] == [1]
    assert summary["plasmon_roots"] == [pytest.approx(math.pi ** 2, rel=1e-10)]


def test_main_curvature(tmp_path):
    document = {
        "media": {"kappa": -3.0, "k_plus": 1.0, "k_minus": 1.0},
        "curvature": {"xi": 3.0, "n_list": [40, 80]},
    }
    code, out = run_main(tmp_path, "curvature", document)

    assert code == cli.EXIT_OK
    summary = json.loads((out / "curvature.json").read_text())
    assert summary["limit"] == pytest.approx(-2.0 * math.sqrt(8.0))
    assert [n for n, _ in summary["deviations"]] == [40, 80]


def test_main_field(tmp_path):
    document = dict(DISK_STANDARD, field={"f": {"0": [1.0, 0.0], "1": [0.0, 0.5]}, "n_modes": 3,
                                          "points": [[0.5, 0.0], [1.5, 1.0]], "samples": 8})
    code, out = run_main(tmp_path, "field", document)

    assert code == cli.EXIT_OK
    summary = json.loads((out / "field.json").read_text())
    assert summary["jump_residual"] < 1e-10
    assert summary["n_modes"] == 3
    lines = (out / "field.csv").read_text().splitlines()
    assert lines[1] == "x,y,re,im,region"
    assert lines[2].endswith(",minus")
    assert lines[3].endswith(",plus")


def test_main_field_invalid_ball_key(tmp_path):
    document = {
        "geometry": {"kind": "ball3d"},
        "media": {"kappa": -3.0, "k_plus": 1.0, "k_minus": 1.0},
        "field": {"f": {"1": [1.0, 0.0]}},
    }

    assert run_main(tmp_path, "field", document)[0] == cli.EXIT_CONFIG


def test_main_special(tmp_path):
    document = {"special": {"function": "J", "orders": [0.0, 1.0], "arguments": [1.0, 5.0]}}
    code, out = run_main(tmp_path, "special", document)

    assert code == cli.EXIT_OK
    lines = (out / "special.csv").read_text().splitlines()
    assert lines[1] == "nu,r,mantissa_re,mantissa_im,exponent,wronskian_residual"
    assert len(lines) == 2 + 4
    assert json.loads((out / "special.json").read_text())["max_wronskian_residual"] < 1e-10


def test_main_unwritable_output(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    code = cli.main(["classify", "--config", write_config(tmp_path, DISK_STANDARD), "--out", str(blocker)])

    assert code == cli.EXIT_IO


def test_main_missing_config(tmp_path):

    assert cli.main(["classify", "--config", str(tmp_path / "missing.json")]) == cli.EXIT_CONFIG


def test_main_unknown_command():

    assert cli.main(["plot", "--config", "run.json"]) == cli.EXIT_CONFIG


def test_main_invalid_mode_range(tmp_path):

    assert run_main(tmp_path, "slopes", DISK_STANDARD, "--modes", "100..20")[0] == cli.EXIT_CONFIG


def test_main_invalid_threads(tmp_path):

    assert run_main(tmp_path, "classify", DISK_STANDARD, "--threads", "0")[0] == cli.EXIT_CONFIG


def test_write_artifacts_csv_only(tmp_path):
    written = cli.write_artifacts(str(tmp_path), "kernel-scan", ["n", "value"], [[1, 0.5], [2, True]], {"a": 1j},
                                  "csv")

    assert written == [str(tmp_path / "kernel_scan.csv")]
    assert (tmp_path / "kernel_scan.csv").read_text().splitlines()[2:] == ["1,0.5", "2,True"]


def test_write_artifacts_jsonable(tmp_path):
    cli.write_artifacts(str(tmp_path), "classify", None, None, {"value": 1 + 2j, "items": (1, 2)}, "both")

    assert json.loads((tmp_path / "classify.json").read_text()) == {"items": [1, 2], "value": [1.0, 2.0]}

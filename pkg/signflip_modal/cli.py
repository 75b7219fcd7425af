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
This module contains the signflip-modal command line interface.
"""

import argparse
import csv
import json
import logging
import math
import os
import sys
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .core import CSV_VERSION_LINE, CaseLabel
from .disk_ball import MODE_TABLE_HEADER, REGULARITY_TABLE, DiskBallConfig
from .exceptions import (ConfigException, DomainException, InvalidParameterException, InvalidTypeException,
                         SignFlipException)
from .field_synthesis import GRID_HEADER_2D, GRID_HEADER_3D
from .signflip_modal import Analysis
from .waveguide import MODE_TABLE_HEADER as WAVEGUIDE_TABLE_HEADER
from .waveguide import TransverseBasis, WaveguideConfig

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_CONFIG = 2
EXIT_IO = 3

COMMANDS = ["slopes", "classify", "kernel-scan", "curvature", "field", "special"]

# allowed gap between fitted and predicted slopes
SLOPE_TOLERANCE = 0.1

log = logging.getLogger(__name__)


class BasisBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["dirichlet", "neumann", "user"] = "dirichlet"
    length: float = Field(default=1.0, gt=0)
    eigenvalues: Optional[List[float]] = None

    @model_validator(mode="after")
    def _user_needs_eigenvalues(self):
        if self.kind == "user" and not self.eigenvalues:
            raise ValueError("a user basis needs a nonempty eigenvalues list")
        return self


class GeometryBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["disk2d", "ball3d", "halfline", "slab"]
    radius: float = Field(default=1.0, gt=0)
    length: Optional[float] = Field(default=None, gt=0)
    basis: BasisBlock = Field(default_factory=BasisBlock)

    @model_validator(mode="after")
    def _slab_needs_length(self):
        if self.kind == "slab" and self.length is None:
            raise ValueError("a slab needs a length")
        return self


class MediaBlock(BaseModel):
    """Contrast and wave numbers. The contrast is kappa itself or sigma_plus / sigma_minus; each wave number is
    given directly or as omega sqrt(epsilon mu)."""

    model_config = ConfigDict(extra="forbid")

    kappa: Optional[float] = None
    sigma_plus: Optional[float] = None
    sigma_minus: Optional[float] = None
    k_plus: Optional[float] = Field(default=None, gt=0)
    k_minus: Optional[float] = Field(default=None, gt=0)
    epsilon_plus: Optional[float] = None
    mu_plus: Optional[float] = None
    epsilon_minus: Optional[float] = None
    mu_minus: Optional[float] = None
    omega: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _resolve(self):
        has_sigma = self.sigma_plus is not None or self.sigma_minus is not None
        if (self.kappa is None) == (not has_sigma):
            raise ValueError("give exactly one of kappa or the (sigma_plus, sigma_minus) pair")
        if has_sigma:
            if self.sigma_plus is None or not self.sigma_minus:
                raise ValueError("sigma_plus and a nonzero sigma_minus must be given together")
            self.kappa = self.sigma_plus / self.sigma_minus
        if self.kappa == 0:
            raise ValueError("kappa must be nonzero")

        for side in ("plus", "minus"):
            if getattr(self, "k_" + side) is not None:
                continue
            epsilon, mu = getattr(self, "epsilon_" + side), getattr(self, "mu_" + side)
            if epsilon is None or mu is None or self.omega is None:
                raise ValueError("k_{0} needs either a value or epsilon_{0}, mu_{0} and omega".format(side))
            if epsilon * mu <= 0:
                raise ValueError("epsilon_{0} and mu_{0} must be nonzero with the same sign".format(side))
            setattr(self, "k_" + side, self.omega * math.sqrt(epsilon * mu))
        return self


class CurvatureBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    xi: float = Field(gt=0)
    n_list: List[int] = Field(default_factory=lambda: [40, 80, 160, 320])


class FieldBlock(BaseModel):
    """Interface data keyed by mode ("3", or "2,1" for (l, m)) as [re, im] pairs, plus the evaluation points."""

    model_config = ConfigDict(extra="forbid")

    f: Dict[str, List[float]] = Field(default_factory=dict)
    g: Dict[str, List[float]] = Field(default_factory=dict)
    n_modes: Optional[int] = Field(default=None, ge=1)
    points: List[List[float]] = Field(default_factory=list)
    samples: int = Field(default=32, ge=1)


class SpecialBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    function: Literal["J", "Y", "H"] = "J"
    orders: List[float]
    arguments: List[float]
    digits: int = Field(default=30, ge=5, le=100)


class RunConfig(BaseModel):
    """A single JSON run description."""

    model_config = ConfigDict(extra="forbid")

    command: Optional[Literal["slopes", "classify", "kernel-scan", "curvature", "field", "special"]] = None
    geometry: Optional[GeometryBlock] = None
    media: Optional[MediaBlock] = None
    modes: Optional[str] = None
    lambda_max: Optional[float] = Field(default=None, gt=0)
    force_case: Optional[Literal["standard", "critical", "supercritical"]] = None
    out: str = "."
    emit: Literal["json", "csv", "both"] = "both"
    threads: Optional[int] = Field(default=None, ge=1)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    curvature: Optional[CurvatureBlock] = None
    field: Optional[FieldBlock] = None
    special: Optional[SpecialBlock] = None


def parse_modes(text):
    """Parse `a..b` into an inclusive (a, b) pair."""

    try:
        low, high = (int(part) for part in str(text).split(".."))
    except ValueError:
        raise ConfigException("'{}' is not a valid mode range. Use a..b, e.g. 20..100.".format(text))
    if high < low:
        raise ConfigException("The mode range {} is empty.".format(text))
    return low, high


def load_config(path):
    """Read and validate a RunConfig document.

    Raises:
        ConfigException -- The file cannot be read, is not JSON or does not validate.
    """

    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as error:
        raise ConfigException("Cannot read the config file {}: {}.".format(path, error))
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigException("The config file {} is not valid JSON: {}.".format(path, error))
    try:
        return RunConfig.model_validate(document)
    except ValidationError as error:
        raise ConfigException("The config file {} is invalid:\n{}".format(path, error))


def build_geometry(run):
    """Return the DiskBallConfig or WaveguideConfig of a run; None for kappa > 0 disks and balls."""

    if run.geometry is None or run.media is None:
        raise ConfigException("This command needs the geometry and media blocks.")
    geometry, media = run.geometry, run.media

    if geometry.kind in ("disk2d", "ball3d"):
        if media.kappa > 0:
            return None
        return DiskBallConfig(2 if geometry.kind == "disk2d" else 3, geometry.radius, media.kappa, media.k_plus,
                              media.k_minus)

    block = geometry.basis
    if block.kind == "dirichlet":
        basis = TransverseBasis.dirichlet(block.length)
    elif block.kind == "neumann":
        basis = TransverseBasis.neumann(block.length)
    else:
        basis = TransverseBasis.from_eigenvalues(block.eigenvalues)
    return WaveguideConfig(basis, media.kappa, media.k_plus, media.k_minus, geometry=geometry.kind,
                           length=geometry.length, allow_positive=True)


def cmd_slopes(analysis, run, config, modes):
    """Inverse-entry slopes over the mode range, checked against the predicted [[p, p-1], [p, p-1]]."""

    if not isinstance(config, DiskBallConfig):
        raise ConfigException("slopes needs a disk2d or ball3d geometry with kappa < 0.")
    modes = modes or (20, 100)
    fit = analysis.inverse_entry_slopes(config, m_range=modes)
    case = analysis.classify_case(config, run.force_case)
    p = REGULARITY_TABLE[config.dimension][case.value]
    predicted = [[p, p - 1], [p, p - 1]]
    matches = all(abs(fit["slopes"][i][j] - predicted[i][j]) <= SLOPE_TOLERANCE for i in range(2) for j in range(2))

    summary = {
        "geometry": config.geometry,
        "case": case.value,
        "modes": list(modes),
        "slopes": fit["slopes"],
        "r_squared": fit["r_squared"],
        "predicted": predicted,
        "p": p,
        "matches": matches,
    }
    return MODE_TABLE_HEADER, analysis.mode_table(config, modes), summary, (EXIT_OK if matches else EXIT_NUMERICAL)


def cmd_classify(analysis, run, config, modes):
    if config is None:
        summary = {
            "geometry": run.geometry.kind,
            "case": "PositivePositive",
            "p": 0,
            "statement": "positive-positive: classical, p=0",
            "notes": ["kappa > 0: the classical transmission problem, no regularity is lost"],
        }
        return None, None, summary, EXIT_OK

    if isinstance(config, DiskBallConfig):
        report = analysis.regularity_loss(config, force_case=run.force_case)
    elif config.kappa > 0:
        summary = {
            "geometry": config.geometry,
            "case": "PositivePositive",
            "p": 0,
            "statement": "positive-positive: classical, p=0",
            "notes": ["kappa > 0: the classical transmission problem; trapped modes may still exist"],
            "kernel": [mode.to_dict() for mode in analysis.trapped_mode_scan(config)]
            if config.geometry == "slab" else [],
        }
        return None, None, summary, EXIT_OK
    else:
        n_max = modes[1] if modes else 200
        report = analysis.regularity_report(config, force_case=run.force_case, n_max=n_max,
                                            lambda_max=run.lambda_max)
    return None, None, report.to_dict(), EXIT_OK


def cmd_kernel_scan(analysis, run, config, modes):
    if not isinstance(config, WaveguideConfig):
        raise ConfigException("kernel-scan needs a halfline or slab geometry.")
    low, high = modes or (config.basis.first_index, 200)
    high = config.basis.last_index(high)

    if config.geometry == "halfline":
        scan = analysis.kernel_scan_unbounded(config, high)
        scan["kernel_modes"] = [mode.to_dict() for mode in scan["kernel_modes"]]
        summary = scan
    else:
        lambda_max = run.lambda_max or config.basis.eigenvalue(high)
        summary = {
            "case": analysis.classify_case(config).value,
            "trapped_roots": analysis.trapped_mode_roots(config),
            "trapped_modes": [mode.to_dict() for mode in analysis.trapped_mode_scan(config)],
            "plasmon_roots": analysis.plasmon_roots(config, lambda_max),
            "plasmon_modes": [mode.to_dict() for mode in analysis.plasmon_scan(config, lambda_max)],
            "lambda_max": lambda_max,
        }
    rows = analysis.waveguide_mode_table(config, (max(low, config.basis.first_index), high))
    return WAVEGUIDE_TABLE_HEADER, rows, summary, EXIT_OK


def cmd_curvature(analysis, run, config, modes):
    if run.curvature is None or run.media is None:
        raise ConfigException("curvature needs the media and curvature blocks.")
    media, block = run.media, run.curvature
    limit = analysis.curvature_limit(block.xi, media.kappa, media.k_plus, media.k_minus)
    deviations = analysis.curvature_convergence(block.xi, media.kappa, media.k_plus, media.k_minus, block.n_list)
    values = [deviation for _, deviation in deviations]
    summary = {
        "xi": block.xi,
        "limit": limit,
        "deviations": [[n, deviation] for n, deviation in deviations],
        "monotone": all(b < a for a, b in zip(values, values[1:])),
    }
    return ["n", "deviation"], [[n, deviation] for n, deviation in deviations], summary, EXIT_OK


def cmd_field(analysis, run, config, modes):
    if config is None or run.field is None:
        raise ConfigException("field needs a negative contrast and the field block.")
    block = run.field
    f_data = {_mode_key(config, key): complex(*value) for key, value in block.f.items()}
    g_data = {_mode_key(config, key): complex(*value) for key, value in block.g.items()}

    field = analysis.solve_field(config, f_data, g_data, n_modes=block.n_modes)
    samples = _interface_samples(field.geometry, block.samples, getattr(config, "basis", None))
    jump, flux = analysis.transmission_residual(field, (f_data, g_data), samples)
    summary = {
        "geometry": field.geometry,
        "n_modes": field.n_modes,
        "jump_residual": jump,
        "flux_residual": flux,
    }
    header = GRID_HEADER_3D if field.geometry == "ball3d" else GRID_HEADER_2D
    return header, analysis.grid_rows(field, [tuple(point) for point in block.points]), summary, EXIT_OK


def cmd_special(analysis, run, config, modes):
    if run.special is None:
        raise ConfigException("special needs the special block.")
    block = run.special
    evaluate = {"J": analysis.bessel_j, "Y": analysis.bessel_y, "H": analysis.hankel1}[block.function]

    rows = []
    worst = 0.0
    for nu in block.orders:
        for r in block.arguments:
            value = evaluate(nu, r)
            residual = analysis.wronskian_residual(nu, r) if r > 0 else 0.0
            worst = max(worst, residual)
            rows.append([nu, r, value.mantissa.real, value.mantissa.imag, value.exponent, residual])
    summary = {
        "function": block.function,
        "points": len(rows),
        "max_wronskian_residual": worst,
    }
    header = ["nu", "r", "mantissa_re", "mantissa_im", "exponent", "wronskian_residual"]
    return header, rows, summary, EXIT_OK


HANDLERS = {
    "slopes": cmd_slopes,
    "classify": cmd_classify,
    "kernel-scan": cmd_kernel_scan,
    "curvature": cmd_curvature,
    "field": cmd_field,
    "special": cmd_special,
}


def write_artifacts(out, command, header, rows, summary, emit):
    """Write `<command>.csv` and/or `<command>.json` under `out`. Returns the written paths."""

    os.makedirs(out, exist_ok=True)
    stem = command.replace("-", "_")
    written = []
    if emit in ("csv", "both") and header is not None:
        path = os.path.join(out, stem + ".csv")
        with open(path, "w", newline="") as handle:
            handle.write(CSV_VERSION_LINE + "\n")
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_format_cell(value) for value in row])
        written.append(path)
    if emit in ("json", "both"):
        path = os.path.join(out, stem + ".json")
        with open(path, "w", newline="") as handle:
            json.dump(_jsonable(summary), handle, sort_keys=True, indent=2)
            handle.write("\n")
        written.append(path)
    return written


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="Path to the JSON run configuration.")
    common.add_argument("--out", default=None, help="Output directory (overrides the config).")
    common.add_argument("--modes", default=None, help="Inclusive mode range a..b.")
    common.add_argument("--emit", choices=["json", "csv", "both"], default=None)
    common.add_argument("--force-case", choices=["standard", "critical", "supercritical"], default=None)
    common.add_argument("--threads", type=int, default=None, help="Workers for mode scans (overrides "
                                                                   "SIGNFLIP_THREADS).")

    parser = argparse.ArgumentParser(prog="signflip-modal", description="Modal analysis of transmission problems "
                                                                         "with sign-changing coefficients.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common])
    return parser


def main(argv=None):
    """Entry point of the `signflip-modal` console script. Returns the exit code."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code == 0 else EXIT_CONFIG

    try:
        run = load_config(args.config)
        run = _apply_overrides(run, args)
        modes = parse_modes(run.modes) if run.modes else None
        analysis = Analysis(tolerances=run.tolerances or None, threads=run.threads)
        config = build_geometry(run) if args.command not in ("curvature", "special") else None
        header, rows, summary, code = HANDLERS[args.command](analysis, run, config, modes)
    except (ConfigException, InvalidParameterException, InvalidTypeException, DomainException) as error:
        log.error("{}: {}".format(args.command, error))
        return EXIT_CONFIG
    except SignFlipException as error:
        log.error("{}: {}".format(args.command, error))
        return EXIT_NUMERICAL

    try:
        write_artifacts(run.out, args.command, header, rows, summary, run.emit)
    except OSError as error:
        log.error("{}: Cannot write the artifacts: {}".format(args.command, error))
        return EXIT_IO

    if code != EXIT_OK:
        log.error("{}: The fitted slopes do not match the predicted ones.".format(args.command))
    return code


def _apply_overrides(run, args):
    updates = {"command": args.command}
    for name in ("out", "modes", "emit", "force_case", "threads"):
        value = getattr(args, name)
        if value is not None:
            updates[name] = value
    if updates.get("threads") is not None and updates["threads"] < 1:
        raise ConfigException("--threads must be a positive integer.")
    return run.model_copy(update=updates)


def _mode_key(config, text):
    try:
        parts = [int(part) for part in str(text).split(",")]
    except ValueError:
        raise ConfigException("'{}' is not a valid mode key.".format(text))
    if isinstance(config, DiskBallConfig) and config.dimension == 3:
        if len(parts) != 2:
            raise ConfigException("Ball modes are keyed 'l,m', got '{}'.".format(text))
        return tuple(parts)
    if len(parts) != 1:
        raise ConfigException("'{}' is not a valid mode key.".format(text))
    return parts[0]


def _interface_samples(geometry, count, basis):
    if geometry == "disk2d":
        return [2.0 * math.pi * j / count for j in range(count)]
    if geometry == "ball3d":
        return [(math.pi * (j + 0.5) / count, 2.0 * math.pi * j / count) for j in range(count)]
    if basis is None or basis.length is None:
        raise ConfigException("Interface samples need an analytic transverse basis.")
    return [basis.length * (j + 0.5) / count for j in range(count)]


def _format_cell(value):
    if isinstance(value, bool) or isinstance(value, str):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return "{:.17g}".format(value)


def _jsonable(value):
    if isinstance(value, CaseLabel):
        return value.value
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if hasattr(value, "item"):
        return value.item()
    return value


if __name__ == "__main__":
    sys.exit(main())

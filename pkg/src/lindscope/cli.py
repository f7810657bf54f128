"""Command-line front end.

Subcommands::

    lindscope analyze MODEL.json [--out FILE] [--format csv|json]
                                 [--kappa-lo X] [--kappa-hi Y] [--seed N]
    lindscope series  MODEL.json [--t-end X] [--steps N] [--out FILE]
                                 [--format csv|json] [--seed N]
    lindscope sweep   MODEL.json --param NAME --from A --to B --points N
                                 [--log] [--kappa-lo X] [--kappa-hi Y] ...
    lindscope regimes MODEL.json --param NAME --from A --to B --points N
                                 [--log] [--kappa-lo X] [--kappa-hi Y] ...

Model files are UTF-8 JSON. Either a named model,

    {"model": {"type": "dephasing", "gamma_z": 1.0}}

or explicit matrices, every complex entry a two-element [re, im] array
(bare numbers are accepted as purely real entries); a "rate" next to a
jump "matrix" scales it by sqrt(rate)::

    {"dim": 2,
     "hamiltonian": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
     "jumps": [{"rate": 1.0,
                "matrix": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]}]}

Output is deterministic: fixed column order, floats printed with 17
significant digits, LF newlines, CSV always carries a header row. Files
are written to a temporary name and renamed on success, so a failing run
never leaves a partial file. Exit codes: 0 success, 1 model or
configuration error, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .dynamics import DEFAULT_STEPS, TimeGrid, amplification_series, default_grid
from .errors import ConfigError, IoError, LindscopeError
from .metrics import RegimeThresholds, compute_metrics, structured_dissipator_report
from .models import ModelSpec, build
from .superop import LindbladModel, liouvillian

__all__ = ["RunConfig", "parse_model_file", "run", "main"]

ANALYZE_FIELDS = (
    "label",
    "dim",
    "delta",
    "eta",
    "nd_norm",
    "kappa",
    "bound_margin",
    "regime",
    "generator_norm",
    "is_structured",
    "gamma",
    "jump_map_spectrum",
    "shift_max_error",
)
SERIES_FIELDS = (
    "t",
    "prop_norm",
    "a_paper",
    "a_spectral",
    "gronwall_env",
    "appg_env",
    "appg_satisfied",
)
SWEEP_FIELDS = (
    "delta",
    "eta",
    "nd_norm",
    "kappa",
    "bound_margin",
    "regime",
    "generator_norm",
)
REGIMES_FIELDS = ("delta", "eta", "kappa", "regime")


# ---------------------------------------------------------------------------
# Deterministic formatting: 17 significant digits round-trips doubles exactly.
# ---------------------------------------------------------------------------

def fmt_float(x: float) -> str:
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    s = f"{x:.17g}"
    if not any(c in s for c in ".eE"):
        s += ".0"  # keep JSON numbers typed as floats
    return s


def fmt_complex(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}j"


def _json_fragment(value, out: list[str]) -> None:
    if value is None:
        out.append("null")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, (int, np.integer)):
        out.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        out.append(fmt_float(float(value)))
    elif isinstance(value, (complex, np.complexfloating)):
        _json_fragment([float(value.real), float(value.imag)], out)
    elif isinstance(value, dict):
        out.append("{")
        for i, (k, v) in enumerate(value.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(k)))
            out.append(": ")
            _json_fragment(v, out)
        out.append("}")
    elif isinstance(value, (list, tuple, np.ndarray)):
        out.append("[")
        for i, v in enumerate(value):
            if i:
                out.append(", ")
            _json_fragment(v, out)
        out.append("]")
    else:
        raise ConfigError(f"cannot serialize value of type {type(value).__name__}")


def to_json(value) -> str:
    out: list[str] = []
    _json_fragment(value, out)
    out.append("\n")
    return "".join(out)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return fmt_float(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        return fmt_complex(complex(value))
    if isinstance(value, (list, tuple, np.ndarray)):
        return ";".join(_csv_cell(v) for v in value)
    return str(value)


def to_csv(fieldnames, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([_csv_cell(row[name]) for name in fieldnames])
    return buf.getvalue()


def write_output(text: str, path: str | None) -> None:
    """Write to stdout, or atomically to a file (temp + rename)."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    target = Path(path)
    try:
        fd, tmp_name = tempfile.mkstemp(
            prefix=target.name + ".", suffix=".tmp", dir=str(target.parent or Path("."))
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
            os.replace(tmp_name, target)
        except BaseException:
            os.unlink(tmp_name)
            raise
    except OSError as exc:
        raise IoError(f"cannot write {path!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# Model files
# ---------------------------------------------------------------------------

def _load_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read model file {path!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"invalid JSON in {path!r}: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from exc


def _parse_complex(value, where: str) -> complex:
    if isinstance(value, bool):
        raise ConfigError(f"{where}: expected a number or [re, im] pair, got a boolean")
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        return complex(value[0], value[1])
    raise ConfigError(f"{where}: expected a number or [re, im] pair, got {value!r}")


def _parse_matrix(obj, where: str, dim: int) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != dim:
        raise ConfigError(f"{where}: expected {dim} rows")
    out = np.zeros((dim, dim), dtype=complex)
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != dim:
            raise ConfigError(f"{where}: row {i} must hold {dim} entries")
        for j, entry in enumerate(row):
            out[i, j] = _parse_complex(entry, f"{where}[{i}][{j}]")
    return out


def _spec_from_obj(obj, where: str = "model") -> ModelSpec:
    if not isinstance(obj, dict):
        raise ConfigError(f'{where}: expected an object with a "type" key')
    if "type" not in obj:
        raise ConfigError(f'{where}: missing "type"')
    kind = obj["type"]
    if not isinstance(kind, str):
        raise ConfigError(f'{where}: "type" must be a string')
    params = {}
    for key, value in obj.items():
        if key == "type":
            continue
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{where}: parameter {key!r} must be a number")
        params[key] = value
    return ModelSpec(kind, params)


def _explicit_from_obj(obj, path: str) -> LindbladModel:
    allowed = {"dim", "hamiltonian", "jumps", "label"}
    for key in obj:
        if key not in allowed:
            raise ConfigError(f"{path}: unknown key {key!r} in explicit model")
    for key in ("dim", "hamiltonian", "jumps"):
        if key not in obj:
            raise ConfigError(f"{path}: missing key {key!r} in explicit model")
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ConfigError(f'{path}: "dim" must be a positive integer')
    hamiltonian = _parse_matrix(obj["hamiltonian"], "hamiltonian", dim)
    if not isinstance(obj["jumps"], list):
        raise ConfigError(f'{path}: "jumps" must be an array')
    jumps = []
    for i, item in enumerate(obj["jumps"]):
        where = f"jumps[{i}]"
        if not isinstance(item, dict) or "matrix" not in item:
            raise ConfigError(f'{path}: {where} must be an object with a "matrix" key')
        for key in item:
            if key not in {"matrix", "rate"}:
                raise ConfigError(f"{path}: unknown key {key!r} in {where}")
        matrix = _parse_matrix(item["matrix"], f"{where}.matrix", dim)
        rate = item.get("rate", 1.0)
        if isinstance(rate, bool) or not isinstance(rate, (int, float)) or rate < 0:
            raise ConfigError(f"{path}: {where}.rate must be a nonnegative number")
        jumps.append(np.sqrt(float(rate)) * matrix)
    label = obj.get("label", "")
    if not isinstance(label, str):
        raise ConfigError(f'{path}: "label" must be a string')
    return LindbladModel(dim=dim, hamiltonian=hamiltonian, jumps=tuple(jumps), label=label)


def parse_model_file(path: str) -> LindbladModel:
    """Read a model file, named or explicit, into a validated model."""
    obj = _load_json(path)
    if not isinstance(obj, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    if "model" in obj:
        for key in obj:
            if key != "model":
                raise ConfigError(f"{path}: unknown key {key!r} next to \"model\"")
        return build(_spec_from_obj(obj["model"]))
    return _explicit_from_obj(obj, path)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

@dataclass
class RunConfig:
    command: str
    model_path: str
    output_path: str | None = None
    fmt: str | None = None  # csv | json; None picks the command default
    t_end: float | None = None
    steps: int = DEFAULT_STEPS
    thresholds: RegimeThresholds | None = None
    param: str | None = None
    start: float | None = None
    stop: float | None = None
    points: int | None = None
    log_scale: bool = False
    seed: int | None = None  # reserved for randomized diagnostics


def _metrics_fields(metrics) -> dict:
    return {
        "delta": metrics.delta,
        "eta": metrics.eta,
        "nd_norm": metrics.nd_norm,
        "kappa": "undefined" if metrics.kappa is None else metrics.kappa,
        "bound_margin": metrics.bound_margin,
        "regime": metrics.regime.value,
        "generator_norm": metrics.generator_norm,
    }


def analyze_record(model: LindbladModel, thresholds: RegimeThresholds | None = None) -> dict:
    """The flat record the analyze command emits."""
    superop = liouvillian(model)
    metrics = compute_metrics(superop, thresholds)
    report = structured_dissipator_report(model)
    record = {"label": model.label, "dim": model.dim}
    record.update(_metrics_fields(metrics))
    record["is_structured"] = report.is_structured
    record["gamma"] = report.gamma
    record["jump_map_spectrum"] = (
        None
        if report.jump_map_spectrum is None
        else [complex(z) for z in report.jump_map_spectrum]
    )
    record["shift_max_error"] = report.shift_max_error
    return record


def series_rows(series) -> list[dict]:
    rows = []
    for i, t in enumerate(series.times):
        rows.append(
            {
                "t": float(t),
                "prop_norm": float(series.prop_norm[i]),
                "a_paper": float(series.a_paper[i]),
                "a_spectral": float(series.a_spectral[i]),
                "gronwall_env": float(series.gronwall_env[i]),
                "appg_env": float(series.appg_env[i]),
                "appg_satisfied": bool(series.appg_satisfied[i]),
            }
        )
    return rows


def _sweep_values(config: RunConfig) -> np.ndarray:
    if config.param is None or config.start is None or config.stop is None:
        raise ConfigError("sweep needs --param, --from and --to")
    points = config.points if config.points is not None else 10
    if points < 1:
        raise ConfigError(f"--points must be at least 1, got {points}")
    if config.log_scale:
        if config.start <= 0 or config.stop <= 0:
            raise ConfigError("--log needs strictly positive --from and --to")
        return np.geomspace(config.start, config.stop, points)
    return np.linspace(config.start, config.stop, points)


def _sweep_rows(config: RunConfig, fields) -> tuple[list[str], list[dict]]:
    raw = _load_json(config.model_path)
    if not isinstance(raw, dict) or "model" not in raw:
        raise ConfigError(
            f"{config.model_path}: sweeping needs a named model file "
            '(a top-level "model" object)'
        )
    base = _spec_from_obj(raw["model"])
    rows = []
    for value in _sweep_values(config):
        params = dict(base.params)
        params[config.param] = float(value)
        model = build(ModelSpec(base.kind, params))
        metrics = compute_metrics(liouvillian(model), config.thresholds)
        row = {config.param: float(value)}
        row.update(
            {name: v for name, v in _metrics_fields(metrics).items() if name in fields}
        )
        rows.append(row)
    return [config.param, *fields], rows


def run(config: RunConfig) -> int:
    """Execute one command; raises lindscope errors, returns 0 on success."""
    fmt = config.fmt or ("json" if config.command == "analyze" else "csv")
    if config.command == "analyze":
        model = parse_model_file(config.model_path)
        record = analyze_record(model, config.thresholds)
        if fmt == "json":
            text = to_json(record)
        else:
            text = to_csv(ANALYZE_FIELDS, [record])
    elif config.command == "series":
        model = parse_model_file(config.model_path)
        superop = liouvillian(model)
        if config.t_end is not None:
            grid = TimeGrid(0.0, config.t_end, config.steps)
        else:
            grid = default_grid(superop, config.steps)
        rows = series_rows(amplification_series(superop, grid))
        text = to_json(rows) if fmt == "json" else to_csv(SERIES_FIELDS, rows)
    elif config.command == "sweep":
        header, rows = _sweep_rows(config, SWEEP_FIELDS)
        text = to_json(rows) if fmt == "json" else to_csv(header, rows)
    elif config.command == "regimes":
        header, rows = _sweep_rows(config, REGIMES_FIELDS)
        text = to_json(rows) if fmt == "json" else to_csv(header, rows)
    else:
        raise ConfigError(f"unknown command {config.command!r}")
    write_output(text, config.output_path)
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are configuration errors, exit 1
        raise ConfigError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="lindscope", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("model", help="model file (JSON)")
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default=None, dest="fmt")
        p.add_argument(
            "--seed", type=int, default=None,
            help="seed for randomized diagnostics (reserved; current commands are deterministic)",
        )

    def thresholds(p):
        p.add_argument("--kappa-lo", type=float, default=None,
                       help="kappa below this is weakly nonnormal (default 0.1)")
        p.add_argument("--kappa-hi", type=float, default=None,
                       help="kappa above this is strongly nonnormal (default 10)")

    def sweepish(p):
        p.add_argument("--param", required=True, help="model parameter to vary")
        p.add_argument("--from", dest="start", type=float, required=True)
        p.add_argument("--to", dest="stop", type=float, required=True)
        p.add_argument("--points", type=int, required=True)
        p.add_argument("--log", action="store_true", help="log-spaced values")

    p_analyze = sub.add_parser("analyze", help="structure metrics of one model")
    common(p_analyze)
    thresholds(p_analyze)

    p_series = sub.add_parser("series", help="propagator norms over a time grid")
    common(p_series)
    p_series.add_argument("--t-end", type=float, default=None,
                          help="grid end (default: intrinsic timescale)")
    p_series.add_argument("--steps", type=int, default=DEFAULT_STEPS,
                          help=f"grid steps (default {DEFAULT_STEPS})")

    p_sweep = sub.add_parser("sweep", help="metrics along one parameter range")
    common(p_sweep)
    thresholds(p_sweep)
    sweepish(p_sweep)

    p_regimes = sub.add_parser("regimes", help="regime table along one parameter range")
    common(p_regimes)
    thresholds(p_regimes)
    sweepish(p_regimes)

    return parser


def _thresholds_from_args(args) -> RegimeThresholds | None:
    lo = getattr(args, "kappa_lo", None)
    hi = getattr(args, "kappa_hi", None)
    if lo is None and hi is None:
        return None
    defaults = RegimeThresholds()
    lo = defaults.kappa_lo if lo is None else lo
    hi = defaults.kappa_hi if hi is None else hi
    if not 0 < lo < hi:
        raise ConfigError(f"need 0 < kappa-lo < kappa-hi, got {lo} and {hi}")
    return RegimeThresholds(kappa_lo=lo, kappa_hi=hi)


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        model_path=args.model,
        output_path=args.out,
        fmt=args.fmt,
        t_end=getattr(args, "t_end", None),
        steps=getattr(args, "steps", DEFAULT_STEPS),
        thresholds=_thresholds_from_args(args),
        param=getattr(args, "param", None),
        start=getattr(args, "start", None),
        stop=getattr(args, "stop", None),
        points=getattr(args, "points", None),
        log_scale=getattr(args, "log", False),
        seed=args.seed,
    )


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return run(_config_from_args(args))
    except IoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LindscopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

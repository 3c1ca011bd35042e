"""Command-line entry point.

    wavegate run <config.json> [--out PATH] [--format csv|json]
    wavegate preset <name> [--out PATH] [--format csv|json]
    wavegate list

Exit status: 0 success, 2 invalid configuration, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .errors import ConfigError, WavegateError
from .scenarios import PRESETS, RunResult, ScenarioConfig, list_presets, preset_config, run_scenario

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL = 0, 2, 3


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return f"{v:.11e}"
    return str(v)


def format_csv(result: RunResult) -> str:
    """Header plus one line per row; floats carry 12 significant digits."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(result.columns)
    for row in result.rows:
        w.writerow([_cell(row.get(c)) for c in result.columns])
    return buf.getvalue()


def _plain(v):
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_plain(x) for x in v]
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else _cell(v)
    return v


def format_json(result: RunResult) -> str:
    doc = {"scenario": result.name, "kind": result.kind, "columns": list(result.columns),
           "rows": [{c: _plain(r.get(c)) for c in result.columns} for r in result.rows],
           "summary": _plain(result.summary), "provenance": result.provenance}
    return json.dumps(doc, indent=2) + "\n"


def _emit(result: RunResult, fmt: str, out: str | None) -> None:
    text = format_json(result) if fmt == "json" else format_csv(result)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_config(path: str) -> ScenarioConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror}", path) from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}", path) from None
    return ScenarioConfig.from_dict(raw)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wavegate", description="Tunneling-time and dispersive-pulse scenarios.")
    sub = p.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run a JSON scenario config")
    run.add_argument("config")
    pre = sub.add_parser("preset", help="run a bundled scenario")
    pre.add_argument("name", choices=list(PRESETS), metavar="name")
    pre.add_argument("--show-config", action="store_true", help="print the preset's JSON config and exit")
    for sp in (run, pre):
        sp.add_argument("--out", help="output file (default: stdout)")
        sp.add_argument("--format", choices=("csv", "json"), help="output format (default: csv)")
    sub.add_parser("list", help="list bundled presets")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for name in list_presets():
            print(f"{name}\t{PRESETS[name]['kind']}")
        return EXIT_OK
    try:
        if args.command == "run":
            cfg = _load_config(args.config)
        else:
            cfg = preset_config(args.name)
            if args.show_config:
                print(json.dumps(cfg.to_dict(), indent=2))
                return EXIT_OK
        result = run_scenario(cfg)
    except ConfigError as exc:
        print(f"wavegate: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except WavegateError as exc:
        op = exc.operation or type(exc).__name__
        print(f"wavegate: numerical failure in {op}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    _emit(result, args.format or cfg.output_format, args.out or cfg.output_path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

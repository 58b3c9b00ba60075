"""Command-line entry point.

Exit codes: 0 on success, 2 for configuration or I/O errors, 3 for numerical
failures (the message names the failing period).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from .config import PRESET_NAMES, RunConfig, preset
from .errors import ConfigError, ModelError
from .harness import (
    compare_lines,
    run_config,
    steady_state_lines,
    sweep,
    sweep_csv,
    trajectory_csv,
    write_text,
)
from .scenario import growth_statistics

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _window(text):
    try:
        t0, t1 = (int(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected T0:T1, got {text!r}")
    return t0, t1


def _grid(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _common(sub, multi=False):
    action = "append" if multi else "store"
    sub.add_argument("--config", action=action, metavar="PATH", help="JSON run configuration")
    sub.add_argument("--preset", action=action, choices=PRESET_NAMES, help="named configuration")
    sub.add_argument("--horizon", type=int, metavar="N", help="number of periods to simulate")
    sub.add_argument("--growth-window", type=_window, metavar="T0:T1")
    sub.add_argument("--base-year", type=int, metavar="Y", help="calendar year of t = 0")
    sub.add_argument("--out", metavar="PATH")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="malthusgrowth",
        description="Two-sector Malthusian growth model with land-supply shocks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    _common(subs.add_parser("steady-state", help="steady-state levels and regime thresholds"))
    _common(subs.add_parser("simulate", help="simulate one economy and write a CSV"))
    sw = subs.add_parser("sweep", help="vary one parameter over a grid")
    _common(sw)
    sw.add_argument("--param", required=True, metavar="NAME")
    sw.add_argument("--grid", required=True, type=_grid, metavar="v1,v2,...")
    sw.add_argument("--jobs", type=int, default=1, help="worker processes")
    cmp = subs.add_parser("compare", help="compare two economies (default: economy1 vs economy2)")
    _common(cmp, multi=True)
    return parser


def _one_config(path, name):
    if path and name:
        raise ConfigError("give either --config or --preset, not both")
    if path:
        return RunConfig.load(path)
    return preset(name or "table1")


def _apply_flags(config, args):
    changes = {}
    if args.horizon is not None:
        changes["horizon"] = args.horizon
    if args.growth_window is not None:
        changes["growth_window"] = args.growth_window
    if args.base_year is not None:
        changes["base_year"] = args.base_year
    return replace(config, **changes) if changes else config


def _out(text, path):
    if path:
        write_text(path, text)
    else:
        sys.stdout.write(text)


def cmd_steady_state(args):
    config = _apply_flags(_one_config(args.config, args.preset), args)
    _out("\n".join(steady_state_lines(config)) + "\n", args.out)


def cmd_simulate(args):
    config = _apply_flags(_one_config(args.config, args.preset), args)
    p, traj = run_config(config)
    _out(trajectory_csv(traj), args.out or config.output)
    t0, t1 = config.growth_window
    if t1 <= traj.t[-1]:
        g = growth_statistics(traj, t0, t1)
        print(f"annual income growth t={t0}..{t1}: {g:.6f}", file=sys.stderr)
    if traj.halted:
        print(f"population starved at t={traj.t[-1]}", file=sys.stderr)


def cmd_sweep(args):
    config = _apply_flags(_one_config(args.config, args.preset), args)
    rows = sweep(config, args.param, args.grid, jobs=args.jobs)
    _out(sweep_csv(rows), args.out)


def cmd_compare(args):
    paths = args.config or []
    names = args.preset or []
    configs = [RunConfig.load(p) for p in paths] + [preset(n) for n in names]
    if not configs:
        configs = [preset("economy1"), preset("economy2")]
    if len(configs) != 2:
        raise ConfigError(f"compare needs exactly two configurations, got {len(configs)}")
    configs = [_apply_flags(c, args) for c in configs]
    if configs[0].horizon != configs[1].horizon:
        raise ConfigError(f"horizons differ: {configs[0].horizon} vs {configs[1].horizon}")
    trajs = [run_config(c)[1] for c in configs]
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, traj in enumerate(trajs, start=1):
            write_text(os.path.join(args.out, f"economy_{i}.csv"), trajectory_csv(traj))
    print("\n".join(compare_lines(*trajs)))


COMMANDS = {
    "steady-state": cmd_steady_state,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ModelError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return 0


if __name__ == "__main__":
    sys.exit(main())

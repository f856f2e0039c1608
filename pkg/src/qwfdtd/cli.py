"""Command-line interface: run, walk, pulse, levels, validate-config.

Exit codes: 0 success, 2 configuration error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import engine, walk
from .atom import AtomicState, ThreeLevelSystem, propagate
from .config import SimulationConfig, from_mapping, parse_config, serialize_config
from .constants import HBAR
from .errors import ConfigError, QwfdtdError
from .grid import courant_dt
from .pulse import pulse_value
from .snapshots import RunManifest, manifest_tables, write_manifest, write_snapshot
from .walk import (
    LINE,
    PARALLEL,
    WalkDistribution,
    compile_schedule,
    emit_table_index,
    published_parallel_step3,
    walk_table,
)


def _load_config(args) -> SimulationConfig:
    if args.config:
        text = Path(args.config).read_text()
        config = parse_config(text)
    else:
        config = from_mapping({})
    overrides = {}
    if getattr(args, "topology", None):
        overrides["topology"] = args.topology
    if getattr(args, "steps", None) is not None:
        overrides["walk_steps"] = args.steps
    if getattr(args, "out", None):
        overrides["out_dir"] = args.out
    if overrides:
        config = from_mapping({**_config_dict(config), **overrides})
    return config


def _config_dict(config: SimulationConfig) -> dict:
    return json.loads(serialize_config(config))


def _site_label(x: int) -> str:
    return f"{x:+d}" if x else "0"


def _prob_label(p, decimal: bool) -> str:
    return f"{p.numerator / p.denominator:.6f}" if decimal else str(p)


def _format_line_table(dist: WalkDistribution, decimal: bool = False) -> str:
    items = ", ".join(
        f"{_site_label(site)}:{_prob_label(dist.probs[site], decimal)}"
        for site in sorted(dist.probs)
        if dist.probs[site] != 0
    )
    return "{" + items + "}"


def _format_parallel_table(dist: WalkDistribution, line: int, decimal: bool = False) -> str:
    sites = sorted(x for (l, x) in dist.probs if l == line and dist.probs[(l, x)] != 0)
    items = ", ".join(f"{_site_label(x)}:{_prob_label(dist.probs[(line, x)], decimal)}" for x in sites)
    return "{" + items + "}"


def _print_tables(topology: str, steps: int, decimal: bool, out) -> None:
    dist = walk.initial_line() if topology == LINE else walk.initial_parallel()
    stepper = walk.step_line if topology == LINE else walk.step_parallel
    for k in range(1, steps + 1):
        dist = stepper(dist)
        if topology == LINE:
            print(f"step {k}: {_format_line_table(dist, decimal)}", file=out)
        else:
            for line in (1, 2):
                print(
                    f"step {k} line {line}: {_format_parallel_table(dist, line, decimal)}",
                    file=out,
                )


def _cmd_walk(args) -> int:
    topology = args.topology or LINE
    steps = args.steps if args.steps is not None else 3
    _print_tables(topology, steps, args.decimal, sys.stdout)
    if args.compare_paper:
        rule = walk_table(PARALLEL, 3)
        published = published_parallel_step3()
        print("parallel step 3, equal-split rule (per line):", file=sys.stdout)
        for line in (1, 2):
            print(f"  line {line}: {_format_parallel_table(rule, line)}", file=sys.stdout)
        print(f"  total: {rule.line_total(1)} per line", file=sys.stdout)
        print("parallel step 3, published table (per line):", file=sys.stdout)
        for line in (1, 2):
            print(f"  line {line}: {_format_parallel_table(published, line)}", file=sys.stdout)
        print(f"  total: {published.line_total(1)} per line", file=sys.stdout)
    return 0


def _cmd_pulse(args) -> int:
    config = _load_config(args)
    grid = config.build_grid()
    dt = courant_dt(grid, config.cfl)
    spec = config.base_pulse()
    lines = ["t,E"]
    for n in range(1, config.n_steps + 1):
        t = n * dt
        lines.append(f"{t:.9e},{pulse_value(spec, t):.9e}")
    _emit_csv(lines, args.out, "pulse.csv")
    return 0


def _cmd_levels(args) -> int:
    config = _load_config(args)
    omega = config.carrier
    system = ThreeLevelSystem(
        e1=0.0, e2=HBAR * omega, e3=2.0 * HBAR * omega,
        phi1=config.phi1, phi2=config.phi2,
    )
    state = AtomicState(0.0, 0.0, 1.0)
    # half an envelope period, long enough to show a full transfer cycle
    duration = np.sqrt(3.0) * np.pi * system.time_unit
    samples = 200
    dt_sample = duration / samples
    dt_int = dt_sample / 100.0
    lines = ["t,p1,p2,p3"]
    t = 0.0
    p = state.populations()
    lines.append(f"{t:.9e},{p[0]:.9e},{p[1]:.9e},{p[2]:.9e}")
    for n in range(1, samples + 1):
        state = propagate(system, state, (n - 1) * dt_sample, n * dt_sample, dt_int)
        p = state.populations()
        lines.append(f"{n * dt_sample:.9e},{p[0]:.9e},{p[1]:.9e},{p[2]:.9e}")
    _emit_csv(lines, args.out, "levels.csv")
    return 0


def _emit_csv(lines: list[str], out_dir: str | None, name: str) -> None:
    text = "\n".join(lines) + "\n"
    if out_dir:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / name).write_text(text)
        print(f"wrote {path / name}")
    else:
        sys.stdout.write(text)


def _cmd_run(args) -> int:
    config = _load_config(args)
    grid = config.build_grid()
    dt = courant_dt(grid, config.cfl)
    schedule = compile_schedule(
        config.topology, config.walk_steps, config.t1, config.t2, config.emission
    )
    events = engine.schedule_events(
        schedule, grid, config.base_pulse(),
        lattice_spacing=config.lattice_spacing_nm * 1e-9,
        line_offset=config.line_offset_nm * 1e-9,
    )
    snapshots = engine.run(
        grid, events, config.n_steps, config.snapshot_every, cfl=config.cfl
    )
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    records = []
    for snapshot in snapshots:
        name = f"snapshot_{snapshot.step:06d}.csv"
        write_snapshot(snapshot, out_dir / name)
        records.append({"file": name, "step": snapshot.step, "time": snapshot.time})
    used = {emit_table_index(config.emission, k) for k in range(1, config.walk_steps + 1)}
    tables = {index: walk_table(config.topology, index) for index in sorted(used)}
    manifest = RunManifest(
        config=_config_dict(config),
        dt=dt,
        snapshots=records,
        walk_tables=manifest_tables(tables),
    )
    write_manifest(manifest, out_dir / "manifest.json")
    print(f"wrote {len(records)} snapshots and manifest.json to {out_dir}")
    return 0


def _cmd_validate_config(args) -> int:
    config = _load_config(args)
    print(f"configuration OK: grid {config.cell_counts}, topology {config.topology}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwfdtd",
        description="Equal-probability walk emission driving a 3D FDTD solver",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, topology=True):
        p.add_argument("--config", help="JSON configuration file")
        p.add_argument("--out", help="output directory")
        if topology:
            p.add_argument("--topology", choices=(LINE, PARALLEL))
            p.add_argument("--steps", type=int, help="number of walk steps")

    p_run = sub.add_parser("run", help="run the full pipeline and write snapshots")
    common(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_walk = sub.add_parser("walk", help="print exact walk probability tables")
    common(p_walk)
    p_walk.add_argument(
        "--decimal", action="store_true",
        help="print probabilities as decimals instead of exact fractions",
    )
    p_walk.add_argument(
        "--compare-paper", action="store_true",
        help="also print the published step-3 parallel table beside the rule table",
    )
    p_walk.set_defaults(func=_cmd_walk)

    p_pulse = sub.add_parser("pulse", help="emit the sampled source pulse as CSV")
    common(p_pulse, topology=False)
    p_pulse.set_defaults(func=_cmd_pulse)

    p_levels = sub.add_parser("levels", help="emit three-level population traces as CSV")
    common(p_levels, topology=False)
    p_levels.set_defaults(func=_cmd_levels)

    p_validate = sub.add_parser("validate-config", help="parse and validate a configuration")
    common(p_validate)
    p_validate.set_defaults(func=_cmd_validate_config)

    return parser


def run_command(argv: list[str] | None = None) -> int:
    """Parse arguments and execute one subcommand; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (QwfdtdError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()

"""Command-line entry point.

Run a scenario file and export reports:

    qcs-sim --scenario network.scn --out results/

Sweep mode runs one fresh irregular incident per listed node, each on
its own derived seed, and collects the per-run energy and path reports
side by side:

    qcs-sim --scenario network.scn --sweep 13,12,15,2,14,8,9 --out results/

A quick analytic check without any scenario:

    qcs-sim --lifetime 3000 1 0

Set QCS_SIM_LOG=DEBUG (or INFO, WARNING, ...) for engine logging.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import replace
from pathlib import Path

from . import metrics
from .energy import LONG_PACKET_BYTES, SHORT_PACKET_BYTES, joules, lifetime
from .engine import Simulation
from .scenario import Scenario, SenseEvent, load_scenario


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qcs-sim",
        description="Deterministic simulator for a query/checked duty-cycled "
                    "sensor network with greedy alarm forwarding and flood broadcast.",
    )
    p.add_argument("--scenario", metavar="PATH", help="scenario file to run")
    p.add_argument("--out", metavar="DIR", default="out",
                   help="output directory for reports (default: out)")
    p.add_argument("--seed", type=int, metavar="N",
                   help="override the scenario seed")
    p.add_argument("--loss", type=float, metavar="P",
                   help="override the packet loss probability")
    p.add_argument("--horizon", type=int, metavar="TICKS",
                   help="override the number of simulated ticks")
    p.add_argument("--sweep", metavar="ID,ID,...",
                   help="comma-separated node ids; run one irregular "
                        "incident per node on fresh derived seeds")
    p.add_argument("--lifetime", nargs=3, type=float,
                   metavar=("E", "E1", "EP"),
                   help="print the analytic node lifetime for initial energy "
                        "E at per-period cost E1 + EP and exit")
    return p


def _setup_logging() -> None:
    level_name = os.environ.get("QCS_SIM_LOG", "").upper()
    if level_name:
        level = getattr(logging, level_name, None)
        if not isinstance(level, int):
            level = logging.INFO
        logging.basicConfig(
            level=level, format="%(levelname)s %(name)s: %(message)s"
        )


def _num(value: float) -> str:
    return str(int(value)) if value == int(value) else str(value)


def _cmd_lifetime(values: list[float]) -> int:
    e, e1, ep = values
    try:
        ticks = lifetime(e, e1, ep)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    print(f"initial energy: {_num(e)} units")
    print(f"per-period cost: {_num(e1)} radio + {_num(ep)} processing units")
    print(f"lifetime: {ticks} periods")
    print(f"unit equivalents: {SHORT_PACKET_BYTES}B event = "
          f"{joules(SHORT_PACKET_BYTES)} mJ, {LONG_PACKET_BYTES}B event = "
          f"{joules(LONG_PACKET_BYTES)} mJ")
    return 0


def _sweep_ids(arg: str, sc: Scenario) -> list[int]:
    try:
        ids = [int(tok) for tok in arg.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"--sweep expects comma-separated integers, got {arg!r}")
    if not ids:
        raise ValueError("--sweep lists no node ids")
    for nid in ids:
        if nid not in sc.topology.nodes:
            raise ValueError(f"--sweep names unknown node {nid}")
        if nid == sc.topology.base_id:
            raise ValueError("--sweep cannot target the base station")
    return ids


def _cmd_run(sc: Scenario, out: Path) -> int:
    sim = Simulation(sc)
    trace = sim.run()
    sensors = sc.topology.sensor_ids()
    metrics.write_trace(out / "trace.txt", trace)
    metrics.write_ledger_csv(out / "ledger.csv", sim.ledger)
    metrics.write_energy_diff_csv(
        out / "energy_diff.csv",
        metrics.energy_diff_rows("run", trace.initial_energy, sim.ledger, sensors),
    )
    metrics.write_paths_csv(out / "paths.csv", metrics.paths_rows(trace.incidents))
    summary = metrics.render_summary(
        "simulation summary", trace, sim.ledger, trace.base_record, sensors
    )
    metrics.write_text(out / "summary.txt", summary)
    print(f"ran {sc.horizon} ticks, {len(trace.incidents)} incident(s), "
          f"{len(trace.floods)} flood(s)")
    print(f"base: {trace.base_record['msg']!r}")
    print(f"reports written to {out}")
    return 0


def _cmd_sweep(sc: Scenario, ids: list[int], out: Path) -> int:
    sensors = sc.topology.sensor_ids()
    th = sc.thresholds
    reading = (th.irregular_level + th.devastating_level) / 2
    horizon = max(sc.horizon, len(sc.topology.nodes) + 2)

    energy_rows = []
    path_rows = []
    trace_parts = []
    summary_parts = ["incident sweep", "==============", ""]
    for i, nid in enumerate(ids, start=1):
        label = f"irregular{i}"
        run_sc = replace(
            sc, events=(SenseEvent(0, nid, reading),), horizon=horizon
        )
        sim = Simulation(run_sc, seed_key=f"{sc.seed}:sweep:{i}")
        trace = sim.run()
        rec = trace.incidents[0]
        energy_rows.extend(
            metrics.energy_diff_rows(label, trace.initial_energy, sim.ledger, sensors)
        )
        path_rows.extend(metrics.paths_rows([rec], labels=[label]))
        metrics.write_ledger_csv(out / f"ledger_{label}.csv", sim.ledger)
        trace_parts.append(f"== {label} (source node {nid}) ==")
        trace_parts.append(trace.render())
        summary_parts.append(f"{label}: source node {nid}")
        summary_parts.append(metrics.render_incident(rec))
        summary_parts.extend(metrics.render_base_record(trace.base_record))
        summary_parts.append("")
        status = (
            f"delivered in {rec.path_nodes} nodes" if rec.delivered
            else f"undelivered ({rec.close_reason})"
        )
        print(f"{label}: node {nid} -> {status}, "
              f"comparisons={rec.comparisons}")

    metrics.write_energy_diff_csv(out / "energy_diff.csv", energy_rows)
    metrics.write_paths_csv(out / "paths.csv", path_rows)
    metrics.write_text(out / "trace.txt", "\n".join(trace_parts))
    metrics.write_text(out / "summary.txt", "\n".join(summary_parts) + "\n")
    print(f"reports written to {out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.lifetime is not None:
        return _cmd_lifetime(args.lifetime)

    if not args.scenario:
        parser.print_usage(sys.stderr)
        print("error: --scenario is required (or use --lifetime)", file=sys.stderr)
        return 2

    try:
        sc = load_scenario(args.scenario)
        sc = sc.with_overrides(
            seed=args.seed, horizon=args.horizon, loss_prob=args.loss
        )
        ids = _sweep_ids(args.sweep, sc) if args.sweep else None
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if ids is not None:
        return _cmd_sweep(sc, ids, out)
    return _cmd_run(sc, out)


if __name__ == "__main__":
    sys.exit(main())

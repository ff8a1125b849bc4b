"""Scenario files: one text file describes a whole simulation run.

Sections, INI style with # comments:

    [field]       width, height, radio_range
    [nodes]       one ``id x y [base]`` line per node
    [costs]       query_cost, source_cost, ep, threshold, init_min,
                  init_max, isolation_multiplier (all optional)
    [thresholds]  irregular, devastating sensor levels
    [events]      one ``tick node reading`` line per injected reading
    [sim]         seed, horizon, loss_prob

Only [field] and [nodes] are mandatory; everything else falls back to
the documented defaults.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .energy import CostModel
from .node import Thresholds
from .topology import Topology, load_layout, parse_kv, split_sections


DEFAULT_HORIZON = 20


@dataclass(frozen=True)
class SenseEvent:
    tick: int
    node: int
    reading: float


@dataclass(frozen=True)
class Scenario:
    topology: Topology
    costs: CostModel
    thresholds: Thresholds
    seed: int
    horizon: int
    loss_prob: float
    events: tuple[SenseEvent, ...]

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError("horizon must be at least 1")
        if not 0.0 <= self.loss_prob <= 1.0:
            raise ValueError("loss_prob must lie in [0, 1]")
        for ev in self.events:
            if ev.node not in self.topology.nodes:
                raise ValueError(f"event targets unknown node {ev.node}")
            if ev.node == self.topology.base_id:
                raise ValueError("events cannot target the base station")
            if not 0 <= ev.tick < self.horizon:
                raise ValueError(
                    f"event tick {ev.tick} outside the horizon [0, {self.horizon})"
                )

    def with_overrides(self, *, seed: int | None = None, horizon: int | None = None,
                       loss_prob: float | None = None) -> "Scenario":
        """Copy with command-line overrides applied."""
        out = self
        if seed is not None:
            out = replace(out, seed=seed)
        if horizon is not None:
            out = replace(out, horizon=horizon)
        if loss_prob is not None:
            out = replace(out, loss_prob=loss_prob)
        return out


def _int_field(kv: dict[str, str], key: str, default: int, section: str) -> int:
    raw = kv.get(key)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"[{section}] {key} must be an integer, got {raw!r}") from None


def _float_field(kv: dict[str, str], key: str, default: float, section: str) -> float:
    raw = kv.get(key)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"[{section}] {key} must be a number, got {raw!r}") from None


def parse_scenario(text: str) -> Scenario:
    """Parse scenario text into a validated Scenario."""
    topology = load_layout(text)
    sections = split_sections(text)

    kv = parse_kv(sections.get("costs", []), "costs")
    known = {"query_cost", "source_cost", "ep", "threshold",
             "init_min", "init_max", "isolation_multiplier"}
    unknown = set(kv) - known
    if unknown:
        raise ValueError(f"[costs] has unknown keys: {sorted(unknown)}")
    costs = CostModel(
        query_cost=_int_field(kv, "query_cost", 1, "costs"),
        source_cost=_int_field(kv, "source_cost", 2, "costs"),
        ep=_int_field(kv, "ep", 0, "costs"),
        threshold=_int_field(kv, "threshold", 500, "costs"),
        init_min=_int_field(kv, "init_min", 3000, "costs"),
        init_max=_int_field(kv, "init_max", 5000, "costs"),
        isolation_multiplier=_int_field(kv, "isolation_multiplier", 2, "costs"),
    )

    kv = parse_kv(sections.get("thresholds", []), "thresholds")
    thresholds = Thresholds(
        irregular_level=_float_field(kv, "irregular", 50.0, "thresholds"),
        devastating_level=_float_field(kv, "devastating", 90.0, "thresholds"),
    )

    events = []
    for line in sections.get("events", []):
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"[events] line needs 'tick node reading', got {line!r}")
        try:
            events.append(SenseEvent(int(parts[0]), int(parts[1]), float(parts[2])))
        except ValueError:
            raise ValueError(f"[events] line has non-numeric fields: {line!r}") from None

    kv = parse_kv(sections.get("sim", []), "sim")
    seed = _int_field(kv, "seed", 0, "sim")
    horizon = _int_field(kv, "horizon", DEFAULT_HORIZON, "sim")
    loss_prob = _float_field(kv, "loss_prob", 0.0, "sim")

    return Scenario(
        topology=topology,
        costs=costs,
        thresholds=thresholds,
        seed=seed,
        horizon=horizon,
        loss_prob=loss_prob,
        events=tuple(events),
    )


def load_scenario(path: str | Path) -> Scenario:
    """Read and parse a scenario file; errors carry the offending path."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise ValueError(f"cannot read scenario file {p}: {e}") from None
    try:
        return parse_scenario(text)
    except ValueError as e:
        raise ValueError(f"{p}: {e}") from None

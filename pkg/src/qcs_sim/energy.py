"""Energy accounting.

Radio work is billed twice over, in two independent currencies:

* abstract units, 1 per short (24-byte) packet event and 2 per long
  (64-byte) one, with processing cost folded in, used by all protocol
  logic and for node lifetime;
* millijoules, from transmission time at a fixed current and voltage,
  for physically meaningful reporting.

Sending and receiving the same packet cost the same amount.  The base
station has an infinite supply and is never debited.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .packet import PacketKind


SHORT_PACKET_BYTES = 24
LONG_PACKET_BYTES = 64

#: seconds on air per packet size
_TX_SECONDS = {SHORT_PACKET_BYTES: 0.020, LONG_PACKET_BYTES: 0.040}

_CURRENT_MA = 18.7
_VOLTAGE_V = 2.6

_DIRECTIONS = ("send", "receive")


def unit_cost(kind: PacketKind, direction: str = "send", e1: int = 1) -> int:
    """Abstract units for one packet event.

    Direction does not change the price: the radio pays the same to
    send and to receive.  Long (source) packets cost double.
    """
    if direction not in _DIRECTIONS:
        raise ValueError(f"direction must be one of {_DIRECTIONS}, got {direction!r}")
    return 2 * e1 if kind == PacketKind.SOURCE else e1


def joules(size_bytes: int) -> float:
    """Physical energy in millijoules for one event of a packet this size."""
    try:
        t = _TX_SECONDS[size_bytes]
    except KeyError:
        raise ValueError(f"no transmission time defined for {size_bytes}-byte packets") from None
    return t * _CURRENT_MA * _VOLTAGE_V


def lifetime(initial_energy: float, e1: float, ep: float = 0) -> int:
    """Whole regular periods a node survives at a constant per-period cost.

    e1 is the radio cost of one period, ep any processing surcharge not
    already folded into e1.
    """
    per_tick = e1 + ep
    if per_tick <= 0:
        raise ValueError("per-period cost e1 + ep must be positive")
    return math.floor(initial_energy / per_tick)


def s_mode_cost(replies: int) -> int:
    """Units one alarm-holding node spends on a single forwarding hop.

    One unit to broadcast the hop query, one per reply heard, four to
    push the 64-byte alarm across the link (both radio ends are billed
    to the sender), and one to hear the confirmation back.
    """
    if replies < 0:
        raise ValueError("reply count cannot be negative")
    return 6 + replies


def draw_initial_energy(seed: int | str, node_id: int, lo: int = 3000, hi: int = 5000) -> int:
    """Deterministic per-node starting charge, uniform over [lo, hi]."""
    if lo > hi:
        raise ValueError("empty energy range")
    return random.Random(f"energy:{seed}:{node_id}").randint(lo, hi)


@dataclass(frozen=True)
class CostModel:
    """Tunable protocol costs; defaults follow the unit scheme above."""

    query_cost: int = 1
    source_cost: int = 2
    ep: int = 0
    threshold: int = 500
    init_min: int = 3000
    init_max: int = 5000
    isolation_multiplier: int = 2

    def __post_init__(self):
        if self.query_cost <= 0:
            raise ValueError("query_cost must be positive")
        if self.source_cost != 2 * self.query_cost:
            raise ValueError("source_cost must be exactly twice query_cost")
        if self.ep < 0:
            raise ValueError("ep cannot be negative")
        if self.threshold < 0:
            raise ValueError("threshold cannot be negative")
        if not 0 < self.init_min <= self.init_max:
            raise ValueError("initial energy range must satisfy 0 < min <= max")
        if self.threshold >= self.init_min:
            raise ValueError("threshold must sit below the lowest starting energy")
        if self.isolation_multiplier < 1:
            raise ValueError("isolation_multiplier must be at least 1")

    def cost_of(self, kind: PacketKind) -> int:
        return self.source_cost if kind == PacketKind.SOURCE else self.query_cost


@dataclass
class LedgerEntry:
    tick: int
    node_id: int
    cause: str
    debit: int
    balance: float


@dataclass
class EnergyLedger:
    """Per-node balances plus an append-only record of every debit."""

    balances: dict[int, float]
    entries: list[LedgerEntry] = field(default_factory=list)

    def balance(self, node_id: int) -> float:
        return self.balances[node_id]

    def is_alive(self, node_id: int) -> bool:
        return self.balances[node_id] > 0

    def debit(self, tick: int, node_id: int, cause: str, amount: int) -> int:
        """Charge a node, clamping at zero; returns the amount actually taken.

        Infinite balances (the base station) are left untouched, and a
        row is recorded only when some energy actually moved.
        """
        if amount < 0:
            raise ValueError("debit amount cannot be negative")
        bal = self.balances[node_id]
        if bal == math.inf:
            return 0
        taken = min(amount, bal)
        if taken == 0:
            return 0
        bal -= taken
        self.balances[node_id] = bal
        self.entries.append(LedgerEntry(tick, node_id, cause, taken, bal))
        return taken

    def consumed(self, node_id: int) -> int:
        return sum(e.debit for e in self.entries if e.node_id == node_id)

    def consumed_by_cause(self, node_id: int | None = None) -> dict[str, int]:
        out: dict[str, int] = {}
        for e in self.entries:
            if node_id is not None and e.node_id != node_id:
                continue
            out[e.cause] = out.get(e.cause, 0) + e.debit
        return out

    def total_consumed(self) -> int:
        return sum(e.debit for e in self.entries)

"""Per-node protocol state machine.

A sensor is always in exactly one of three modes.  Q nodes broadcast a
status query each tick, C nodes listen, and the two swap every tick
while a node's flags are clear.  A node whose reading crosses the
irregular level raises flag1, becomes S (source) and starts forwarding
an alarm; past the devastating level it raises flag2 as well and the
alarm is flooded instead.  The mode held at promotion time is stored so
a reset can put the node back exactly where it was.

Adjacency is learned, not configured: hearing a query enrolls the
sender in a two-tick sliding window, so a silent neighbor ages out
after one full Q/C period.  Isolation is declared when that learned
set transitions from non-empty to empty.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .packet import (
    Packet,
    PacketKind,
    RESET_MESSAGE,
    affected_message,
    disconnect_message,
    make_ack,
    make_source,
)
from .topology import Topology


MODE_Q = "Q"
MODE_C = "C"
MODE_S = "S"


@dataclass(frozen=True)
class Thresholds:
    """Sensor levels splitting readings into regular/irregular/devastating."""

    irregular_level: float = 50.0
    devastating_level: float = 90.0

    def __post_init__(self):
        if not self.irregular_level < self.devastating_level:
            raise ValueError("irregular_level must lie below devastating_level")


@dataclass
class NodeState:
    node_id: int
    pos: tuple[float, float]
    is_base: bool = False
    mode: str = MODE_C
    flag1: bool = False
    flag2: bool = False
    energy: float = 0
    sensed: float = 0.0
    message: str = ""
    stored_mode: str | None = None
    hop_depth: int = 0
    infected_tick: int | None = None
    heard_prev: set[int] = field(default_factory=set)
    heard_curr: set[int] = field(default_factory=set)
    had_neighbors: bool = False

    @property
    def alive(self) -> bool:
        return self.energy > 0

    @property
    def adj(self) -> set[int]:
        """Neighbors heard within the current two-tick window."""
        return self.heard_prev | self.heard_curr

    def roll_window(self) -> None:
        """Advance the adjacency window by one tick; engine calls this at tick start."""
        self.heard_prev = self.heard_curr
        self.heard_curr = set()


def init_modes(topology: Topology, seed: int | str) -> dict[int, str]:
    """Assign starting Q/C modes to every sensor (the base is not colored).

    Q nodes are picked greedily over a seed-shuffled order, skipping any
    candidate that already has a Q neighbor.  The result is a maximal
    independent set: no two Q nodes are adjacent, and every C node can
    hear at least one Q node.
    """
    order = sorted(topology.sensor_ids())
    random.Random(f"init:{seed}").shuffle(order)
    q_set: set[int] = set()
    for nid in order:
        if not any(nb in q_set for nb in topology.neighbors(nid)):
            q_set.add(nid)
    return {nid: (MODE_Q if nid in q_set else MODE_C) for nid in order}


def _promote(n: NodeState, message: str, devastating: bool) -> None:
    if n.mode != MODE_S:
        n.stored_mode = n.mode
        n.mode = MODE_S
    n.flag1 = True
    if devastating:
        n.flag2 = True
    if message:
        n.message = message


def sense_and_classify(n: NodeState, reading: float, th: Thresholds) -> NodeState:
    """Apply one sensor reading; crossing a level promotes the node to S."""
    n.sensed = reading
    if reading <= th.irregular_level:
        return n
    _promote(n, affected_message(n.node_id, n.pos),
             devastating=reading > th.devastating_level)
    return n


def tick_transition(n: NodeState) -> NodeState:
    """Swap Q and C at a tick boundary; S nodes must not be passed in."""
    if n.mode == MODE_S or n.flag1 or n.flag2:
        raise ValueError(f"node {n.node_id} cannot alternate while flagged")
    n.mode = MODE_C if n.mode == MODE_Q else MODE_Q
    return n


def handle_query(n: NodeState, q: Packet) -> Packet | None:
    """Receive a query: learn the sender, reply only to alarm-hop queries.

    Regular queries (flags clear) are absorbed silently.  A query with
    flag1 set is a forwarding node looking for candidates, answered
    with this node's position and remaining energy.  S nodes are busy
    forwarding their own alarm and stay silent; the base always answers.
    """
    if q.kind != PacketKind.QUERY:
        raise ValueError("handle_query expects a query packet")
    n.heard_curr.add(q.src)
    if q.flags.flag1 and (n.is_base or n.mode != MODE_S):
        return make_ack(n.node_id, _wire_energy(n), n.pos)
    return None


def handle_source(n: NodeState, s: Packet) -> Packet | None:
    """Receive an alarm packet; returns the confirmation ack, if any.

    Unicast hop transfer (flag1 only): the node takes over the alarm,
    becomes S and confirms with a RESET ack so the sender can stand
    down.  A sensor that is already S refuses the handover (no ack);
    the base always accepts.  Flood delivery (both flags): the node is
    infected at one hop deeper than the packet, and nobody ever acks.
    """
    if s.kind != PacketKind.SOURCE:
        raise ValueError("handle_source expects a source packet")
    if s.flags.flag2:
        if n.mode != MODE_S:
            _promote(n, s.message, devastating=True)
            n.hop_depth = s.hop_count + 1
        elif not n.flag2:
            # an alarm-forwarding node caught by the flood joins it at the
            # packet's depth; re-delivery to an already flooded node keeps
            # the original (shallowest) depth
            n.flag2 = True
            n.message = s.message
            n.hop_depth = s.hop_count + 1
        return None
    if n.mode == MODE_S and not n.is_base:
        return None
    _promote(n, s.message, devastating=False)
    return make_ack(n.node_id, _wire_energy(n), n.pos, message=RESET_MESSAGE)


def reset_node(n: NodeState) -> NodeState:
    """Clear flags and restore the exact mode held before promotion to S.

    The learned-adjacency window went stale while the node was S, so it
    is cleared along with the isolation baseline; two regular ticks
    rebuild it.
    """
    if n.mode != MODE_S:
        raise ValueError(f"node {n.node_id} is not an S node")
    if n.stored_mode is None:
        raise ValueError(f"node {n.node_id} has no stored mode to restore")
    n.mode = n.stored_mode
    n.stored_mode = None
    n.flag1 = False
    n.flag2 = False
    n.message = ""
    n.hop_depth = 0
    n.infected_tick = None
    n.heard_prev = set()
    n.heard_curr = set()
    n.had_neighbors = False
    return n


def isolation_check(n: NodeState) -> Packet | None:
    """Fire a disconnect alert when the learned neighbor set just emptied.

    The alert is a long-range broadcast carrying flag1 so that whoever
    hears it forwards the news; it fires once per disconnection, not
    every tick the node stays alone.
    """
    empty = len(n.adj) == 0
    fire = empty and n.had_neighbors
    n.had_neighbors = not empty
    if fire:
        return make_source(n.node_id, n.pos, _wire_energy(n),
                           disconnect_message(n.node_id))
    return None


def _wire_energy(n: NodeState) -> float:
    """Energy value as packets carry it: inf for the base, else a whole number."""
    return math.inf if n.energy == math.inf else int(n.energy)

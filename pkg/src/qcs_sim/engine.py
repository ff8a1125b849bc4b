"""The discrete-event simulation loop.

One tick is one protocol period: queries go out, replies come back,
modes swap.  Within a tick everything is sequential and deterministic:
sense events are applied first, then a pending reset wave advances one
hop, then nodes act in ascending id order, each handled by exactly one
of the three routines its flags select:

    flags (0,0)  regular step: Q nodes broadcast one status query
    flags (1,0)  alarm forwarding: one greedy hop attempt toward the base
    flags (1,1)  flood: rebroadcast the alarm to everyone in range

A node that became S during a tick starts acting the following tick.
Packet loss, when enabled, is an independent coin flip per (packet,
receiver) pair drawn from a dedicated seeded generator, so identical
scenarios replay byte-identically.

Energy attribution for one forwarding hop is arranged so the ledger of
the forwarding node comes to exactly 6 + (acks heard): 1 to broadcast
the hop query, 1 per ack, 4 for the 64-byte alarm transfer (the sender
covers both radio ends), and 1 to hear the confirmation back.  The
accepting node pays only the 1-unit confirmation send.

Flood epochs end through a reset wave: once the base hears the alarm,
rebroadcasting stops and a zero-cost control wave walks outward one hop
per tick, clearing flags and restoring every node's stored pre-alarm
mode.  Overlapping devastating events join the epoch in progress; a
fresh epoch can begin once the wave completes.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field

from .energy import EnergyLedger, draw_initial_energy
from .node import (
    MODE_C,
    MODE_Q,
    MODE_S,
    NodeState,
    handle_query,
    handle_source,
    init_modes,
    isolation_check,
    reset_node,
    sense_and_classify,
    tick_transition,
)
from .packet import PacketKind, make_query, make_source
from .scenario import Scenario, SenseEvent
from .topology import dist

log = logging.getLogger(__name__)

BASE_LABEL = "BASE STATION"
NETWORK_FINE = "Network is fine"


def count_comparisons(reply_counts) -> int:
    """Comparisons spent choosing next hops: two per reply per round.

    Each candidate costs one threshold check plus one distance check
    against the running best (seeded with the forwarder's own distance).
    """
    return sum(2 * int(k) for k in reply_counts)


@dataclass
class HopAttempt:
    """One tick's forwarding attempt by one S node."""

    tick: int
    holder: int
    repliers: tuple[tuple[int, float], ...]  # (node id, reported energy)
    chosen: int | None = None
    accepted: bool = False
    reset_heard: bool = False

    @property
    def replies(self) -> int:
        return len(self.repliers)


@dataclass
class IncidentRecord:
    """Lifecycle of one irregular alarm from sensing to base delivery."""

    incident_id: int
    origin: int
    start_tick: int
    message: str
    path: list[int] = field(default_factory=list)
    hops: list[HopAttempt] = field(default_factory=list)
    delivered: bool = False
    delivery_tick: int | None = None
    closed: bool = False
    close_reason: str = ""
    attempts: int = 0

    @property
    def hop_replies(self) -> list[int]:
        return [h.replies for h in self.hops]

    @property
    def comparisons(self) -> int:
        return count_comparisons(self.hop_replies)

    @property
    def path_nodes(self) -> int:
        return len(self.path)


@dataclass
class FloodRecord:
    """One flood epoch: origins, infection spread, and the reset wave."""

    origins: list[tuple[int, int]]  # (tick, node)
    start_tick: int
    hop_cap: int
    infected_at: dict[int, int] = field(default_factory=dict)
    base_receipt_tick: int | None = None
    s_set_by_tick: list[tuple[int, frozenset[int]]] = field(default_factory=list)
    reset_wave: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)
    completed_tick: int | None = None


@dataclass
class PacketEvent:
    """One transmission: who sent what, and who actually received it."""

    tick: int
    kind: PacketKind
    src: int
    dst: int | None  # None for broadcasts
    flag1: bool
    flag2: bool
    receivers: tuple[int, ...]
    note: str


@dataclass
class Trace:
    """Everything a run produced, in deterministic order."""

    lines: list[str] = field(default_factory=list)
    mode_history: list[dict[int, str]] = field(default_factory=list)
    packet_events: list[PacketEvent] = field(default_factory=list)
    incidents: list[IncidentRecord] = field(default_factory=list)
    floods: list[FloodRecord] = field(default_factory=list)
    base_inbox: list[tuple[int, str]] = field(default_factory=list)
    deaths: list[tuple[int, int]] = field(default_factory=list)
    initial_modes: dict[int, str] = field(default_factory=dict)
    initial_energy: dict[int, float] = field(default_factory=dict)
    base_record: dict[str, object] = field(default_factory=dict)

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


def _ids(seq) -> str:
    return "[" + ",".join(str(i) for i in seq) + "]"


class Simulation:
    """Runs one scenario tick by tick; all state lives on this object.

    seed_key overrides the scenario seed as the string key for every
    internal generator, letting callers derive independent sub-runs
    (sweeps) from one configured seed.
    """

    def __init__(self, scenario: Scenario, seed_key: str | None = None):
        self.sc = scenario
        self.topology = scenario.topology
        self.costs = scenario.costs
        self.seed_key = str(scenario.seed) if seed_key is None else seed_key
        if max(self.topology.nodes) > 0xFF:
            raise ValueError("node ids must fit one byte to be encodable")

        topo = self.topology
        self.base_id = topo.base_id
        self.base_pos = topo.nodes[self.base_id]
        self.hop_cap = len(topo.nodes) // 2
        self.attempt_cap = len(topo.nodes)

        modes = init_modes(topo, self.seed_key)
        self.nodes: dict[int, NodeState] = {}
        balances: dict[int, float] = {}
        for nid in sorted(topo.nodes):
            is_base = nid == self.base_id
            if is_base:
                energy: float = math.inf
                mode = MODE_C
            else:
                energy = draw_initial_energy(
                    self.seed_key, nid, self.costs.init_min, self.costs.init_max
                )
                mode = modes[nid]
            self.nodes[nid] = NodeState(
                node_id=nid, pos=topo.nodes[nid], is_base=is_base,
                mode=mode, energy=energy,
            )
            balances[nid] = energy
        self.ledger = EnergyLedger(balances)
        self.loss_rng = random.Random(f"loss:{self.seed_key}")

        self.tick = 0
        self.trace = Trace()
        self.trace.initial_modes = {n: modes[n] for n in sorted(modes)}
        self.trace.initial_energy = dict(balances)
        self._events_at: dict[int, list[SenseEvent]] = {}
        for ev in scenario.events:
            self._events_at.setdefault(ev.tick, []).append(ev)
        self._active_irregular: dict[int, IncidentRecord] = {}
        self._incident_counter = 0
        self.active_flood: FloodRecord | None = None
        self._base_depth = self._bfs_from_base()
        self._base_ecc = max(
            (d for d in self._base_depth.values() if d is not None), default=0
        )
        self._acted_reset: set[int] = set()
        self._base_has_alarm = False

        q = [n for n in sorted(modes) if modes[n] == MODE_Q]
        c = [n for n in sorted(modes) if modes[n] == MODE_C]
        w, h = topo.field_size
        self._line(
            f"init: field={_fmt(w)}x{_fmt(h)} range={_fmt(topo.radio_range)}"
            f" nodes={len(topo.nodes)} base={self.base_id} seed={self.seed_key}"
            f" loss={_fmt(scenario.loss_prob)}"
        )
        self._line(f"init: modes Q={_ids(q)} C={_ids(c)}")
        self._line(
            "init: energy "
            + " ".join(f"{n}={_fmt_energy(balances[n])}" for n in sorted(balances))
        )

    # ------------------------------------------------------------------ setup

    def _bfs_from_base(self) -> dict[int, int | None]:
        depth: dict[int, int | None] = {n: None for n in self.topology.nodes}
        depth[self.base_id] = 0
        frontier = [self.base_id]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for v in self.topology.neighbors(u):
                    if depth[v] is None:
                        depth[v] = d
                        nxt.append(v)
            frontier = nxt
        return depth

    # ---------------------------------------------------------------- helpers

    def _line(self, text: str) -> None:
        self.trace.lines.append(text)

    def _tline(self, text: str) -> None:
        self.trace.lines.append(f"t={self.tick:>3} {text}")

    def _event(self, kind: PacketKind, src: int, dst: int | None,
               flag1: bool, flag2: bool, receivers: list[int], note: str) -> None:
        self.trace.packet_events.append(PacketEvent(
            tick=self.tick, kind=kind, src=src, dst=dst,
            flag1=flag1, flag2=flag2, receivers=tuple(receivers), note=note,
        ))

    def _debit(self, nid: int, cause: str, amount: int) -> None:
        node = self.nodes[nid]
        was_alive = node.alive
        self.ledger.debit(self.tick, nid, cause, amount)
        node.energy = self.ledger.balance(nid)
        if was_alive and not node.alive:
            self.trace.deaths.append((self.tick, nid))
            self._tline(f"node {nid} died ({cause})")

    def _dropped(self) -> bool:
        p = self.sc.loss_prob
        if p <= 0:
            return False
        return self.loss_rng.random() < p

    def _set_base_message(self, msg: str, alarm: bool) -> None:
        base = self.nodes[self.base_id]
        if alarm:
            self._base_has_alarm = True
            if base.message != msg:
                base.message = msg
        elif not self._base_has_alarm and base.message != msg:
            base.message = msg
            self._tline(f"base: {msg!r}")

    def base_record(self) -> dict[str, object]:
        """The base station's status in the shape reports print it."""
        base = self.nodes[self.base_id]
        return {
            "id": BASE_LABEL,
            "energy": base.energy,
            "loc": base.pos,
            "flag1": int(base.flag1),
            "flag2": int(base.flag2),
            "mode": base.mode,
            "msg": base.message,
        }

    # -------------------------------------------------------------- incidents

    def _open_incident(self, origin: int, tick: int, message: str) -> IncidentRecord:
        self._incident_counter += 1
        rec = IncidentRecord(
            incident_id=self._incident_counter, origin=origin,
            start_tick=tick, message=message, path=[origin],
        )
        self.trace.incidents.append(rec)
        self._active_irregular[origin] = rec
        return rec

    def _close_incident(self, rec: IncidentRecord, holder: int | None,
                        reason: str, unbind: bool = True) -> None:
        """Finish a record; keep it bound to a still-S holder so the node
        idles instead of reopening a fresh incident every tick."""
        rec.closed = True
        rec.close_reason = reason
        if holder is not None and unbind:
            self._active_irregular.pop(holder, None)

    def _join_flood(self, origin: int, tick: int) -> None:
        epoch = self.active_flood
        if epoch is None:
            epoch = FloodRecord(
                origins=[(tick, origin)], start_tick=tick, hop_cap=self.hop_cap,
            )
            self.active_flood = epoch
            self.trace.floods.append(epoch)
        else:
            epoch.origins.append((tick, origin))
        epoch.infected_at.setdefault(origin, tick)

    def _apply_sense(self, ev: SenseEvent) -> None:
        node = self.nodes[ev.node]
        if not node.alive:
            self._tline(f"sense node={ev.node} reading={_fmt(ev.reading)} ignored (dead)")
            return
        before = (node.flag1, node.flag2)
        sense_and_classify(node, ev.reading, self.sc.thresholds)
        after = (node.flag1, node.flag2)
        if after == before:
            return
        self._tline(
            f"sense node={ev.node} reading={_fmt(ev.reading)}"
            f" -> flags=({int(node.flag1)},{int(node.flag2)}) mode={node.mode}"
        )
        node.infected_tick = self.tick
        if after == (True, True):
            rec = self._active_irregular.get(ev.node)
            if rec is not None and not rec.closed:
                self._close_incident(rec, ev.node, "escalated")
            node.hop_depth = 0
            self._join_flood(ev.node, self.tick)
        elif before == (False, False):
            self._open_incident(ev.node, self.tick, node.message)

    # ------------------------------------------------------------- tick loop

    def run(self) -> Trace:
        """Execute the whole horizon and return the finished trace."""
        for _ in range(self.sc.horizon):
            self.step()
        self._line(
            "end: balances "
            + " ".join(
                f"{n}={_fmt_energy(self.ledger.balance(n))}"
                for n in sorted(self.nodes)
            )
        )
        self.trace.base_record = self.base_record()
        return self.trace

    def step(self) -> None:
        """Advance one tick through all phases."""
        for nid in sorted(self.nodes):
            if self.nodes[nid].alive:
                self.nodes[nid].roll_window()

        for ev in self._events_at.get(self.tick, []):
            self._apply_sense(ev)

        epoch = self.active_flood
        if (epoch is not None and epoch.base_receipt_tick is not None
                and self.tick > epoch.base_receipt_tick):
            self.base_reset()

        self.trace.mode_history.append(
            {nid: self.nodes[nid].mode for nid in sorted(self.nodes)}
        )

        for nid in sorted(self.nodes):
            node = self.nodes[nid]
            if node.is_base or not node.alive:
                continue
            if node.mode == MODE_S and node.flag2:
                self.run_petrol_flow(nid)
            elif node.mode == MODE_S and node.flag1:
                self.run_irregular_transfer(nid)
            elif node.mode == MODE_Q:
                self.step_regular(nid)

        for nid in sorted(self.nodes):
            node = self.nodes[nid]
            if node.is_base or not node.alive or node.flag1:
                continue
            alert = isolation_check(node)
            if alert is not None:
                self._broadcast_alert(nid, alert)

        for nid in sorted(self.nodes):
            node = self.nodes[nid]
            if (node.is_base or not node.alive or node.flag1 or node.flag2
                    or nid in self._acted_reset):
                continue
            tick_transition(node)

        if self.active_flood is not None:
            s_set = frozenset(
                nid for nid, n in self.nodes.items()
                if not n.is_base and n.mode == MODE_S and n.flag2
            )
            self.active_flood.s_set_by_tick.append((self.tick, s_set))

        self._acted_reset.clear()
        self.tick += 1

    # --------------------------------------------------------- regular step

    def step_regular(self, nid: int) -> None:
        """One Q node broadcasts one status query; neighbors just listen."""
        node = self.nodes[nid]
        pkt = make_query(nid, loc=node.pos, energy=_wire(node.energy))
        self._debit(nid, "query_send", self.costs.query_cost)
        received = []
        for j in self.topology.neighbors(nid):
            nb = self.nodes[j]
            if not nb.alive:
                continue
            if not nb.is_base and nb.mode == MODE_S:
                continue  # busy forwarding; not listening on the regular plane
            if self._dropped():
                continue
            handle_query(nb, pkt)
            if nb.is_base:
                self._set_base_message(NETWORK_FINE, alarm=False)
            else:
                self._debit(j, "query_recv", self.costs.query_cost)
            received.append(j)
        self._event(PacketKind.QUERY, nid, None, False, False, received, "regular")
        self._tline(f"query src={nid} recv={_ids(received)}")

    # ----------------------------------------------------- alarm forwarding

    def run_irregular_transfer(self, nid: int) -> None:
        """One greedy hop attempt: query, collect acks, hand the alarm on.

        Called once per tick while the node holds an open alarm; the
        alarm travels one accepted hop per tick until the base takes it.
        """
        node = self.nodes[nid]
        if node.infected_tick is not None and node.infected_tick >= self.tick:
            return  # took the alarm over this very tick; acts from the next
        rec = self._active_irregular.get(nid)
        if rec is None:
            # the confirmation back to the previous holder was lost and the
            # record moved on; the node still holds the alarm, so track it
            # as a fresh incident
            rec = self._open_incident(nid, self.tick, node.message)
        if rec.closed:
            return
        rec.attempts += 1

        hop_pkt = make_query(nid, flag1=True, loc=node.pos, energy=_wire(node.energy))
        self._debit(nid, "hop_query", self.costs.query_cost)
        heard = []
        acks = []  # (node id, reported energy, reported location)
        ack_events = []
        for j in self.topology.neighbors(nid):
            nb = self.nodes[j]
            if not nb.alive:
                continue
            if self._dropped():
                continue
            if not nb.is_base:
                self._debit(j, "hop_query_recv", self.costs.query_cost)
            heard.append(j)
            ack = handle_query(nb, hop_pkt)
            if ack is None:
                continue
            if not nb.is_base:
                self._debit(j, "ack_send", self.costs.query_cost)
            if self._dropped():
                continue
            if not node.alive:
                continue  # holder drained mid-round; the ack falls on deaf ears
            self._debit(nid, "ack_recv", self.costs.query_cost)
            acks.append((j, ack.energy, ack.loc))
            ack_events.append(PacketEvent(
                tick=self.tick, kind=PacketKind.ACK, src=j, dst=nid,
                flag1=False, flag2=False, receivers=(nid,), note="ack",
            ))
        self._event(PacketKind.QUERY, nid, None, True, False, heard, "hop_query")
        self.trace.packet_events.extend(ack_events)

        attempt = HopAttempt(
            tick=self.tick, holder=nid,
            repliers=tuple((j, e) for j, e, _ in acks),
        )
        rec.hops.append(attempt)

        eligible = [
            (j, e, loc) for j, e, loc in acks if e > self.costs.threshold
        ]
        if not node.alive or not eligible:
            reason = "holder died" if not node.alive else "no eligible replier"
            self._tline(
                f"hop src={nid} replies={len(acks)} -> stalled ({reason})"
            )
            if not node.alive:
                self._close_incident(rec, nid, "holder_died", unbind=False)
            elif rec.attempts >= self.attempt_cap:
                self._close_incident(rec, nid, "hop_cap", unbind=False)
                self._tline(f"incident {rec.incident_id} undelivered (hop cap)")
            return

        chosen, _, _ = min(
            eligible, key=lambda it: (dist(it[2], self.base_pos), -it[1], it[0])
        )
        spkt = make_source(nid, node.pos, _wire(node.energy), rec.message)
        self._debit(nid, "source_send", 2 * self.costs.source_cost)
        attempt.chosen = chosen

        target = self.nodes[chosen]
        delivered = target.alive and not self._dropped()
        if delivered:
            reset_ack = handle_source(target, spkt)
        else:
            reset_ack = None
        self._event(PacketKind.SOURCE, nid, chosen, True, False,
                    [chosen] if delivered else [], "source")

        if not delivered or reset_ack is None:
            # dropped, target died, or an already-busy sensor refused the
            # handover; the holder keeps the alarm and retries next tick
            why = "refused" if delivered else "lost"
            self._tline(f"hop src={nid} -> {chosen} {why}, retrying")
            if rec.attempts >= self.attempt_cap:
                self._close_incident(rec, nid, "hop_cap", unbind=False)
                self._tline(f"incident {rec.incident_id} undelivered (hop cap)")
            return

        attempt.accepted = True
        target.infected_tick = self.tick
        rec.path.append(chosen)
        if target.is_base:
            rec.delivered = True
            rec.delivery_tick = self.tick
            self._close_incident(rec, nid, "delivered")
            self._set_base_message(rec.message, alarm=True)
            self.trace.base_inbox.append((self.tick, rec.message))
            self._tline(f"base received alarm: {rec.message!r}")
        else:
            self._active_irregular.pop(nid, None)
            self._active_irregular[chosen] = rec

        if not target.is_base:
            self._debit(chosen, "reset_send", self.costs.query_cost)
        if self._dropped() or not node.alive:
            self._event(PacketKind.ACK, chosen, nid, False, False, [], "reset_ack")
            self._tline(f"hop src={nid} -> {chosen} (confirmation lost)")
            return
        self._debit(nid, "reset_recv", self.costs.query_cost)
        self._event(PacketKind.ACK, chosen, nid, False, False, [nid], "reset_ack")
        reset_node(node)
        self._acted_reset.add(nid)
        attempt.reset_heard = True
        self._tline(
            f"hop src={nid} -> {chosen} replies={len(acks)}"
            f" path={_ids(rec.path)}"
        )

    # ------------------------------------------------------------- flooding

    def run_petrol_flow(self, nid: int) -> None:
        """One tick's flood rebroadcast by one infected node.

        Rebroadcasting stops for the whole epoch once the base has the
        alarm, and a packet never travels beyond the hop cap: nodes at
        cap depth are infected but stay silent.
        """
        node = self.nodes[nid]
        epoch = self.active_flood
        if epoch is None:
            return
        if node.infected_tick is not None and node.infected_tick >= self.tick:
            return
        if epoch.base_receipt_tick is not None and epoch.base_receipt_tick < self.tick:
            return
        if node.hop_depth >= epoch.hop_cap:
            return

        pkt = make_source(nid, node.pos, _wire(node.energy), node.message,
                          hop_count=node.hop_depth, devastating=True)
        self._debit(nid, "flood_send", self.costs.source_cost)
        received = []
        for j in self.topology.neighbors(nid):
            nb = self.nodes[j]
            if not nb.alive:
                continue
            if self._dropped():
                continue
            received.append(j)
            if nb.is_base:
                if epoch.base_receipt_tick is None:
                    epoch.base_receipt_tick = self.tick
                    self._set_base_message(pkt.message, alarm=True)
                    self.nodes[self.base_id].flag1 = True
                    self.nodes[self.base_id].flag2 = True
                    self.nodes[self.base_id].mode = MODE_S
                    self.trace.base_inbox.append((self.tick, pkt.message))
                    self._tline(f"base received flood alarm: {pkt.message!r}")
                continue
            self._debit(j, "flood_recv", self.costs.source_cost)
            was_s = nb.mode == MODE_S
            had_flag2 = nb.flag2
            handle_source(nb, pkt)
            if not was_s:
                nb.infected_tick = self.tick
                epoch.infected_at.setdefault(j, self.tick)
            elif not had_flag2:
                # an alarm-forwarding node swept up by the flood
                rec = self._active_irregular.get(j)
                if rec is not None and not rec.closed:
                    self._close_incident(rec, j, "escalated")
                nb.infected_tick = self.tick
                epoch.infected_at.setdefault(j, self.tick)
        self._event(PacketKind.SOURCE, nid, None, True, True, received, "flood")
        self._tline(f"flood src={nid} hop={node.hop_depth} recv={_ids(received)}")

    def base_reset(self) -> None:
        """Advance the reset wave one hop outward from the base.

        The wave is control-plane bookkeeping and costs no energy; each
        tick it clears every S node at the next graph distance from the
        base.  When it has swept the whole component the epoch closes
        and the base goes back to listening.
        """
        epoch = self.active_flood
        if epoch is None or epoch.base_receipt_tick is None:
            return
        depth = self.tick - epoch.base_receipt_tick
        targets = [
            nid for nid in sorted(self.nodes)
            if not self.nodes[nid].is_base
            and self.nodes[nid].alive
            and self.nodes[nid].mode == MODE_S
            and self._base_depth[nid] == depth
        ]
        for nid in targets:
            rec = self._active_irregular.get(nid)
            if rec is not None and not rec.closed:
                self._close_incident(rec, nid, "base_reset")
            reset_node(self.nodes[nid])
        epoch.reset_wave.append((self.tick, tuple(targets)))
        self._tline(f"reset-wave depth={depth} reset={_ids(targets)}")

        if depth >= self._base_ecc:
            leftovers = [
                nid for nid in sorted(self.nodes)
                if not self.nodes[nid].is_base
                and self.nodes[nid].alive
                and self.nodes[nid].mode == MODE_S
                and self.nodes[nid].flag2
            ]
            for nid in leftovers:
                reset_node(self.nodes[nid])
            if leftovers:
                epoch.reset_wave.append((self.tick, tuple(leftovers)))
                self._tline(f"reset-wave cleanup reset={_ids(leftovers)}")
            base = self.nodes[self.base_id]
            base.flag1 = False
            base.flag2 = False
            base.mode = MODE_C
            base.stored_mode = None
            self._base_has_alarm = False
            epoch.completed_tick = self.tick
            self.active_flood = None
            self._tline("reset-wave complete")

    # ------------------------------------------------------------ isolation

    def _broadcast_alert(self, nid: int, alert) -> None:
        """Long-range disconnect alert: heard directly, never relayed."""
        node = self.nodes[nid]
        reach = self.costs.isolation_multiplier * self.topology.radio_range
        cost = self.costs.isolation_multiplier * self.costs.source_cost
        self._debit(nid, "alert_send", cost)
        received = []
        for j in sorted(self.nodes):
            if j == nid:
                continue
            nb = self.nodes[j]
            if not nb.alive:
                continue
            if dist(node.pos, nb.pos) > reach:
                continue
            if self._dropped():
                continue
            received.append(j)
            if nb.is_base:
                text = f"node number '{nid}' became disconnected"
                self.trace.base_inbox.append((self.tick, text))
                self._tline(f"base: {text}")
            else:
                self._debit(j, "alert_recv", self.costs.source_cost)
        self._event(PacketKind.SOURCE, nid, None, True, False, received, "alert")
        self._tline(f"isolation alert src={nid} recv={_ids(received)}")


def run(scenario: Scenario, seed_key: str | None = None) -> Trace:
    """Convenience wrapper: build a Simulation, run it, return the trace."""
    return Simulation(scenario, seed_key=seed_key).run()


def _wire(energy: float) -> float:
    return math.inf if energy == math.inf else int(energy)


def _fmt(v: float) -> str:
    f = float(v)
    return str(int(f)) if f.is_integer() else str(f)


def _fmt_energy(v: float) -> str:
    return "inf" if v == math.inf else str(int(v))

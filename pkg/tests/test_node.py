"""Per-node state machine: init roles, sensing, handovers, resets."""

from __future__ import annotations

import math
import random

import pytest

from qcs_sim import (
    MODE_C,
    MODE_Q,
    MODE_S,
    NodeState,
    Thresholds,
    default16_topology,
    handle_query,
    handle_source,
    init_modes,
    isolation_check,
    make_query,
    make_source,
    reset_node,
    sense_and_classify,
    tick_transition,
)
from qcs_sim.packet import RESET_MESSAGE, affected_message

from conftest import (
    brute_adjacency,
    is_maximal_independent,
    random_connected_topology,
)


def _node(nid=1, mode=MODE_C, energy=1000, pos=(0.0, 0.0), base=False):
    return NodeState(node_id=nid, pos=pos, is_base=base, mode=mode,
                     energy=energy)


# ------------------------------------------------------------- init roles

def test_init_modes_is_maximal_independent_set():
    topo = default16_topology()
    adj = brute_adjacency(topo.nodes, topo.radio_range)
    sensors = set(topo.sensor_ids())
    for seed in range(30):
        modes = init_modes(topo, seed)
        assert set(modes) == sensors
        q = {nid for nid, m in modes.items() if m == MODE_Q}
        assert is_maximal_independent(adj, q, sensors)


def test_init_modes_deterministic_and_seed_sensitive():
    topo = default16_topology()
    assert init_modes(topo, 5) == init_modes(topo, 5)
    distinct = {tuple(sorted(nid for nid, m in init_modes(topo, s).items()
                             if m == MODE_Q)) for s in range(40)}
    assert len(distinct) > 1


def test_init_modes_on_random_layouts():
    rng = random.Random(11)
    for _ in range(20):
        topo = random_connected_topology(rng)
        adj = brute_adjacency(topo.nodes, topo.radio_range)
        modes = init_modes(topo, rng.randint(0, 999))
        q = {nid for nid, m in modes.items() if m == MODE_Q}
        assert is_maximal_independent(adj, q, set(topo.sensor_ids()))


# ---------------------------------------------------------------- sensing

def test_thresholds_must_be_ordered():
    Thresholds(irregular_level=10, devastating_level=20)
    with pytest.raises(ValueError):
        Thresholds(irregular_level=20, devastating_level=20)


def test_normal_reading_changes_nothing():
    n = _node(mode=MODE_Q)
    sense_and_classify(n, 50.0, Thresholds())  # exactly at the line: normal
    assert (n.mode, n.flag1, n.flag2) == (MODE_Q, False, False)
    assert n.sensed == 50.0
    assert n.message == ""


def test_irregular_reading_raises_alarm():
    n = _node(nid=10, mode=MODE_Q, pos=(225.0, 225.0))
    sense_and_classify(n, 90.0, Thresholds())  # at the line: still irregular
    assert (n.mode, n.flag1, n.flag2) == (MODE_S, True, False)
    assert n.stored_mode == MODE_Q
    assert n.message == "Affected NODE is ->NODE10 At Location (225 225)"


def test_devastating_reading_sets_both_flags():
    n = _node(nid=4, mode=MODE_C, pos=(75.0, 75.0))
    sense_and_classify(n, 90.5, Thresholds())
    assert (n.mode, n.flag1, n.flag2) == (MODE_S, True, True)
    assert n.stored_mode == MODE_C


def test_escalation_keeps_first_stored_mode():
    n = _node(mode=MODE_Q)
    sense_and_classify(n, 70.0, Thresholds())
    sense_and_classify(n, 95.0, Thresholds())
    assert (n.flag1, n.flag2) == (True, True)
    assert n.stored_mode == MODE_Q


# ------------------------------------------------------------- transitions

def test_tick_transition_alternates():
    n = _node(mode=MODE_Q)
    tick_transition(n)
    assert n.mode == MODE_C
    tick_transition(n)
    assert n.mode == MODE_Q


def test_tick_transition_refuses_busy_nodes():
    n = _node(mode=MODE_S)
    n.flag1 = True
    with pytest.raises(ValueError):
        tick_transition(n)


# ----------------------------------------------------------------- queries

def test_handle_query_learns_neighbor():
    n = _node(mode=MODE_C)
    out = handle_query(n, make_query(7))
    assert out is None                # plain status query: no reply
    assert 7 in n.heard_curr


def test_handle_query_acks_alarm_queries():
    n = _node(nid=3, mode=MODE_Q, energy=800, pos=(10.0, 20.0))
    ack = handle_query(n, make_query(7, flag1=True))
    assert ack is not None
    assert ack.src == 3
    assert ack.energy == 800
    assert ack.loc == (10.0, 20.0)


def test_busy_sensor_does_not_ack_but_base_does():
    busy = _node(mode=MODE_S)
    busy.flag1 = True
    assert handle_query(busy, make_query(7, flag1=True)) is None
    base = _node(nid=16, base=True, energy=math.inf, mode=MODE_S)
    ack = handle_query(base, make_query(7, flag1=True))
    assert ack is not None
    assert ack.energy == math.inf


# ---------------------------------------------------------------- handover

def test_handle_source_accepts_and_confirms():
    n = _node(nid=5, mode=MODE_Q, energy=700)
    msg = affected_message(9, (10.0, 10.0))
    spkt = make_source(9, (10.0, 10.0), 600, msg)
    reset = handle_source(n, spkt)
    assert (n.mode, n.flag1, n.flag2) == (MODE_S, True, False)
    assert n.stored_mode == MODE_Q
    assert n.message == msg           # original alarm text travels unchanged
    assert reset is not None
    assert reset.message == RESET_MESSAGE
    assert reset.src == 5


def test_busy_sensor_refuses_handover():
    n = _node(mode=MODE_S)
    n.flag1 = True
    assert handle_source(n, make_source(9, (0, 0), 5, "x")) is None


def test_base_always_accepts():
    base = _node(nid=16, base=True, energy=math.inf, mode=MODE_S)
    base.flag1 = True
    reset = handle_source(base, make_source(9, (0, 0), 5, "x"))
    assert reset is not None


def test_flood_packet_infects_at_next_depth():
    n = _node(mode=MODE_C)
    spkt = make_source(4, (0, 0), 5, "boom", hop_count=2, devastating=True)
    assert handle_source(n, spkt) is None  # flooding is unacknowledged
    assert (n.mode, n.flag1, n.flag2) == (MODE_S, True, True)
    assert n.hop_depth == 3
    assert n.message == "boom"


def test_flood_sweeps_up_alarm_forwarder():
    n = _node(mode=MODE_Q)
    sense_and_classify(n, 70.0, Thresholds())   # irregular holder
    spkt = make_source(4, (0, 0), 5, "boom", hop_count=0, devastating=True)
    handle_source(n, spkt)
    assert n.flag2 is True
    assert n.hop_depth == 1
    assert n.message == "boom"
    assert n.stored_mode == MODE_Q


def test_reinfection_keeps_shallowest_depth():
    n = _node(mode=MODE_C)
    handle_source(n, make_source(4, (0, 0), 5, "boom", hop_count=1,
                                 devastating=True))
    handle_source(n, make_source(9, (0, 0), 5, "boom", hop_count=7,
                                 devastating=True))
    assert n.hop_depth == 2


# ------------------------------------------------------------------- reset

def test_reset_restores_stored_mode():
    for start in (MODE_Q, MODE_C):
        n = _node(mode=start)
        sense_and_classify(n, 70.0, Thresholds())
        n.infected_tick = 3
        reset_node(n)
        assert n.mode == start
        assert (n.flag1, n.flag2) == (False, False)
        assert n.message == ""
        assert n.hop_depth == 0
        assert n.infected_tick is None
        assert n.stored_mode is None


def test_reset_requires_a_held_alarm():
    with pytest.raises(ValueError):
        reset_node(_node(mode=MODE_Q))


# --------------------------------------------------------------- isolation

def test_isolation_fires_once_on_empty_window():
    n = _node(nid=8, mode=MODE_C, pos=(0.0, 300.0))
    handle_query(n, make_query(9))
    assert isolation_check(n) is None     # neighbors present
    n.roll_window()
    n.roll_window()                       # two silent periods: window empty
    alert = isolation_check(n)
    assert alert is not None
    assert alert.message == "NODE 8 DISCONNECTED"
    assert alert.flags.flag1 and not alert.flags.flag2
    assert isolation_check(n) is None     # already known disconnected


def test_isolation_silent_when_never_heard_anyone():
    n = _node(mode=MODE_C)
    assert isolation_check(n) is None
    n.roll_window()
    assert isolation_check(n) is None

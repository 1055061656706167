import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slidingblocks import presets
from slidingblocks.circles import social_circles
from slidingblocks.graph import apply_swap, build_graph, configuration, random_configuration, replay
from slidingblocks.oracle import decode
from slidingblocks.reachability import (
    Reason, circle_check, decide, normalize, theta0_component, theta0_table, wilson_parity_connected,
)

from conftest import family, perms, table


def fifteen_identity():
    # tile i+1 on vertex i, the empty cell on the last vertex
    return configuration([f"a{i + 1}" for i in range(15)] + ["b1"])


def test_fifteen_puzzle_13_15_14():
    g = presets.grid(4, 4)
    s = fifteen_identity()
    cells = list(s.placement)
    cells[13], cells[14] = cells[14], cells[13]
    v = decide(s, configuration(cells), g)
    assert not v.connected and v.reason == Reason.PARITY_MISMATCH


def test_fifteen_puzzle_single_flip():
    g = presets.grid(4, 4)
    s = fifteen_identity()
    cells = list(s.placement)
    cells[11], cells[15] = cells[15], cells[11]
    t = configuration(cells)
    assert decide(s, t, g).connected
    assert wilson_parity_connected(s, t, g)


def test_p3_exchange():
    v = decide(configuration(["a1", "a2", "b1"]), configuration(["a2", "a1", "b1"]), presets.path(3))
    assert not v.connected


def test_cycle_orders():
    c5 = presets.cycle(5)
    s = configuration(["b1", "b2", "a1", "a2", "a3"])
    t = configuration(["b1", "b2", "a1", "a3", "a2"])
    (circle,) = social_circles(c5, 2)
    assert circle_check(s, t, c5, circle, 2).reason == Reason.CYCLIC_ORDER_MISMATCH
    c4 = presets.cycle(4)
    s = configuration(["b1", "b2", "a1", "a2"])
    t = configuration(["b1", "b2", "a2", "a1"])
    assert circle_check(s, t, c4, social_circles(c4, 2)[0], 2).connected


def test_people_set_mismatch():
    b = presets.bowtie()
    s = configuration(["b1", "a1", "a2", "a3", "a4"])
    t = configuration(["b1", "a3", "a2", "a1", "a4"])
    v = decide(s, t, b)
    assert not v.connected and v.reason == Reason.PEOPLE_SET_MISMATCH


def test_normalize_bowtie():
    b = presets.bowtie()
    c = configuration(["a1", "a2", "a3", "a4", "b1"])
    left = social_circles(b, 1)[0]
    out, ms = normalize(c, b, left)
    assert out[0] == "b1"
    assert replay(b, c, ms) == out
    again, ms2 = normalize(out, b, left)
    assert again == out and len(ms2) == 0


def test_normalize_grid23_random():
    g = presets.grid(2, 3)
    rng = random.Random(4)
    (circle,) = social_circles(g, 2)
    for _ in range(100):
        c = random_configuration(6, 2, rng)
        out, ms = normalize(c, g, circle)
        assert replay(g, c, ms) == out
        assert set(out.butterfly_vertices()) == set(circle.anchors)


def test_wilson_grid23_against_oracle():
    g = presets.grid(2, 3)
    t = table(g, 1)
    ps = perms(6)
    rng = random.Random(7)
    for _ in range(400):
        i, j = rng.randrange(720), rng.randrange(720)
        assert wilson_parity_connected(decode(ps[i], 1), decode(ps[j], 1), g) == (t.labels[i] == t.labels[j])


def test_wilson_guards():
    with pytest.raises(ValueError):
        wilson_parity_connected(configuration(["b1", "a1", "a2"]), configuration(["b1", "a1", "a2"]), presets.cycle(3))


def test_theta0_table():
    tab = theta0_table()
    assert len(tab) == 5040
    assert sorted(np.bincount(list(tab.values()))) == [840] * 6


def test_theta0_component_closed_under_swaps():
    g = presets.theta0()
    rng = random.Random(2)
    for _ in range(50):
        c = random_configuration(7, 1, rng)
        b = c.butterfly_vertices()[0]
        for w in g.adjacency[b]:
            assert theta0_component(apply_swap(g, c, (b, w))) == theta0_component(c)


def test_theta0_matches_oracle():
    g = presets.theta0()
    t = table(g, 1)
    ps = perms(7)
    rng = random.Random(3)
    for _ in range(300):
        i, j = rng.randrange(5040), rng.randrange(5040)
        assert decide(decode(ps[i], 1), decode(ps[j], 1), g).connected == (t.labels[i] == t.labels[j])


def test_disconnected_board():
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    s = configuration(["b1", "a1", "a2", "a3", "a4"])
    assert decide(s, configuration(["a1", "b1", "a2", "a3", "a4"]), g).connected
    assert not decide(s, configuration(["b1", "a1", "a2", "a4", "a3"]), g).connected
    assert not decide(s, configuration(["b1", "a1", "a3", "a2", "a4"]), g).connected


boards = st.sampled_from([presets.grid(2, 3), presets.bowtie(), presets.theta0(), presets.cycle(6),
                          presets.stopwatch(6), presets.snake_tongue(6), presets.hourglass(3, 4)])


@settings(max_examples=60, deadline=None)
@given(boards, st.integers(1, 4), st.integers(0, 10**6))
def test_reflexive_symmetric_normalization_sound(g, k, seed):
    rng = random.Random(seed)
    s = random_configuration(g.n, k, rng)
    t = random_configuration(g.n, k, rng)
    assert decide(s, s, g).connected
    assert decide(s, t, g).connected == decide(t, s, g).connected
    for circle in social_circles(g, k):
        s2, _ = normalize(s, g, circle)
        assert decide(s2, t, g).connected == decide(s, t, g).connected


def test_decide_matches_oracle_n5():
    rng = random.Random(11)
    for g in family(5):
        ps = perms(g.n)
        for k in range(1, g.n + 1):
            t = table(g, k)
            for _ in range(30):
                i, j = rng.randrange(len(ps)), rng.randrange(len(ps))
                assert decide(decode(ps[i], k), decode(ps[j], k), g).connected == (t.labels[i] == t.labels[j])

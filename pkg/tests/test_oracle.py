import math

import pytest

from slidingblocks import presets
from slidingblocks.graph import configuration
from slidingblocks.oracle import (
    CapExceeded, connected_graphs, decode, encode, enumerate_components, min_k_connected, oracle_connected, rank,
)


def test_rank_is_lexicographic():
    import itertools
    for i, p in enumerate(itertools.permutations(range(5))):
        assert rank(p) == i


def test_encode_decode():
    c = configuration(["a2", "b1", "a1", "b2"])
    assert decode(encode(c), 2) == c


def test_theta0_k1():
    t = enumerate_components(presets.theta0(), 1)
    assert t.components == 6 and t.sizes == (840,) * 6


def test_grid23_halves():
    t = enumerate_components(presets.grid(2, 3), 1)
    assert t.sizes == (360, 360)


def test_cycle4():
    assert enumerate_components(presets.cycle(4), 2).components == 1
    assert enumerate_components(presets.cycle(4), 1).sizes == (12, 12)


def test_p3_exchange_disconnected():
    g = presets.path(3)
    assert not oracle_connected(configuration(["a1", "a2", "b1"]), configuration(["a2", "a1", "b1"]), g)


def test_min_k():
    assert min_k_connected(presets.theta0()) == 2
    assert min_k_connected(presets.cycle(7)) == 5
    assert min_k_connected(presets.path(4)) == 3


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_components(presets.grid(4, 4), 1)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_family_sizes(n, count):
    # OEIS A001349
    assert len(connected_graphs(n)) == count


def test_labels_deterministic():
    a = enumerate_components(presets.bowtie(), 1).labels
    b = enumerate_components(presets.bowtie(), 1).labels
    assert (a == b).all() and a[0] == 0

import itertools

import pytest

from slidingblocks import presets
from slidingblocks.circles import choose_anchors, is_well_lit, social_circles
from slidingblocks.decomposition import block_cut_tree, kappa

from conftest import family


def test_bowtie_circles():
    assert [c.vertices for c in social_circles(presets.bowtie(), 1)] == [(0, 1, 2), (2, 3, 4)]
    assert [c.vertices for c in social_circles(presets.bowtie(), 2)] == [(0, 1, 2, 3, 4)]


def test_stopwatch_single_circle():
    assert [c.vertices for c in social_circles(presets.stopwatch(6), 2)] == [tuple(range(6))]


def test_anchors():
    assert choose_anchors((2, 3, 4), 1) == (2,)
    assert choose_anchors((0, 1, 2, 3), 3) == (0, 1, 2)
    assert choose_anchors((5, 7), 2) == (5, 7)
    with pytest.raises(RuntimeError):
        choose_anchors((1,), 2)


def test_path_windows():
    # P6 with k=2: the dark hallway 1-2-3-4 splits into windows of k+1 vertices
    got = [c.vertices for c in social_circles(presets.path(6), 2)]
    assert got == [(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 5)]


def _brute_circles(g, k):
    well = [frozenset(s) for r in range(1, g.n + 1) for s in itertools.combinations(range(g.n), r)
            if is_well_lit(g, s, k)]
    return sorted(tuple(sorted(s)) for s in well if not any(s < t for t in well))


def test_matches_definition_on_small_graphs():
    for g in family(5):
        for k in range(1, g.n + 1):
            assert [c.vertices for c in social_circles(g, k)] == _brute_circles(g, k), (g.sorted_edges(), k)


def test_circle_invariants_on_family():
    for g in family(6):
        for k in range(1, g.n + 1):
            cs = social_circles(g, k)
            assert set().union(*(c.vertices for c in cs)) == set(range(g.n))
            assert len({c.vertices for c in cs}) == len(cs)
            assert sum(len(c.vertices) - k for c in cs) == g.n - k
            for c in cs:
                assert len(c.vertices) >= k and is_well_lit(g, c.vertices, k)
                assert set(c.anchors) <= set(c.vertices) and len(c.anchors) == k
            if k == 1:
                assert sorted(c.vertices for c in cs) == sorted(block_cut_tree(g).blocks)
            if k > kappa(g) and g.n > 2:
                assert [c.vertices for c in cs] == [tuple(range(g.n))]

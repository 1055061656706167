import pytest

from slidingblocks import presets
from slidingblocks.counting import count_components
from slidingblocks.decomposition import kappa_star
from slidingblocks.graph import build_graph

from conftest import family, table


@pytest.mark.parametrize("g,k,literal,corrected", [
    (presets.grid(4, 4), 1, 2, 2),
    (presets.theta0(), 1, 6, 6),
    (presets.theta0(), 2, 1, 1),
    (presets.cycle(4), 1, 12, 2),
    # literal: multinomial(4; 2, 2) * (3!/2) ** 2; the oracle finds 6
    (presets.bowtie(), 1, 54, 6),
])
def test_examples(g, k, literal, corrected):
    assert count_components(g, k, "literal").value == literal
    assert count_components(g, k, "corrected").value == corrected


def test_big_integers():
    # C_20 with one butterfly: 18! oriented cyclic orders
    import math
    assert count_components(presets.cycle(20), 1).value == math.factorial(18)


def test_one_circle_means_no_multinomial():
    assert count_components(presets.grid(3, 3), 2).value == 1


def test_disconnected_rejected():
    with pytest.raises(ValueError):
        count_components(build_graph(4, [(0, 1), (2, 3)]), 1)


def test_count_one_iff_threshold():
    for g in family(6):
        for mode in ("literal", "corrected"):
            for k in range(1, g.n + 1):
                assert (count_components(g, k, mode).value == 1) == (k >= kappa_star(g, mode))


def test_matches_oracle_n5():
    for g in family(5):
        for k in range(1, g.n + 1):
            assert count_components(g, k).value == table(g, k).components

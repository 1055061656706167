import functools
import itertools
import math

import pytest

from slidingblocks.oracle import connected_graphs, enumerate_components, small_family


@functools.lru_cache(maxsize=None)
def family(max_n: int = 6):
    return tuple(small_family(max_n))


@functools.lru_cache(maxsize=None)
def graphs_on(n: int):
    return tuple(connected_graphs(n))


@functools.lru_cache(maxsize=4096)
def table(g, k):
    return enumerate_components(g, k)


@functools.lru_cache(maxsize=None)
def perms(n: int):
    return tuple(itertools.permutations(range(n)))


def edge_list(g):
    return g.sorted_edges()


@pytest.fixture(scope="session")
def small_graphs():
    return family(6)

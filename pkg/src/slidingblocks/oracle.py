"""Exhaustive ground truth over the full configuration space.

Every configuration is encoded by the lexicographic rank of its placement
read as a permutation of person indices (butterflies ``0..k-1``, asocial
people after them).  Legal swaps become edges of a sparse graph whose
connected components are the components of the puzzle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Configuration, Graph, build_graph, check_compatible, people

DEFAULT_CAP = 4_000_000


class CapExceeded(RuntimeError):
    def __init__(self, states: int, cap: int):
        super().__init__(f"{states} states exceed the cap of {cap}")
        self.states = states
        self.cap = cap


@dataclass(frozen=True)
class ComponentTable:
    n: int
    k: int
    labels: np.ndarray  # component id per rank
    sizes: tuple[int, ...]

    @property
    def components(self) -> int:
        return len(self.sizes)

    def component_of(self, c: Configuration) -> int:
        return int(self.labels[rank(encode(c, self.k))])


def encode(c: Configuration, k: int | None = None) -> list[int]:
    """Person index per vertex: ``b_i -> i-1``, ``a_j -> k+j-1``."""
    k = c.k if k is None else k
    out = []
    for p in c.placement:
        i = int(p[1:])
        out.append(i - 1 if p[0] == "b" else k + i - 1)
    return out


def decode(code, k: int) -> Configuration:
    ids = people(len(code), k)
    return Configuration(tuple(ids[int(i)] for i in code))


def rank(code) -> int:
    """Lehmer rank of a permutation of ``0..n-1`` in lexicographic order."""
    n = len(code)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if code[j] < code[i])
        r += smaller * math.factorial(n - 1 - i)
    return r


def _rank_rows(perms: np.ndarray) -> np.ndarray:
    n = perms.shape[1]
    out = np.zeros(perms.shape[0], dtype=np.int64)
    for i in range(n):
        smaller = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
        out += smaller * math.factorial(n - 1 - i)
    return out


def _all_perms(n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8)


def enumerate_components(g: Graph, k: int, cap: int = DEFAULT_CAP) -> ComponentTable:
    """Label all ``n!`` configurations by component; refuses above ``cap`` states."""
    n = g.n
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    states = math.factorial(n)
    if states > cap:
        raise CapExceeded(states, cap)
    perms = _all_perms(n)  # row index == lexicographic rank
    src_all, dst_all = [], []
    for u, v in g.sorted_edges():
        legal = np.nonzero((perms[:, u] < k) | (perms[:, v] < k))[0]
        if legal.size == 0:
            continue
        swapped = perms[legal].copy()
        swapped[:, [u, v]] = swapped[:, [v, u]]
        src_all.append(legal)
        dst_all.append(_rank_rows(swapped))
    if src_all:
        src = np.concatenate(src_all)
        dst = np.concatenate(dst_all)
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    adj = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(states, states))
    _, raw = connected_components(adj, directed=False)
    # relabel by first occurrence so ids are contiguous and schedule-independent
    _, first = np.unique(raw, return_index=True)
    order = np.argsort(first)
    remap = np.empty(order.size, dtype=np.int64)
    remap[order] = np.arange(order.size)
    labels = remap[raw]
    sizes = tuple(int(s) for s in np.bincount(labels))
    return ComponentTable(n, k, labels, sizes)


def oracle_connected(
    sigma: Configuration, tau: Configuration, g: Graph, k: int | None = None, cap: int = DEFAULT_CAP,
    table: ComponentTable | None = None,
) -> bool:
    check_compatible(g, sigma, tau)
    k = sigma.k if k is None else k
    table = table or enumerate_components(g, k, cap)
    return table.component_of(sigma) == table.component_of(tau)


def min_k_connected(g: Graph, cap: int = DEFAULT_CAP) -> int | float:
    """Smallest k with a single component, scanning upward; inf if none."""
    for k in range(1, g.n + 1):
        if enumerate_components(g, k, cap).components == 1:
            return k
    return math.inf if g.n else 0


# ---------------------------------------------------------------------------
# the small-graph family


def _canonical_masks(n: int, masks: np.ndarray) -> np.ndarray:
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    # weight[e, p] = bit assigned to edge e after relabelling by p
    weight = np.zeros((len(pairs), len(perms)), dtype=np.int64)
    for j, p in enumerate(perms):
        for i, (a, b) in enumerate(pairs):
            x, y = sorted((p[a], p[b]))
            weight[i, j] = 1 << index[(x, y)]
    bits = ((masks[:, None] >> np.arange(len(pairs))) & 1).astype(np.int64)
    out = np.empty(masks.size, dtype=np.int64)
    step = 2048
    for s in range(0, masks.size, step):
        out[s:s + step] = (bits[s:s + step] @ weight).min(axis=1)
    return out


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on ``n`` vertices, one per isomorphism class.

    Edge subsets are filtered for connectivity, then deduplicated by the
    minimum relabelled adjacency bitmask over all ``n!`` relabellings.
    """
    if n <= 1:
        return [build_graph(n, [])]
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    keep = []
    for mask in range(1 << m):
        if bin(mask).count("1") < n - 1:
            continue
        reach = 1
        frontier = 1
        adj = [0] * n
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        while frontier:
            nxt = 0
            for v in range(n):
                if frontier >> v & 1:
                    nxt |= adj[v]
            frontier = nxt & ~reach
            reach |= nxt
        if reach == (1 << n) - 1:
            keep.append(mask)
    canon = _canonical_masks(n, np.array(keep, dtype=np.int64))
    out = []
    for c in sorted(set(int(x) for x in canon)):
        out.append(build_graph(n, [pairs[i] for i in range(m) if c >> i & 1]))
    return out


def small_family(max_n: int = 6) -> list[Graph]:
    return [g for n in range(1, max_n + 1) for g in connected_graphs(n)]

"""Block-cut trees, hallways, structural classes and the connectivity threshold."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Literal

from .graph import Graph

Mode = Literal["literal", "corrected"]
INFINITY = math.inf


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    # (block index, cut vertex) incidences
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def libraries(self) -> list[int]:
        """Indices of blocks with at least three vertices."""
        return [i for i, b in enumerate(self.blocks) if len(b) >= 3]

    def leaf_blocks(self) -> list[int]:
        deg = [0] * len(self.blocks)
        for b, _ in self.tree_edges:
            deg[b] += 1
        return [i for i, d in enumerate(deg) if d == 1]


@dataclass(frozen=True)
class Hallway:
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class GraphClass:
    connected: bool
    bipartite: bool
    is_cycle: bool
    is_theta0: bool
    biconnected: bool

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "bipartite": self.bipartite,
            "is_cycle": self.is_cycle,
            "is_theta0": self.is_theta0,
            "biconnected": self.biconnected,
        }


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    dq.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> list[int] | None:
    """Two-colouring of ``g``, or ``None`` if it has an odd cycle."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in g.adjacency[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    dq.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(len(a) == 2 for a in g.adjacency) and is_connected(g)


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Biconnected blocks via the iterative lowpoint algorithm.

    Blocks are sorted tuples ordered by their smallest vertex; an isolated
    vertex forms a block on its own.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut: set[int] = set()
    raw_blocks: list[tuple[int, ...]] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not g.adjacency[root]:
            disc[root] = timer
            timer += 1
            raw_blocks.append((root,))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    estack.append((u, w))
                    stack.append((w, u, iter(g.adjacency[w])))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    estack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    if parent != root:
                        cut.add(parent)
                    verts: set[int] = set()
                    while True:
                        a, b = estack.pop()
                        verts.update((a, b))
                        if (a, b) == (parent, u):
                            break
                    raw_blocks.append(tuple(sorted(verts)))
        if root_children >= 2:
            cut.add(root)
    blocks = tuple(sorted(raw_blocks))
    tree_edges = tuple(
        (i, v) for i, b in enumerate(blocks) for v in b if v in cut
    )
    return BlockCutTree(blocks, frozenset(cut), tree_edges)


def cut_vertices(g: Graph) -> frozenset[int]:
    return block_cut_tree(g).cut_vertices


def hallways(g: Graph, bct: BlockCutTree | None = None) -> list[Hallway]:
    """All maximal hallways of ``g``.

    A hallway is a run of cut vertices joined by bridges whose inner vertices
    have degree 2; a cut vertex on no such run is a hallway of order 1.
    """
    bct = bct or block_cut_tree(g)
    cut = bct.cut_vertices
    bridges = {b for b in bct.blocks if len(b) == 2}
    link: dict[int, list[int]] = {}
    for u, v in bridges:
        if u in cut and v in cut:
            link.setdefault(u, []).append(v)
            link.setdefault(v, []).append(u)

    def inner(v: int) -> bool:
        return g.degree(v) == 2 and len(link.get(v, ())) == 2

    used: set[tuple[int, int]] = set()
    out: list[Hallway] = []
    for u, v in sorted(bridges):
        if (u, v) in used or u not in link or v not in link.get(u, ()):
            continue
        # walk outward from the bridge in both directions
        seq = [u, v]
        used.add((u, v))
        for forward in (True, False):
            while True:
                end, prev = (seq[-1], seq[-2]) if forward else (seq[0], seq[1])
                if not inner(end):
                    break
                nxt = link[end][0] if link[end][1] == prev else link[end][1]
                used.add((min(end, nxt), max(end, nxt)))
                if forward:
                    seq.append(nxt)
                else:
                    seq.insert(0, nxt)
        if seq[0] > seq[-1]:
            seq.reverse()
        out.append(Hallway(tuple(seq)))
    covered = {v for h in out for v in h.vertices}
    out += [Hallway((v,)) for v in sorted(cut - covered)]
    out.sort(key=lambda h: h.vertices)
    return out


def kappa(g: Graph) -> int:
    """Largest hallway order, 0 when there are no cut vertices."""
    return max((h.order for h in hallways(g)), default=0)


def theta0_labelling(g: Graph) -> list[int] | None:
    """Isomorphism onto the canonical theta0 board as ``canon[v]``, if one exists."""
    if g.n != 7 or g.m != 8:
        return None
    hubs = [v for v in range(7) if g.degree(v) == 3]
    if len(hubs) != 2 or any(g.degree(v) != 2 for v in range(7) if v not in hubs):
        return None
    s, t = hubs
    routes = []
    for first in g.adjacency[s]:
        route, prev, cur = [], s, first
        while cur != t:
            if cur == s or g.degree(cur) != 2:
                return None
            route.append(cur)
            prev, cur = cur, (g.adjacency[cur][0] if g.adjacency[cur][1] == prev else g.adjacency[cur][1])
        routes.append(route)
    routes.sort(key=len)
    if [len(r) for r in routes] != [1, 2, 2]:
        return None
    canon = [0] * 7
    canon[s], canon[t] = 0, 3
    canon[routes[0][0]] = 6
    canon[routes[1][0]], canon[routes[1][1]] = 1, 2
    canon[routes[2][0]], canon[routes[2][1]] = 5, 4
    return canon


def is_theta0(g: Graph) -> bool:
    return theta0_labelling(g) is not None


def classify(g: Graph) -> GraphClass:
    connected = is_connected(g)
    biconnected = connected and not block_cut_tree(g).cut_vertices
    return GraphClass(
        connected=connected,
        bipartite=bipartition(g) is not None,
        is_cycle=is_cycle_graph(g),
        is_theta0=is_theta0(g),
        biconnected=biconnected,
    )


def kappa_star(g: Graph, mode: Mode = "corrected") -> float | int:
    """Fewest butterflies that make every configuration reachable from every other.

    ``mode="literal"`` uses ``n - 1`` for cycles; ``"corrected"`` uses
    ``max(1, n - 2)``, since two asocial people on a cycle can always be
    exchanged.  Returns ``INFINITY`` for disconnected boards.
    """
    if mode not in ("literal", "corrected"):
        raise ValueError(f"unknown mode {mode!r}")
    if not is_connected(g):
        return INFINITY
    if g.n <= 2:
        return 1
    if is_cycle_graph(g):
        return g.n - 1 if mode == "literal" else max(1, g.n - 2)
    bct = block_cut_tree(g)
    if not bct.cut_vertices:
        if bipartition(g) is not None or is_theta0(g):
            return 2
        return 1
    return kappa(g) + 1

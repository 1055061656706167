"""Social circles: maximal connected induced subgraphs with no dark hallway.

Hallways are measured inside the candidate subgraph.  With one butterfly
every cut vertex is dark, so the circles are exactly the blocks.  With
``k >= 2`` only bridge runs of order ``>= k`` are dark, and the circles are

* each region left after cutting the dark hallways, extended ``k - 1``
  vertices into every dark hallway leaving it, and
* every window of ``k + 1`` consecutive vertices along a dark hallway.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .decomposition import block_cut_tree, hallways, is_connected
from .graph import Graph


@dataclass(frozen=True)
class SocialCircle:
    vertices: tuple[int, ...]
    anchors: tuple[int, ...]

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "anchors": list(self.anchors)}


def is_well_lit(g: Graph, vertices, k: int) -> bool:
    sub, _ = g.induced(vertices)
    if not is_connected(sub):
        return False
    return all(h.order < k for h in hallways(sub))


def choose_anchors(vertices, k: int) -> tuple[int, ...]:
    vs = sorted(vertices)
    if len(vs) < k:
        raise RuntimeError(f"circle of {len(vs)} vertices cannot park {k} butterflies")
    return tuple(vs[:k])


def _circle_sets(g: Graph, k: int) -> list[frozenset[int]]:
    bct = block_cut_tree(g)
    if k == 1:
        return [frozenset(b) for b in bct.blocks]
    dark = [h.vertices for h in hallways(g, bct) if h.order >= k]
    if not dark:
        return [frozenset(range(g.n))]
    removed_vertices: set[int] = set()
    removed_edges: set[tuple[int, int]] = set()
    for h in dark:
        removed_vertices.update(h[1:-1])
        for a, b in zip(h, h[1:]):
            removed_edges.add((min(a, b), max(a, b)))
    region = [-1] * g.n
    regions: list[set[int]] = []
    for s in range(g.n):
        if s in removed_vertices or region[s] >= 0:
            continue
        rid = len(regions)
        region[s] = rid
        members = {s}
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in g.adjacency[u]:
                if w in removed_vertices or region[w] >= 0:
                    continue
                if (min(u, w), max(u, w)) in removed_edges:
                    continue
                region[w] = rid
                members.add(w)
                dq.append(w)
        regions.append(members)
    out = [set(r) for r in regions]
    for h in dark:
        out[region[h[0]]].update(h[:k])
        out[region[h[-1]]].update(h[-k:])
        for i in range(len(h) - k):
            out.append(set(h[i:i + k + 1]))
    sets = {frozenset(s) for s in out}
    return [s for s in sets if not any(s < t for t in sets)]


def social_circles(g: Graph, k: int) -> list[SocialCircle]:
    """Circles of a connected board, sorted by their vertex tuples."""
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    if not is_connected(g):
        raise ValueError("social circles are defined for connected boards")
    sets = sorted(tuple(sorted(s)) for s in _circle_sets(g, k))
    return [SocialCircle(s, choose_anchors(s, k)) for s in sets]

"""Butterfly routing on a mutable placement.

Walking a butterfly along a path is always legal: each step swaps it with
whoever stands on the next vertex, shifting that person back by one.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable

from .graph import Graph, is_butterfly


def shortest_path(g: Graph, src: int, dst: int, allowed: Callable[[int], bool] | None = None) -> list[int] | None:
    if src == dst:
        return [src]
    parent = {src: src}
    dq = deque([src])
    while dq:
        u = dq.popleft()
        for w in g.adjacency[u]:
            if w in parent or (allowed is not None and not allowed(w)):
                continue
            parent[w] = u
            if w == dst:
                out = [w]
                while out[-1] != src:
                    out.append(parent[out[-1]])
                return out[::-1]
            dq.append(w)
    return None


def walk(cells: list[str], path: list[int], log: list[tuple[int, int]]) -> None:
    """Move the person on ``path[0]`` to ``path[-1]`` step by step."""
    for a, b in zip(path, path[1:]):
        if not (is_butterfly(cells[a]) or is_butterfly(cells[b])):
            raise AssertionError(f"walk through strangers at ({a}, {b})")
        cells[a], cells[b] = cells[b], cells[a]
        log.append((a, b))


def park(g: Graph, cells: list[str], anchors: Iterable[int], log: list[tuple[int, int]],
         allowed: set[int] | None = None) -> None:
    """Move butterflies until every anchor holds one.

    The unfilled anchor nearest to a free butterfly is served first (ties by
    vertex id).  If the route crosses an anchor that is already filled, that
    anchor's butterfly is sent instead and the crossed anchor is served next,
    which keeps every route free of butterflies except at its start.
    """
    anchors = set(anchors)
    scope = allowed if allowed is not None else range(g.n)
    while True:
        bad = [s for s in anchors if not is_butterfly(cells[s])]
        if not bad:
            return
        dist = {}
        parent = {}
        dq = deque()
        for v in scope:
            if is_butterfly(cells[v]) and v not in anchors:
                dist[v] = 0
                dq.append(v)
        while dq:
            u = dq.popleft()
            for w in g.adjacency[u]:
                if w in dist or (allowed is not None and w not in allowed):
                    continue
                dist[w] = dist[u] + 1
                parent[w] = u
                dq.append(w)
        reachable = [s for s in bad if s in dist]
        if not reachable:
            raise RuntimeError("not enough butterflies to fill the anchors")
        s = min(reachable, key=lambda v: (dist[v], v))
        route = [s]
        while dist[route[-1]] > 0:
            route.append(parent[route[-1]])
        # route[0] = anchor, route[-1] = free butterfly
        handoff = next((j for j in range(1, len(route) - 1)
                        if route[j] in anchors and is_butterfly(cells[route[j]])), None)
        if handoff is None:
            walk(cells, route[::-1], log)
        else:
            walk(cells, route[handoff::-1], log)


def walk_butterfly_to(g: Graph, cells: list[str], target: int, log: list[tuple[int, int]],
                      allowed: set[int], avoid: set[int] = frozenset()) -> None:
    """Bring the nearest butterfly (inside ``allowed - avoid``) onto ``target``."""
    if is_butterfly(cells[target]):
        return
    ok = lambda v: v in allowed and v not in avoid
    parent = {target: target}
    dq = deque([target])
    found = None
    while dq and found is None:
        u = dq.popleft()
        for w in g.adjacency[u]:
            if w in parent or not ok(w):
                continue
            parent[w] = u
            if is_butterfly(cells[w]):
                found = w
                break
            dq.append(w)
    if found is None:
        raise RuntimeError(f"no butterfly can reach vertex {target}")
    route = [found]
    while route[-1] != target:
        route.append(parent[route[-1]])
    walk(cells, route, log)

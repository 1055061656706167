"""Bounded bidirectional search with butterflies treated as interchangeable."""

from __future__ import annotations

from ..graph import Graph, is_butterfly

DEFAULT_SEARCH_CAP = 1_000_000
BLANK = "b"


class SearchCapExceeded(RuntimeError):
    def __init__(self, library: tuple[int, ...], bound: int):
        super().__init__(f"search on {len(library)} vertices exceeded {bound} states")
        self.library = library
        self.bound = bound


def tokens(cells) -> tuple[str, ...]:
    return tuple(BLANK if is_butterfly(p) else p for p in cells)


def _neighbours(edges, state):
    for u, v in edges:
        a, b = state[u], state[v]
        if (a == BLANK) == (b == BLANK):
            # two butterflies (no-op) or two strangers (illegal)
            continue
        s = list(state)
        s[u], s[v] = b, a
        yield (u, v), tuple(s)


def bidirectional_search(g: Graph, start, goal, cap: int = DEFAULT_SEARCH_CAP,
                         library: tuple[int, ...] | None = None) -> list[tuple[int, int]]:
    """Legal swaps turning ``start`` into ``goal`` (butterflies unlabeled).

    Raises ``SearchCapExceeded`` once more than ``cap`` states are stored, and
    ``ValueError`` if the two states are in different components.
    """
    start, goal = tokens(start), tokens(goal)
    if start == goal:
        return []
    edges = g.sorted_edges()
    library = tuple(range(g.n)) if library is None else library
    # parent maps: state -> (previous state, move)
    fwd = {start: None}
    bwd = {goal: None}
    fwd_frontier, bwd_frontier = [start], [goal]
    meet = None
    while fwd_frontier and bwd_frontier and meet is None:
        grow_fwd = len(fwd_frontier) <= len(bwd_frontier)
        frontier, seen, other = (fwd_frontier, fwd, bwd) if grow_fwd else (bwd_frontier, bwd, fwd)
        nxt = []
        for s in frontier:
            for move, t in _neighbours(edges, s):
                if t in seen:
                    continue
                seen[t] = (s, move)
                if t in other:
                    meet = t
                    break
                nxt.append(t)
            if meet is not None:
                break
        if len(fwd) + len(bwd) > cap:
            raise SearchCapExceeded(library, cap)
        if grow_fwd:
            fwd_frontier = nxt
        else:
            bwd_frontier = nxt
    if meet is None:
        raise ValueError("states are not connected")
    path = []
    s = meet
    while fwd[s] is not None:
        s, move = fwd[s]
        path.append(move)
    path.reverse()
    s = meet
    while bwd[s] is not None:
        s, move = bwd[s]
        path.append(move)
    return path

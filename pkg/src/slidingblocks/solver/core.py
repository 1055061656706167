"""Recursive construction of move sequences.

A board is solved by peeling off a leaf block ``L`` that meets the rest ``A``
in the cut vertex ``V``:

1. both ends are *balanced*: butterflies are pulled out of ``L - V`` into
   ``A`` and two of them parked on ``V`` and on a neighbour ``P`` of ``V``;
2. asocial people are *traded* across ``V`` until ``L - V`` holds the same
   people at both ends, each trade using a snake tongue that straddles ``V``;
3. ``L`` plus the pendant ``P`` is rearranged (a balloon), then ``A`` is
   solved recursively, and the target's balancing moves are undone.

Cells are token lists: every butterfly is the token ``"b"``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from ..decomposition import block_cut_tree, is_cycle_graph, kappa_star
from ..graph import Graph
from ..routing import park, shortest_path, walk
from .macros import cycle_pack, ring_order, snake_exchange_cells, stopwatch_normal, stopwatch_parts
from .search import BLANK, DEFAULT_SEARCH_CAP, SearchCapExceeded, bidirectional_search


@dataclass
class Context:
    cap: int = DEFAULT_SEARCH_CAP
    macros: Counter | None = None

    def note(self, what: str) -> None:
        if self.macros is None:
            self.macros = Counter()
        self.macros[what] += 1


@dataclass(frozen=True)
class LeafPlan:
    leaf: tuple[int, ...]
    cut: int
    rest: tuple[int, ...]
    pendant: int  # neighbour of the cut vertex inside the rest
    back: tuple[int, ...] | None  # snake tongue: free end in the leaf ... branch vertex
    tips: tuple[int, int] | None
    rest_region: tuple[int, ...]  # rest, plus the tongue's back when the rest is a short-handed cycle

    @property
    def overflow(self) -> bool:
        return self.back is None


def _key(p: str):
    return (p[0], int(p[1:])) if p != BLANK else ("", -1)


def solve_sub(g: Graph, cells: list[str], target: list[str], region, log: list, ctx: Context,
              glob: list[int]) -> None:
    """Solve inside ``region`` only; other cells are untouched."""
    region = sorted(region)
    if all(cells[v] == target[v] for v in region):
        return
    sub, labels = g.induced(region)
    lc = [cells[v] for v in labels]
    lt = [target[v] for v in labels]
    llog: list[tuple[int, int]] = []
    solve_local(sub, lc, lt, llog, ctx, [glob[v] for v in labels])
    for i, v in enumerate(labels):
        cells[v] = lc[i]
    log.extend((labels[u], labels[w]) for u, w in llog)


def _via_normal(cells, target, log, normal) -> None:
    there: list = []
    normal(cells, there)
    goal = list(target)
    back: list = []
    normal(goal, back)
    if cells != goal:
        raise AssertionError("normal forms differ; the ends are not connected")
    log.extend(there)
    for u, v in reversed(back):
        cells[u], cells[v] = cells[v], cells[u]
        log.append((u, v))


def _search(g, cells, target, log, ctx, glob) -> None:
    ctx.note("search")
    path = bidirectional_search(g, cells, target, ctx.cap, tuple(glob))
    for u, v in path:
        cells[u], cells[v] = cells[v], cells[u]
    log.extend(path)


def solve_local(g: Graph, cells: list[str], target: list[str], log: list, ctx: Context,
                glob: list[int]) -> None:
    if cells == target:
        return
    if Counter(cells) != Counter(target):
        raise ValueError("the two ends hold different people")
    asocial = [v for v in range(g.n) if cells[v] != BLANK]
    kb = g.n - len(asocial)
    if kb == 0:
        raise ValueError("no butterfly to move with")
    if len(asocial) == 1:
        ctx.note("single")
        z = cells[asocial[0]]
        walk(cells, shortest_path(g, asocial[0], target.index(z)), log)
        return
    if is_cycle_graph(g):
        ctx.note("cycle")
        ring = ring_order(g, range(g.n), 0)
        _via_normal(cells, target, log, lambda c, lg: cycle_pack(c, ring, lg))
        return
    sw = stopwatch_parts(g)
    if sw is not None and kb >= 2:
        ctx.note("stopwatch")
        ring, crown = sw
        _via_normal(cells, target, log, lambda c, lg: stopwatch_normal(g, c, ring, crown, lg))
        return
    bct = block_cut_tree(g)
    if not bct.cut_vertices or kb < kappa_star(g, "corrected"):
        _search(g, cells, target, log, ctx, glob)
        return
    plan = choose_leaf(g, kb, bct)
    if plan is None:
        _search(g, cells, target, log, ctx, glob)
        return
    ctx.note("induction")
    induct(g, cells, target, log, ctx, glob, plan)


# ---------------------------------------------------------------------------
# leaf choice and snake tongues


def find_snake_tongue(g: Graph, rest, cut: int, k: int, leaf):
    """A snake tongue with its back edge in ``leaf`` and the rest inside ``rest``.

    Breadth-first from ``cut`` through ``rest`` for a vertex with two
    neighbours off the path, at distance at most ``k - 2`` so that the
    tongue's ``m - 2`` butterflies fit.  Returns ``(back, tips)`` or ``None``.
    """
    inside = set(rest)
    leaf_nbrs = [w for w in g.adjacency[cut] if w in set(leaf) and w != cut]
    if not leaf_nbrs or k < 2:
        return None
    parent = {cut: None}
    dist = {cut: 0}
    dq = deque([cut])
    while dq:
        u = dq.popleft()
        if dist[u] > k - 2:
            break
        off = [w for w in g.adjacency[u] if w in inside and w != parent[u]]
        if len(off) >= 2:
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            back = (min(leaf_nbrs),) + tuple(path[::-1])
            return back, (off[0], off[1])
        for w in off:
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                dq.append(w)
    return None


def choose_leaf(g: Graph, kb: int, bct=None) -> LeafPlan | None:
    """First leaf block (by smallest vertex) the induction can peel off."""
    bct = bct or block_cut_tree(g)
    for bi in bct.leaf_blocks():
        leaf = bct.blocks[bi]
        cut = next(v for v in leaf if v in bct.cut_vertices)
        rest = tuple(v for v in range(g.n) if v not in leaf or v == cut)
        if len(rest) < 3:
            continue
        rest_set = set(rest)
        if kb >= len(rest):
            # the rest ends up full of butterflies; no trades needed
            pendant = min(w for w in g.adjacency[cut] if w in rest_set)
            return LeafPlan(leaf, cut, rest, pendant, None, None, rest)
        sub, _ = g.induced(rest)
        short_cycle = False
        if kappa_star(sub, "corrected") > kb:
            if not (is_cycle_graph(sub) and len(leaf) >= 3):
                continue
            short_cycle = True
        tongue = find_snake_tongue(g, rest, cut, kb, leaf)
        if tongue is None:
            continue
        back, tips = tongue
        pendant = back[2] if len(back) > 2 else tips[1]
        region = tuple(sorted(rest_set | {back[0]})) if short_cycle else rest
        return LeafPlan(leaf, cut, rest, pendant, back, tips, region)
    return None


# ---------------------------------------------------------------------------
# the induction step


def _nearest(g: Graph, src: int, allowed: set[int], pred) -> list[int] | None:
    """Path from ``src`` to the nearest vertex satisfying ``pred``, expanding only non-matching vertices."""
    parent = {src: None}
    dq = deque([src])
    while dq:
        u = dq.popleft()
        for w in g.adjacency[u]:
            if w in parent or w not in allowed:
                continue
            parent[w] = u
            if pred(w):
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            dq.append(w)
    return None


def balance(g: Graph, cells: list[str], plan: LeafPlan, log: list) -> None:
    """Move butterflies out of the leaf and park two on the cut vertex and the pendant."""
    cut = plan.cut
    leaf_side = set(plan.leaf) - {cut}
    rest = set(plan.rest)
    while any(cells[v] == BLANK for v in leaf_side) and any(cells[v] != BLANK for v in rest):
        if cells[cut] == BLANK:
            path = _nearest(g, cut, rest, lambda v: cells[v] != BLANK)
            walk(cells, path[::-1], log)
        path = _nearest(g, cut, leaf_side, lambda v: cells[v] == BLANK)
        walk(cells, path[::-1], log)
    park(g, cells, (cut, plan.pendant), log, allowed=rest)


def _target_with(cells: list[str], region, fixed: dict[int, str]) -> list[str]:
    """Cells with ``fixed`` imposed on ``region``; everyone else stays put where possible."""
    pool = Counter(cells[v] for v in region)
    for p in fixed.values():
        pool[p] -= 1
        if pool[p] < 0:
            raise AssertionError(f"{p} is not available in the region")
    out = list(cells)
    for v, p in fixed.items():
        out[v] = p
    loose = []
    for v in sorted(region):
        if v in fixed:
            continue
        if pool[cells[v]] > 0:
            pool[cells[v]] -= 1
        else:
            loose.append(v)
    left = sorted(pool.elements(), key=_key)
    for v, p in zip(loose, left):
        out[v] = p
    return out


def trade(g: Graph, cells: list[str], plan: LeafPlan, x: str, y: str, log: list, ctx: Context,
          glob: list[int]) -> None:
    """Swap asocial ``x`` (rest side) with asocial ``y`` (leaf side) in a balanced configuration."""
    back, tips = plan.back, plan.tips
    if back is None:
        raise ValueError("no snake tongue: the rest is full of butterflies")
    where = {p: v for v, p in enumerate(cells)}
    rest = set(plan.rest)
    if where.get(x) not in rest or where.get(x) == plan.cut:
        raise ValueError(f"{x} is not on the rest side")
    if where.get(y) in rest or y not in where:
        raise ValueError(f"{y} is not on the leaf side")
    ctx.note("trade")
    # x onto a tip, butterflies on the rest of the tongue
    fixed = {tips[0]: x}
    fixed.update({v: BLANK for v in back[1:] + (tips[1],)})
    solve_sub(g, cells, _target_with(cells, plan.rest_region, fixed), plan.rest_region, log, ctx, glob)
    # y onto the back of the tongue, inside the balloon leaf + pendant
    balloon = set(plan.leaf) | {plan.pendant}
    fixed = {back[0]: y, plan.cut: BLANK, plan.pendant: BLANK}
    solve_sub(g, cells, _target_with(cells, balloon, fixed), balloon, log, ctx, glob)
    ctx.note("snake")
    snake_exchange_cells(cells, list(back), tips, log)


def induct(g: Graph, cells: list[str], target: list[str], log: list, ctx: Context, glob: list[int],
           plan: LeafPlan) -> None:
    balance(g, cells, plan, log)
    goal = list(target)
    undo: list[tuple[int, int]] = []
    balance(g, goal, plan, undo)
    leaf_side = [v for v in plan.leaf if v != plan.cut]
    if not plan.overflow:
        have = {cells[v] for v in leaf_side}
        want = {goal[v] for v in leaf_side}
        incoming = sorted(want - have, key=_key)
        outgoing = sorted(have - want, key=_key)
        for x, y in zip(incoming, outgoing):
            trade(g, cells, plan, x, y, log, ctx, glob)
    ctx.note("balloon")
    solve_sub(g, cells, goal, set(plan.leaf) | {plan.pendant}, log, ctx, glob)
    if not plan.overflow:
        solve_sub(g, cells, goal, plan.rest_region, log, ctx, glob)
    if cells != goal:
        raise AssertionError("induction step missed its balanced target")
    for u, v in reversed(undo):
        cells[u], cells[v] = cells[v], cells[u]
        log.append((u, v))


__all__ = [
    "Context", "LeafPlan", "SearchCapExceeded", "balance", "choose_leaf", "find_snake_tongue",
    "induct", "solve_local", "solve_sub", "trade",
]

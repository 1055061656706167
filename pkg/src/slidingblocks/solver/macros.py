"""Constructive moves on the small boards used by the induction.

Every macro works on a mutable list of cells and appends the swaps it makes
to ``log``.  Butterflies are interchangeable here; the solver fixes their
labels at the very end.  Where a macro only brings a board into a normal
form, connecting two configurations is ``normal(sigma) + reverse(normal(tau))``:
legality of a swap depends only on which cells hold butterflies, so the
reversed sequence is legal from either normal form.
"""

from __future__ import annotations

from ..graph import Graph, is_butterfly
from ..routing import walk, walk_butterfly_to


def ring_order(g: Graph, vertices, start: int) -> list[int]:
    """Vertices of a cycle in order from ``start``, first towards the smaller neighbour."""
    inside = set(vertices)
    nbrs = [w for w in g.adjacency[start] if w in inside]
    order = [start, min(nbrs)]
    while len(order) < len(inside):
        u, prev = order[-1], order[-2]
        nxt = [w for w in g.adjacency[u] if w in inside and w != prev]
        order.append(nxt[0])
    return order


# ---------------------------------------------------------------------------
# cycles


def cycle_pack(cells: list[str], ring: list[int], log: list, lead: str | None = None, at: int = 0) -> None:
    """Pack the asocial people of a ring into a block.

    The block starts with ``lead`` (default: smallest id) on ``ring[at]`` and
    continues in ring order.  Needs at least one butterfly on the ring.
    """
    c = len(ring)
    pos = [i for i in range(c) if not is_butterfly(cells[ring[i]])]
    a = len(pos)
    if a == 0 or a == c:
        return
    if lead is None:
        lead = min((cells[ring[i]] for i in pos), key=_key)
    s = next(i for i in pos if cells[ring[i]] == lead)
    # pull the rest in behind the lead
    for j in range(1, a):
        want = (s + j) % c
        cur = want
        while is_butterfly(cells[ring[cur]]):
            cur = (cur + 1) % c
        path = [ring[(cur - t) % c] for t in range((cur - want) % c + 1)]
        walk(cells, path, log)
    # rotate the block onto ``at``
    back = (s - at) % c
    fwd = (at - s) % c
    if back <= fwd:
        for _ in range(back):
            # butterfly just behind the block walks through it
            start = (s - 1) % c
            walk(cells, [ring[(start + t) % c] for t in range(a + 1)], log)
            s = (s - 1) % c
    else:
        for _ in range(fwd):
            start = (s + a) % c
            walk(cells, [ring[(start - t) % c] for t in range(a + 1)], log)
            s = (s + 1) % c


def _key(p: str):
    return (p[0], int(p[1:]))


# ---------------------------------------------------------------------------
# stopwatches


def stopwatch_parts(g: Graph, vertices=None):
    """``(dial ring from the pivot, crown)`` for a cycle plus one pendant, else ``None``."""
    vs = sorted(range(g.n) if vertices is None else vertices)
    inside = set(vs)
    deg = {v: sum(1 for w in g.adjacency[v] if w in inside) for v in vs}
    if len(vs) < 4:
        return None
    leaves = [v for v in vs if deg[v] == 1]
    if len(leaves) != 1:
        return None
    crown = leaves[0]
    pivot = next(w for w in g.adjacency[crown] if w in inside)
    if deg[pivot] != 3 or any(deg[v] != 2 for v in vs if v not in (crown, pivot)):
        return None
    dial = [v for v in vs if v != crown]
    ring = ring_order(g, dial, pivot)
    if len(ring) != len(dial) or pivot not in [w for w in g.adjacency[ring[-1]]]:
        return None
    return ring, crown


def tick(cells: list[str], ring: list[int], log: list, forward: bool = True) -> None:
    """Shift the whole dial by one step using a dial butterfly."""
    c = len(ring)
    i = next((i for i in range(c) if is_butterfly(cells[ring[i]])), None)
    if i is None:
        raise ValueError("ticking needs a butterfly on the dial")
    step = 1 if forward else -1
    walk(cells, [ring[(i + step * t) % c] for t in range(c)], log)


def _tick_until(cells, ring, log, pred) -> None:
    c = len(ring)
    for _ in range(c):
        if pred():
            return
        tick(cells, ring, log)
    if not pred():
        raise AssertionError("dial never reached the wanted rotation")


def stopwatch_normal(g: Graph, cells: list[str], ring: list[int], crown: int, log: list) -> None:
    """Bring a stopwatch to its normal form by insertion sort on the dial.

    Normal form: a butterfly on the crown, the asocial people sorted by id in
    one block starting at the pivot.  Needs two butterflies.
    """
    pivot = ring[0]
    c = len(ring)
    region = set(ring) | {crown}
    if sum(1 for v in region if is_butterfly(cells[v])) < 2:
        raise ValueError("a stopwatch needs two butterflies")
    if not is_butterfly(cells[crown]):
        walk_butterfly_to(g, cells, pivot, log, region, avoid={crown})
        walk(cells, [pivot, crown], log)
    order = sorted((cells[v] for v in ring if not is_butterfly(cells[v])), key=_key)

    def where(p):
        return next(i for i in range(c) if cells[ring[i]] == p)

    for j in range(1, len(order)):
        z, u = order[j], order[j - 1]
        # already directly after its predecessor?
        seq = [cells[v] for v in ring if not is_butterfly(cells[v])]
        if seq[(seq.index(u) + 1) % len(seq)] == z:
            continue
        # store z in the crown
        _tick_until(cells, ring, log, lambda: cells[pivot] == z)
        walk(cells, [crown, pivot], log)
        # open a gap right after u
        pu = where(u)
        if not is_butterfly(cells[ring[(pu + 1) % c]]):
            back = next(t for t in range(1, c) if is_butterfly(cells[ring[(pu - t) % c]]))
            walk(cells, [ring[(pu - back + t) % c] for t in range(back + 1)], log)
            pu = where(u)
        _tick_until(cells, ring, log, lambda: ring[(where(u) + 1) % c] == pivot)
        # insert z back on the pivot
        walk(cells, [pivot, crown], log)
    cycle_pack(cells, ring, log)


# ---------------------------------------------------------------------------
# snake tongues


def snake_parts(g: Graph, vertices=None):
    """``(back, tips)`` of a snake tongue: ``back`` runs from the free end to the
    branch vertex, ``tips`` are the two leaves on the branch vertex."""
    vs = sorted(range(g.n) if vertices is None else vertices)
    inside = set(vs)
    if len(vs) < 4:
        return None
    deg = {v: sum(1 for w in g.adjacency[v] if w in inside) for v in vs}
    if sum(deg.values()) != 2 * (len(vs) - 1):
        return None
    branch = [v for v in vs if deg[v] == 3]
    if len(branch) != 1 or any(deg[v] not in (1, 2) for v in vs if v != branch[0]):
        return None
    b = branch[0]
    leaf_nbrs = sorted(w for w in g.adjacency[b] if w in inside and deg[w] == 1)
    if len(leaf_nbrs) < 2:
        return None
    tips = tuple(leaf_nbrs[-2:])
    start = next(w for w in g.adjacency[b] if w in inside and w not in tips)
    back = [b, start]
    while deg[back[-1]] == 2:
        back.append(next(w for w in g.adjacency[back[-1]] if w in inside and w != back[-2]))
    if len(back) + 2 != len(vs):
        return None
    return back[::-1], tips


def _tree_path(back: list[int], tips, s: int, t: int) -> list[int]:
    adj: dict[int, list[int]] = {v: [] for v in list(back) + list(tips)}
    for a, b in zip(back, back[1:]):
        adj[a].append(b)
        adj[b].append(a)
    for tip in tips:
        adj[back[-1]].append(tip)
        adj[tip].append(back[-1])
    parent = {s: s}
    stack = [s]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                stack.append(w)
    out = [t]
    while out[-1] != s:
        out.append(parent[out[-1]])
    return out[::-1]


def snake_to_tips(cells: list[str], back: list[int], tips, log: list) -> None:
    """Move the two asocial people of a snake tongue onto its tips."""
    verts = list(back) + list(tips)
    who = sorted((v for v in verts if not is_butterfly(cells[v])), key=lambda v: _key(cells[v]))
    if len(who) != 2:
        raise ValueError("a snake exchange needs exactly two asocial people")
    for first, second in ((who[0], who[1]), (who[1], who[0])):
        for t1, t2 in ((tips[0], tips[1]), (tips[1], tips[0])):
            p1 = _tree_path(back, tips, first, t1)
            if second in p1:
                continue
            walk(cells, p1, log)
            walk(cells, _tree_path(back, tips, second, t2), log)
            return
    raise AssertionError("no way to reach the tips")


def tip_swap(cells: list[str], back: list[int], tips, log: list) -> None:
    b, c = back[-1], back[-2]
    t1, t2 = tips
    walk(cells, [t1, b, c], log)
    walk(cells, [t2, b, t1], log)
    walk(cells, [c, b, t2], log)


def snake_exchange_cells(cells: list[str], back: list[int], tips, log: list) -> None:
    """Exchange the two asocial people of a snake tongue, all else unchanged."""
    start = len(log)
    snake_to_tips(cells, back, tips, log)
    approach = log[start:]
    tip_swap(cells, back, tips, log)
    for u, v in reversed(approach):
        cells[u], cells[v] = cells[v], cells[u]
        log.append((u, v))

"""Deciding whether two configurations are mutually reachable.

Both configurations are brought, for each social circle in turn, to a state
with every butterfly parked on the circle's anchors.  Asocial people inside
the circle are then trapped there, so the two parked states must agree on
who is inside, and inside a circle the remaining invariants are the cyclic
order (cycles), the permutation parity (bipartite blocks, one butterfly) and
the component of the exceptional theta graph (one butterfly).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .circles import SocialCircle, social_circles
from .decomposition import bipartition, components, is_cycle_graph, theta0_labelling
from .graph import Configuration, Graph, MoveSequence, check_compatible, is_butterfly
from .routing import park


class Reason(str, enum.Enum):
    OK = "OK"
    PEOPLE_SET_MISMATCH = "PEOPLE_SET_MISMATCH"
    CYCLIC_ORDER_MISMATCH = "CYCLIC_ORDER_MISMATCH"
    PARITY_MISMATCH = "PARITY_MISMATCH"
    THETA0_COMPONENT_MISMATCH = "THETA0_COMPONENT_MISMATCH"


@dataclass(frozen=True)
class Verdict:
    connected: bool
    reason: Reason = Reason.OK
    circle: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"connected": self.connected, "reason": self.reason.value}
        if self.circle is not None:
            out["circle"] = list(self.circle)
        return out


CONNECTED = Verdict(True)


def person_key(p: str) -> tuple[str, int]:
    return (p[0], int(p[1:]))


def normalize(c: Configuration, g: Graph, circle: SocialCircle | tuple[int, ...],
              allowed: set[int] | None = None) -> tuple[Configuration, MoveSequence]:
    """Park all butterflies on the circle's anchors (or on the given vertices)."""
    anchors = circle.anchors if isinstance(circle, SocialCircle) else tuple(circle)
    cells = list(c.placement)
    log: list[tuple[int, int]] = []
    park(g, cells, anchors, log, allowed)
    return Configuration(tuple(cells)), MoveSequence(tuple(log))


# ---------------------------------------------------------------------------
# per-circle invariants


def permutation_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _distance(g: Graph, s: int, t: int) -> int:
    dist = {s: 0}
    dq = deque([s])
    while dq:
        u = dq.popleft()
        if u == t:
            return dist[u]
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                dq.append(w)
    raise ValueError("vertices are in different components")


def wilson_parity_connected(sigma: Configuration, tau: Configuration, board: Graph) -> bool:
    """Parity test for one butterfly on a biconnected bipartite non-cycle board."""
    check_compatible(board, sigma, tau)
    if sigma.k != 1:
        raise ValueError("the parity test needs exactly one butterfly")
    if board.n < 3 or is_cycle_graph(board) or bipartition(board) is None:
        raise ValueError("the parity test needs a bipartite non-cycle board on >= 3 vertices")
    where = tau.position()
    perm = [where[p] for p in sigma.placement]
    d = _distance(board, sigma.butterfly_vertices()[0], tau.butterfly_vertices()[0])
    return permutation_sign(perm) == (-1) ** d


def _theta0_swaps() -> list[tuple[int, int]]:
    return [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 3)]


@lru_cache(maxsize=1)
def theta0_table() -> dict[tuple[int, ...], int]:
    """Component id of every placement of people ``0..6`` (0 the butterfly) on theta0."""
    import itertools

    table: dict[tuple[int, ...], int] = {}
    swaps = _theta0_swaps()
    for start in itertools.permutations(range(7)):
        if start in table:
            continue
        cid = len(set(table.values()))
        table[start] = cid
        dq = deque([start])
        while dq:
            s = dq.popleft()
            for u, v in swaps:
                if s[u] != 0 and s[v] != 0:
                    continue
                t = list(s)
                t[u], t[v] = t[v], t[u]
                t = tuple(t)
                if t not in table:
                    table[t] = cid
                    dq.append(t)
    return table


def theta0_component(sigma: Configuration, board: Graph | None = None) -> int:
    """Component id (0..5) of a one-butterfly configuration on a theta0 board."""
    labelling = list(range(7)) if board is None else theta0_labelling(board)
    if labelling is None or sigma.n != 7:
        raise ValueError("board is not isomorphic to theta0")
    if sigma.k != 1:
        raise ValueError("theta0 components are tabulated for one butterfly")
    asocial = sorted((p for p in sigma.placement if not is_butterfly(p)), key=person_key)
    code = {p: i + 1 for i, p in enumerate(asocial)}
    canon = [0] * 7
    for v, p in enumerate(sigma.placement):
        canon[labelling[v]] = 0 if is_butterfly(p) else code[p]
    return theta0_table()[tuple(canon)]


def _cycle_order(sub: Graph) -> list[int]:
    order = [0]
    prev = -1
    while len(order) < sub.n:
        a, b = sub.adjacency[order[-1]]
        nxt = a if a != prev else b
        prev = order[-1]
        order.append(nxt)
    return order


def _same_rotation(xs: list[str], ys: list[str]) -> bool:
    if len(xs) != len(ys):
        return False
    if not xs:
        return True
    doubled = xs + xs
    return any(doubled[i:i + len(ys)] == ys for i in range(len(xs)))


def circle_check(sigma_i: Configuration, tau_i: Configuration, g: Graph,
                 circle: SocialCircle | tuple[int, ...], k: int) -> Verdict:
    """Compare two configurations already parked on the same anchors."""
    verts = circle.vertices if isinstance(circle, SocialCircle) else tuple(circle)
    inside_s = [sigma_i[v] for v in verts]
    inside_t = [tau_i[v] for v in verts]
    if {p for p in inside_s if not is_butterfly(p)} != {p for p in inside_t if not is_butterfly(p)}:
        return Verdict(False, Reason.PEOPLE_SET_MISMATCH, verts)
    sub, labels = g.induced(verts)
    if is_cycle_graph(sub):
        ring = [labels[i] for i in _cycle_order(sub)]
        seq_s = [sigma_i[v] for v in ring if not is_butterfly(sigma_i[v])]
        seq_t = [tau_i[v] for v in ring if not is_butterfly(tau_i[v])]
        if not _same_rotation(seq_s, seq_t):
            return Verdict(False, Reason.CYCLIC_ORDER_MISMATCH, verts)
        return CONNECTED
    if k == 1 and sub.n >= 3:
        local_s = Configuration(tuple(inside_s))
        local_t = Configuration(tuple(inside_t))
        if bipartition(sub) is not None:
            if not wilson_parity_connected(local_s, local_t, sub):
                return Verdict(False, Reason.PARITY_MISMATCH, verts)
        elif theta0_labelling(sub) is not None:
            if theta0_component(local_s, sub) != theta0_component(local_t, sub):
                return Verdict(False, Reason.THETA0_COMPONENT_MISMATCH, verts)
    return CONNECTED


def decide(sigma: Configuration, tau: Configuration, g: Graph, k: int | None = None,
           circles_by_component: dict | None = None) -> Verdict:
    """Decide whether ``tau`` can be reached from ``sigma`` by legal swaps."""
    check_compatible(g, sigma, tau)
    if k is not None and k != sigma.k:
        raise ValueError(f"k={k} but the configurations place {sigma.k} butterflies")
    for comp in components(g):
        inside = [sigma[v] for v in comp]
        if set(inside) != {tau[v] for v in comp}:
            return Verdict(False, Reason.PEOPLE_SET_MISMATCH, tuple(comp))
        kc = sum(1 for p in inside if is_butterfly(p))
        if kc == 0:
            for v in comp:
                if sigma[v] != tau[v]:
                    return Verdict(False, Reason.PEOPLE_SET_MISMATCH, (v,))
            continue
        if len(comp) == g.n:
            sub, labels = g, list(range(g.n))
        else:
            sub, labels = g.induced(comp)
        key = (tuple(comp), kc)
        if circles_by_component is not None and key in circles_by_component:
            circles = circles_by_component[key]
        else:
            circles = social_circles(sub, kc)
            if circles_by_component is not None:
                circles_by_component[key] = circles
        s_local = Configuration(tuple(sigma[v] for v in labels))
        t_local = Configuration(tuple(tau[v] for v in labels))
        for circle in circles:
            s_i, _ = normalize(s_local, sub, circle)
            t_i, _ = normalize(t_local, sub, circle)
            verdict = circle_check(s_i, t_i, sub, circle, kc)
            if not verdict.connected:
                return Verdict(False, verdict.reason, tuple(labels[v] for v in verdict.circle))
    return CONNECTED

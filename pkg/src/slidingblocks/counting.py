"""Closed-form component count from the social-circle decomposition.

With circles ``L_1..L_m`` the count is the multinomial of ``n - k`` over the
sizes ``|L_i| - k`` (how the asocial people split between circles) times a
per-circle factor ``lambda_i`` counting the components inside the circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circles import social_circles
from .decomposition import Mode, bipartition, is_connected, is_cycle_graph, is_theta0
from .graph import Graph


class StructuralError(RuntimeError):
    """The circle sizes do not add up; a count would be a guess."""


@dataclass(frozen=True)
class ComponentCount:
    value: int
    mode: str

    def __int__(self) -> int:
        return self.value


def circle_factor(sub: Graph, k: int, mode: Mode = "corrected") -> int:
    size = sub.n
    if size <= 2:
        return 1
    if is_cycle_graph(sub):
        if k >= size - 1:
            return 1
        if mode == "literal":
            return math.factorial(size) // 2
        return max(1, math.factorial(size - k - 1))
    if k == 1:
        if bipartition(sub) is not None:
            return 2
        if is_theta0(sub):
            return 6
    return 1


def count_components(g: Graph, k: int, mode: Mode = "corrected") -> ComponentCount:
    if mode not in ("literal", "corrected"):
        raise ValueError(f"unknown mode {mode!r}")
    if not is_connected(g):
        raise ValueError("component counts are given for connected boards")
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    circles = social_circles(g, k)
    parts = [len(c.vertices) - k for c in circles]
    if sum(parts) != g.n - k or any(p < 0 for p in parts):
        raise StructuralError(f"circle sizes {[len(c.vertices) for c in circles]} do not split n - k = {g.n - k}")
    value = math.factorial(g.n - k)
    for p in parts:
        value //= math.factorial(p)
    for c in circles:
        sub, _ = g.induced(c.vertices)
        value *= circle_factor(sub, k, mode)
    return ComponentCount(value, mode)

"""Boards, people, configurations and legal swaps.

A board is a simple undirected graph on vertices ``0..n-1``.  People are
either social butterflies (``"b1".."bk"``, friends with everybody) or asocial
(``"a1".."a(n-k)"``, friends with butterflies only).  A configuration places
exactly one person on every vertex.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]


class IllegalMove(ValueError):
    """A swap across a non-edge or between two asocial people."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message if index is None else f"move {index}: {message}")
        self.index = index


def is_butterfly(person: str) -> bool:
    return person.startswith("b")


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len-1``; also returns the label map."""
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return build_graph(len(labels), sub), labels

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph, dropping duplicate edges.

    Raises ``ValueError`` on loops and out-of-range endpoints.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    es: set[Edge] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        es.add(_norm(u, v))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in es:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, frozenset(es), tuple(tuple(sorted(a)) for a in adj))


def graph_from_json(data: Mapping) -> Graph:
    return build_graph(int(data["n"]), data["edges"])


# ---------------------------------------------------------------------------
# people and configurations


def people(n: int, k: int) -> tuple[str, ...]:
    """Person ids for ``k`` butterflies and ``n - k`` asocial people."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return tuple(f"b{i}" for i in range(1, k + 1)) + tuple(
        f"a{i}" for i in range(1, n - k + 1)
    )


@dataclass(frozen=True)
class Configuration:
    """``placement[v]`` is the person standing on vertex ``v``."""

    placement: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.placement)) != len(self.placement):
            raise ValueError("configuration is not a bijection")
        for p in self.placement:
            if not (p[:1] in ("a", "b") and p[1:].isdigit()):
                raise ValueError(f"bad person id {p!r}")

    @property
    def n(self) -> int:
        return len(self.placement)

    @property
    def k(self) -> int:
        return sum(1 for p in self.placement if is_butterfly(p))

    def __getitem__(self, v: int) -> str:
        return self.placement[v]

    def position(self) -> dict[str, int]:
        return {p: v for v, p in enumerate(self.placement)}

    def butterfly_vertices(self) -> list[int]:
        return [v for v, p in enumerate(self.placement) if is_butterfly(p)]

    def to_json(self) -> dict:
        return {"k": self.k, "placement": {str(v): p for v, p in enumerate(self.placement)}}


def configuration(placement: Iterable[str]) -> Configuration:
    return Configuration(tuple(placement))


def canonical_configuration(n: int, k: int) -> Configuration:
    """Butterflies on the first ``k`` vertices, asocial people in order after them."""
    return Configuration(people(n, k))


def random_configuration(n: int, k: int, rng: random.Random) -> Configuration:
    ps = list(people(n, k))
    rng.shuffle(ps)
    return Configuration(tuple(ps))


def configuration_from_json(data: Mapping) -> Configuration:
    placement = data["placement"]
    if isinstance(placement, list):
        # a plain list in vertex order is accepted too
        placement = {str(v): p for v, p in enumerate(placement)}
    n = len(placement)
    try:
        cells = [placement[str(v)] for v in range(n)]
    except KeyError as exc:
        raise ValueError(f"placement is missing vertex {exc.args[0]}") from None
    c = Configuration(tuple(cells))
    if "k" in data and int(data["k"]) != c.k:
        raise ValueError(f"declared k={data['k']} but {c.k} butterflies are placed")
    return c


def check_compatible(g: Graph, *configs: Configuration) -> None:
    """All configurations live on ``g`` and use the same people."""
    universe = None
    for c in configs:
        if c.n != g.n:
            raise ValueError(f"configuration has {c.n} cells, board has {g.n} vertices")
        s = frozenset(c.placement)
        if universe is None:
            universe = s
        elif s != universe:
            raise ValueError("configurations use different people")


# ---------------------------------------------------------------------------
# swaps


def apply_swap(g: Graph, c: Configuration, e: Sequence[int]) -> Configuration:
    u, v = int(e[0]), int(e[1])
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise IllegalMove(f"({u}, {v}) is not an edge of the board")
    cells = c.placement
    if not (is_butterfly(cells[u]) or is_butterfly(cells[v])):
        raise IllegalMove(f"{cells[u]} and {cells[v]} are strangers")
    out = list(cells)
    out[u], out[v] = out[v], out[u]
    return Configuration(tuple(out))


@dataclass(frozen=True)
class MoveSequence:
    moves: tuple[Edge, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def reversed(self) -> "MoveSequence":
        return MoveSequence(tuple(reversed(self.moves)))

    def to_json(self) -> list[list[int]]:
        return [list(m) for m in self.moves]


def moves(seq: Iterable[Sequence[int]]) -> MoveSequence:
    return MoveSequence(tuple((int(u), int(v)) for u, v in seq))


def replay(g: Graph, c: Configuration, ms: MoveSequence | Iterable[Sequence[int]]) -> Configuration:
    """Apply moves left to right; the first illegal one raises with its index."""
    cells = list(c.placement)
    for i, (u, v) in enumerate(ms):
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise IllegalMove(f"({u}, {v}) is not an edge of the board", i)
        if not (is_butterfly(cells[u]) or is_butterfly(cells[v])):
            raise IllegalMove(f"{cells[u]} and {cells[v]} are strangers", i)
        cells[u], cells[v] = cells[v], cells[u]
    return Configuration(tuple(cells))


def load_json(path: str):
    with open(path) as fh:
        return json.load(fh)

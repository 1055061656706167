"""Explicit, replay-checked move sequences between connected configurations."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..decomposition import components
from ..graph import Configuration, Graph, MoveSequence, check_compatible, is_butterfly, replay
from ..reachability import Verdict, decide
from ..routing import shortest_path, walk
from . import macros
from .core import Context, LeafPlan, balance, choose_leaf, find_snake_tongue, solve_local, solve_sub
from .search import BLANK, DEFAULT_SEARCH_CAP, SearchCapExceeded, bidirectional_search, tokens


@dataclass(frozen=True)
class Moves:
    moves: MoveSequence
    # how often each construction was used, for diagnostics
    stats: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {"result": "moves", "length": len(self.moves), "moves": self.moves.to_json()}


@dataclass(frozen=True)
class NotConnected:
    verdict: Verdict

    def to_json(self) -> dict:
        return {"result": "not_connected", **self.verdict.to_json()}


@dataclass(frozen=True)
class FallbackExceeded:
    library: tuple[int, ...]
    bound: int

    def to_json(self) -> dict:
        return {"result": "refused", "reason": "fallback_exceeded", "library": list(self.library),
                "bound": self.bound}


SolveOutcome = Moves | NotConnected | FallbackExceeded


@dataclass(frozen=True)
class BlockParty:
    """Who sits in the rest (``X``) and who sits in the leaf minus the cut vertex (``Y``)."""
    X: frozenset[str]
    Y: frozenset[str]

    @classmethod
    def of(cls, c: Configuration, plan: LeafPlan) -> "BlockParty":
        rest = set(plan.rest)
        return cls(frozenset(c[v] for v in rest), frozenset(c[v] for v in plan.leaf if v not in rest))

    def is_balanced(self, c: Configuration, plan: LeafPlan) -> bool:
        """Butterflies on the cut vertex and the pendant, none in ``Y`` unless ``X`` is full of them."""
        if not (is_butterfly(c[plan.cut]) and is_butterfly(c[plan.pendant])):
            return False
        x_full = all(is_butterfly(p) for p in self.X)
        return x_full or not any(is_butterfly(p) for p in self.Y)


def fix_butterflies(g: Graph, cells: list[str], target, log: list) -> None:
    """Permute butterfly labels into place without disturbing anyone else.

    Butterfly ``b`` walks to the vertex before ``b'``, the two swap, and ``b'``
    walks back, which restores everybody it shifted on the way.
    """
    for v in range(g.n):
        want = target[v]
        if not is_butterfly(want) or cells[v] == want:
            continue
        w = cells.index(want)
        path = shortest_path(g, w, v)
        walk(cells, path[:-1], log)
        walk(cells, path[-2:], log)
        walk(cells, path[-2::-1], log)


def _finish(g: Graph, sigma: Configuration, tau: Configuration, log: list, ctx: Context) -> Moves:
    cells = list(replay(g, sigma, log).placement)
    fix_butterflies(g, cells, tau.placement, log)
    ms = MoveSequence(tuple(log))
    if replay(g, sigma, ms) != tau:
        raise AssertionError("certificate does not end at the target")
    return Moves(ms, dict(ctx.macros or {}))


def solve(sigma: Configuration, tau: Configuration, g: Graph, k: int | None = None,
          cap: int = DEFAULT_SEARCH_CAP) -> SolveOutcome:
    """Moves from ``sigma`` to ``tau``, a refusal, or the reason they are not connected."""
    check_compatible(g, sigma, tau)
    if k is not None and k != sigma.k:
        raise ValueError(f"k={k} but the configurations place {sigma.k} butterflies")
    verdict = decide(sigma, tau, g)
    if not verdict.connected:
        return NotConnected(verdict)
    ctx = Context(cap=cap)
    cells = list(tokens(sigma.placement))
    goal = list(tokens(tau.placement))
    log: list[tuple[int, int]] = []
    glob = list(range(g.n))
    try:
        for comp in components(g):
            solve_sub(g, cells, goal, comp, log, ctx, glob)
    except SearchCapExceeded as e:
        return FallbackExceeded(e.library, e.bound)
    return _finish(g, sigma, tau, log, ctx)


# ---------------------------------------------------------------------------
# the macros on whole boards


def _local_solve(board: Graph, c: Configuration, target: Configuration, normal=None,
                 cap: int = DEFAULT_SEARCH_CAP) -> MoveSequence:
    check_compatible(board, c, target)
    cells = list(tokens(c.placement))
    goal = list(tokens(target.placement))
    if sorted(cells) != sorted(goal):
        raise ValueError("the two ends hold different people")
    log: list[tuple[int, int]] = []
    ctx = Context(cap=cap)
    if normal is None:
        solve_local(board, cells, goal, log, ctx, list(range(board.n)))
    else:
        from .core import _via_normal
        _via_normal(cells, goal, log, normal)
    return _finish(board, c, target, log, ctx).moves


def stopwatch_permute(c: Configuration, board: Graph, target: Configuration) -> MoveSequence:
    """Any rearrangement of a stopwatch with two or more butterflies."""
    parts = macros.stopwatch_parts(board)
    if parts is None:
        raise ValueError("board is not a stopwatch")
    if c.k < 2:
        raise ValueError("a stopwatch needs two butterflies")
    ring, crown = parts
    return _local_solve(board, c, target, lambda cl, lg: macros.stopwatch_normal(board, cl, ring, crown, lg))


def tick(c: Configuration, board: Graph, forward: bool = True) -> MoveSequence:
    """One tick: the whole dial shifts by one step, the crown stays put."""
    parts = macros.stopwatch_parts(board)
    if parts is None:
        raise ValueError("board is not a stopwatch")
    ring, _ = parts
    log: list = []
    macros.tick(list(c.placement), ring, log, forward)
    return MoveSequence(tuple(log))


def snake_exchange(c: Configuration, board: Graph, x: str, y: str) -> MoveSequence:
    """Exchange the two asocial people ``x`` and ``y`` of a snake tongue."""
    parts = macros.snake_parts(board)
    if parts is None:
        raise ValueError("board is not a snake tongue")
    asocial = {p for p in c.placement if not is_butterfly(p)}
    if len(asocial) > 2:
        raise ValueError("a snake exchange needs exactly two asocial people")
    if asocial != {x, y}:
        raise ValueError(f"{x} and {y} are not the asocial people on the board")
    if x == y:
        return MoveSequence(())
    back, tips = parts
    cells = list(c.placement)
    log: list = []
    macros.snake_exchange_cells(cells, back, tips, log)
    # the tip swap leaves two butterflies exchanged; put them back
    goal = list(c.placement)
    i, j = goal.index(x), goal.index(y)
    goal[i], goal[j] = y, x
    fix_butterflies(board, cells, goal, log)
    return MoveSequence(tuple(log))


def balloon_reconfigure(c: Configuration, board: Graph, target: Configuration,
                        cap: int = DEFAULT_SEARCH_CAP) -> MoveSequence:
    """Rearrange a balloon, hourglass or biconnected non-cycle board with two or more butterflies.

    Raises ``SearchCapExceeded`` if an inner library search outgrows ``cap``.
    """
    if c.k < 2:
        raise ValueError("balloon moves need two butterflies")
    return _local_solve(board, c, target, cap=cap)


def trade(c: Configuration, g: Graph, plan: LeafPlan, x: str, y: str,
          cap: int = DEFAULT_SEARCH_CAP) -> MoveSequence:
    """Trade ``x`` (rest side) with ``y`` (leaf side) in a configuration balanced for ``plan``."""
    from .core import trade as _trade

    party = BlockParty.of(c, plan)
    if not party.is_balanced(c, plan):
        raise ValueError("configuration is not balanced for this leaf")
    if x not in party.X or y not in party.Y:
        raise ValueError("trade needs x on the rest side and y on the leaf side")
    cells = list(tokens(c.placement))
    log: list = []
    _trade(g, cells, plan, x, y, log, Context(cap=cap), list(range(g.n)))
    return MoveSequence(tuple(log))


def balanced(c: Configuration, g: Graph, plan: LeafPlan) -> MoveSequence:
    cells = list(tokens(c.placement))
    log: list = []
    balance(g, cells, plan, log)
    return MoveSequence(tuple(log))


__all__ = [
    "BlockParty", "FallbackExceeded", "LeafPlan", "Moves", "NotConnected", "SearchCapExceeded",
    "SolveOutcome", "balance", "balanced", "balloon_reconfigure", "bidirectional_search", "choose_leaf",
    "find_snake_tongue", "fix_butterflies", "snake_exchange", "solve", "stopwatch_permute", "tick", "trade",
]

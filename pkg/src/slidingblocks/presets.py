"""Named boards.

Vertex labelling conventions:

* ``grid(a, b)``: row-major, vertex ``r * b + c``.
* ``coiled15``: ``grid(4, 4)`` plus the edge joining the top-left and
  bottom-right cells (0 and 15).
* ``theta0``: 6-cycle ``0-1-2-3-4-5-0`` plus vertex 6 adjacent to 0 and 3.
* ``snake_tongue(n)``: path ``0..n-2`` with a leaf ``n-1`` on vertex ``n-3``.
* ``stopwatch(n)``: dial ``0..n-2`` (a cycle, vertex 0 is the pivot) and
  crown ``n-1`` attached to 0.
* ``hourglass(a, b)``: throat 0; cycle ``0,1..a-1`` and cycle ``0,a..a+b-2``.
* ``bowtie``: triangles ``0,1,2`` and ``2,3,4``.
* ``caterpillar(s)``: spine path ``0..s-1``, leaf ``s+i`` on spine vertex ``i``.
* ``black_white``: 4x4 cells; neighbouring rows are separated by barriers
  except in columns 0 and 3.  The canonical start leaves the four centre
  cells (5, 6, 9, 10) empty.  This is a hand transcription of a board known
  only from a drawing; nothing depends on its exact shape.
* ``hallway_demo``: a 19-vertex board whose maximal hallways have orders
  3, 2, 2 and 4 (see :func:`hallway_demo`).
* ``library_demo``: triangle, bridge, square with two pendants; two libraries.
"""

from __future__ import annotations

from typing import Callable

from .graph import Configuration, Graph, build_graph, people


def grid(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("grid sides must be positive")
    es = []
    for r in range(a):
        for c in range(b):
            v = r * b + c
            if c + 1 < b:
                es.append((v, v + 1))
            if r + 1 < a:
                es.append((v, v + b))
    return build_graph(a * b, es)


def coiled15() -> Graph:
    g = grid(4, 4)
    return build_graph(16, list(g.edges) + [(0, 15)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def theta0() -> Graph:
    return build_graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 3)])


def snake_tongue(n: int) -> Graph:
    if n < 4:
        raise ValueError("snake tongue needs n >= 4")
    return build_graph(n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)])


def stopwatch(n: int) -> Graph:
    if n < 4:
        raise ValueError("stopwatch needs n >= 4 so the dial is a proper cycle")
    d = n - 1
    return build_graph(n, [(i, (i + 1) % d) for i in range(d)] + [(0, n - 1)])


def hourglass(a: int, b: int) -> Graph:
    if a < 3 or b < 3:
        raise ValueError("hourglass cycles need length >= 3")
    first = [0] + list(range(1, a))
    second = [0] + list(range(a, a + b - 1))
    es = [(first[i], first[(i + 1) % a]) for i in range(a)]
    es += [(second[i], second[(i + 1) % b]) for i in range(b)]
    return build_graph(a + b - 1, es)


def bowtie() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def caterpillar(spine: int) -> Graph:
    if spine < 1:
        raise ValueError("caterpillar needs a non-empty spine")
    es = [(i, i + 1) for i in range(spine - 1)] + [(i, spine + i) for i in range(spine)]
    return build_graph(2 * spine, es)


def black_white() -> Graph:
    es = []
    for r in range(4):
        for c in range(3):
            es.append((4 * r + c, 4 * r + c + 1))
    for r in range(3):
        for c in (0, 3):
            es.append((4 * r + c, 4 * (r + 1) + c))
    return build_graph(16, es)


def black_white_start() -> Configuration:
    empty = (5, 6, 9, 10)
    ps = list(people(16, 4))
    butterflies, asocial = ps[:4], iter(ps[4:])
    cells = []
    for v in range(16):
        cells.append(butterflies[empty.index(v)] if v in empty else next(asocial))
    return Configuration(tuple(cells))


def hallway_demo() -> Graph:
    """Two triangles and a square linked by bare bridge paths.

    Maximal hallways: (2, 3, 4), (0, 13), (5, 16) and (6, 7, 8, 9).
    """
    es = [(0, 1), (1, 2), (2, 0)]
    es += [(2, 3), (3, 4)]
    es += [(4, 5), (5, 6), (6, 4)]
    es += [(6, 7), (7, 8), (8, 9)]
    es += [(9, 10), (10, 11), (11, 12), (12, 9)]
    es += [(0, 13), (13, 14), (14, 15), (15, 13)]
    es += [(5, 16), (16, 17), (16, 18)]
    return build_graph(19, es)


def library_demo() -> Graph:
    es = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3), (6, 7), (5, 8)]
    return build_graph(9, es)


_PRESETS: dict[str, tuple[Callable[..., Graph], int]] = {
    "grid": (grid, 2),
    "coiled15": (coiled15, 0),
    "black_white": (black_white, 0),
    "theta0": (theta0, 0),
    "snake_tongue": (snake_tongue, 1),
    "stopwatch": (stopwatch, 1),
    "hourglass": (hourglass, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "bowtie": (bowtie, 0),
    "caterpillar": (caterpillar, 1),
    "hallway_demo": (hallway_demo, 0),
    "library_demo": (library_demo, 0),
}


def preset_names() -> list[str]:
    return sorted(_PRESETS)


def preset(name: str, *params: int) -> Graph:
    """Look up a board by name, e.g. ``preset("grid", 4, 4)``."""
    try:
        fn, arity = _PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(preset_names())}") from None
    if len(params) != arity:
        raise ValueError(f"preset {name!r} takes {arity} size parameter(s), got {len(params)}")
    return fn(*params)

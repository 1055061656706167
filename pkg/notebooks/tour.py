"""
A tour of sliding-block puzzles on graphs
=========================================

Run with ``python3 notebooks/tour.py``.  Each block prints one result.
"""

from slidingblocks import presets
from slidingblocks.circles import social_circles
from slidingblocks.counting import count_components
from slidingblocks.decomposition import hallways, kappa, kappa_star
from slidingblocks.graph import configuration, replay
from slidingblocks.oracle import enumerate_components
from slidingblocks.reachability import decide
from slidingblocks.solver import Moves, solve

# the 15-puzzle: tile i+1 on vertex i, the empty cell last
board = presets.grid(4, 4)
start = configuration([f"a{i + 1}" for i in range(15)] + ["b1"])
cells = list(start.placement)
cells[13], cells[14] = cells[14], cells[13]
print("14 and 15 exchanged:", decide(start, configuration(cells), board).reason.value)
print("components of the 15-puzzle:", count_components(board, 1).value)

# theta0 is the one biconnected non-bipartite board where one empty cell is not enough
theta = presets.theta0()
print("theta0, k=1, by enumeration:", enumerate_components(theta, 1).sizes)
print("theta0, k=2, by enumeration:", enumerate_components(theta, 2).components)

# hallways decide how many empty cells a tree-like board needs
demo = presets.hallway_demo()
print("hallway orders:", [h.order for h in hallways(demo)], "kappa:", kappa(demo),
      "k*:", kappa_star(demo))
for k in (2, 4, 5):
    circles = social_circles(demo, k)
    print(f"k={k}: {len(circles)} social circles, {count_components(demo, k).value} components")

# on a cycle the two modes differ; the enumeration sides with the corrected value
ring = presets.cycle(6)
print("cycle(6) k*: literal", kappa_star(ring, "literal"), "corrected", kappa_star(ring, "corrected"))
print("cycle(6) k=4 by enumeration:", enumerate_components(ring, 4).components)

# a certificate on an hourglass, checked by replay
glass = presets.hourglass(4, 5)
s = configuration(["b1", "b2"] + [f"a{i}" for i in range(1, glass.n - 1)])
t = configuration(["b2", "b1"] + [f"a{i}" for i in range(glass.n - 2, 0, -1)])
out = solve(s, t, glass)
assert isinstance(out, Moves)
print("hourglass(4,5) reversal:", len(out.moves), "moves, used", dict(out.stats),
      "replays:", replay(glass, s, out.moves) == t)

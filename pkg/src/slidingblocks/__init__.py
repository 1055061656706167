"""Sliding-block puzzles on arbitrary boards with k empty cells.

Empty cells are *butterflies* (they may swap with anyone), tiles are
*asocial* people (they only swap with a butterfly).  The package decides
reachability, counts components, finds the least k that connects every
configuration, and writes replay-checked move sequences.
"""

from .circles import SocialCircle, choose_anchors, social_circles
from .counting import ComponentCount, StructuralError, count_components
from .decomposition import (
    INFINITY, BlockCutTree, GraphClass, Hallway, block_cut_tree, classify, hallways, is_theta0, kappa,
    kappa_star,
)
from .graph import (
    Configuration, Graph, IllegalMove, MoveSequence, apply_swap, build_graph, canonical_configuration,
    configuration, configuration_from_json, graph_from_json, random_configuration, replay,
)
from .oracle import CapExceeded, ComponentTable, enumerate_components, min_k_connected, oracle_connected
from .presets import preset, preset_names
from .reachability import Reason, Verdict, circle_check, decide, normalize, theta0_component, wilson_parity_connected
from .solver import FallbackExceeded, Moves, NotConnected, solve

__version__ = "0.1.0"

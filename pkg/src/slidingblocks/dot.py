"""Graphviz DOT text for boards, with social circles as clusters."""

from __future__ import annotations

from .circles import SocialCircle
from .graph import Configuration, Graph, is_butterfly


def to_dot(g: Graph, circles: list[SocialCircle] | None = None, config: Configuration | None = None,
           name: str = "board") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = []
        if config is not None:
            attrs.append(f'label="{v}\\n{config[v]}"')
            if is_butterfly(config[v]):
                # butterflies drawn grey, as in the usual figures
                attrs.append("style=filled, fillcolor=grey")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for i, c in enumerate(circles or []):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="circle {i}";')
        # a vertex can lie in several circles; DOT draws it in the first
        lines.append("    " + " ".join(f"{v};" for v in c.vertices))
        lines.append("  }")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

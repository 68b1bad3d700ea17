"""Deterministic Graphviz DOT rendering of Hasse diagrams.

One node per element in carrier order, one edge per cover directed upward
(rankdir=BT), edges in lexicographic carrier-index order.  Output is a pure
function of the input, bit-identical across runs.
"""

from __future__ import annotations

from typing import Iterable

from .core_order import FiniteLattice, hasse_covers

__all__ = ["render_dot"]

_HIGHLIGHT_ATTR = "[style=filled]"


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(lat: FiniteLattice, highlight: Iterable[int] | None = None) -> str:
    """DOT text for the lattice's Hasse diagram.

    ``highlight`` is an optional set of element indices; highlighted nodes
    get a fixed style attribute.
    """
    marked = frozenset(highlight) if highlight is not None else frozenset()
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for x in range(lat.size):
        node = _quote(lat.label(x))
        if x in marked:
            lines.append(f"  {node} {_HIGHLIGHT_ATTR};")
        else:
            lines.append(f"  {node};")
    for x, y in hasse_covers(lat):
        lines.append(f"  {_quote(lat.label(x))} -> {_quote(lat.label(y))};")
    lines.append("}")
    return "\n".join(lines) + "\n"

from __future__ import annotations

from convex_blockers.geometry import Edge, edges_from_text


def edges(text: str) -> frozenset[Edge]:
    """Shorthand: edge set from `a-b,c-d` text."""
    return edges_from_text(text)

"""Dilation sets: right nodes reachable by alternating paths from unmatched nodes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import BipartiteGraph, Digraph, bipartite_of
from .matching import Matching, maximum_matching

__all__ = ["DilationSet", "alternating_reachable", "dilation_sets", "alternating_successors"]


@dataclass(frozen=True)
class DilationSet:
    anchor: int
    members: frozenset[int]

    def __post_init__(self):
        if self.anchor not in self.members:
            raise ValueError("anchor must belong to its dilation set")

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


def alternating_successors(b: BipartiteGraph, m: Matching) -> list[list[int]]:
    """One-step alternating moves between right nodes.

    From right node ``r`` step back along a non-matching link to a left node
    ``l`` and then forward along the matching link of ``l``. Index 0 unused.
    """
    mate_l = m.mate_of_left()
    out: list[list[int]] = [[] for _ in range(b.n + 1)]
    for r, lefts in enumerate(b.right_adjacency()):
        for left in lefts:
            nxt = mate_l.get(left)
            if nxt is not None and nxt != r:
                out[r].append(nxt)
    return out


def _reach(succ: list[list[int]], start: int) -> frozenset[int]:
    seen = {start}
    q = deque([start])
    while q:
        r = q.popleft()
        for s in succ[r]:
            if s not in seen:
                seen.add(s)
                q.append(s)
    return frozenset(seen)


def alternating_reachable(b: BipartiteGraph, m: Matching, start: int) -> frozenset[int]:
    if start in m.matched_right:
        raise ValueError(f"start node {start} is matched")
    if not 1 <= start <= b.n:
        raise ValueError(f"start node {start} outside 1..{b.n}")
    return _reach(alternating_successors(b, m), start)


def dilation_sets(g: Digraph, m: Matching | None = None) -> list[DilationSet]:
    """One dilation set per unmatched node, in ascending anchor order.

    ``m`` defaults to :func:`maximum_matching` of the bipartite representation.
    """
    b = bipartite_of(g)
    if m is None:
        m = maximum_matching(b)
    succ = alternating_successors(b, m)
    return [DilationSet(u, _reach(succ, u)) for u in sorted(m.unmatched_right)]

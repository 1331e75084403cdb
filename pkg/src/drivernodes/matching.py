"""Maximum matchings on bipartite representations and structural rank."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import BipartiteGraph, Digraph, bipartite_of

__all__ = [
    "Matching",
    "maximum_matching",
    "unmatched_nodes",
    "s_rank",
    "s_rank_with_drivers",
    "hopcroft_karp",
    "has_augmenting_path",
]

_INF = float("inf")


@dataclass(frozen=True)
class Matching:
    """A set of bipartite links ``(left, right)`` sharing no endpoints."""

    n: int
    links: frozenset[tuple[int, int]]

    def __post_init__(self):
        lefts = [j for j, _ in self.links]
        rights = [i for _, i in self.links]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("links share an endpoint")

    def __len__(self) -> int:
        return len(self.links)

    @property
    def matched_right(self) -> frozenset[int]:
        return frozenset(i for _, i in self.links)

    @property
    def unmatched_right(self) -> frozenset[int]:
        matched = self.matched_right
        return frozenset(v for v in range(1, self.n + 1) if v not in matched)

    def mate_of_left(self) -> dict[int, int]:
        return dict(self.links)

    def mate_of_right(self) -> dict[int, int]:
        return {i: j for j, i in self.links}


def hopcroft_karp(adj: list[list[int]], n_left: int, n_right: int) -> tuple[list[int], list[int]]:
    """Maximum matching on a bipartite graph with 0-based index arrays.

    ``adj[u]`` lists right vertices of left vertex ``u`` in the order they
    should be tried. Returns ``(mate_left, mate_right)`` with ``-1`` for free
    vertices. A greedy pass seeds the matching, then layered phases augment
    along shortest vertex-disjoint paths.
    """
    mate_l = [-1] * n_left
    mate_r = [-1] * n_right
    for u in range(n_left):
        for v in adj[u]:
            if mate_r[v] < 0:
                mate_l[u] = v
                mate_r[v] = u
                break

    dist = [0] * n_left
    while True:
        # BFS layers from free left vertices
        q = deque()
        for u in range(n_left):
            if mate_l[u] < 0:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = -1
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = mate_r[v]
                if w < 0:
                    found = True
                elif dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        if not found:
            break

        # DFS along layers, iteratively
        it = [0] * n_left
        for root in range(n_left):
            if mate_l[root] >= 0:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                advanced = False
                while it[u] < len(adj[u]):
                    v = adj[u][it[u]]
                    it[u] += 1
                    w = mate_r[v]
                    if w < 0:
                        # augment along the stack
                        for x in reversed(stack):
                            prev = mate_l[x]
                            mate_l[x] = v
                            mate_r[v] = x
                            v = prev
                        stack.clear()
                        advanced = True
                        break
                    if dist[w] == dist[u] + 1:
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = -1  # dead end for this phase
                    stack.pop()
    return mate_l, mate_r


def maximum_matching(b: BipartiteGraph) -> Matching:
    """Maximum matching of ``b``; deterministic for a given link set."""
    n = b.n
    adj = [[i - 1 for i in row] for row in b.left_adjacency()[1:]]
    mate_l, _ = hopcroft_karp(adj, n, n)
    links = frozenset((j + 1, i + 1) for j, i in enumerate(mate_l) if i >= 0)
    return Matching(n, links)


def unmatched_nodes(m: Matching) -> frozenset[int]:
    return m.unmatched_right


def has_augmenting_path(b: BipartiteGraph, m: Matching) -> bool:
    """True when some alternating path joins a free right node to a free left node."""
    right_adj = b.right_adjacency()
    mate_l = m.mate_of_left()
    seen = set(m.unmatched_right)
    q = deque(seen)
    while q:
        r = q.popleft()
        for left in right_adj[r]:
            nxt = mate_l.get(left)
            if nxt is None:
                return True
            if nxt not in seen:
                seen.add(nxt)
                q.append(nxt)
    return False


def s_rank(g: Digraph) -> int:
    """Structural rank: size of a maximum matching of the bipartite representation."""
    return len(maximum_matching(bipartite_of(g)))


def s_rank_with_drivers(g: Digraph, drivers: Iterable[int]) -> int:
    """Structural rank of the state pattern with one input column per driver."""
    drivers = sorted(set(drivers))
    for d in drivers:
        if not 1 <= d <= g.n:
            raise ValueError(f"driver {d} outside node range 1..{g.n}")
    n = g.n
    adj = [[i - 1 for i in row] for row in g.successors[1:]]
    adj += [[d - 1] for d in drivers]
    mate_l, _ = hopcroft_karp(adj, n + len(drivers), n)
    return sum(1 for v in mate_l if v >= 0)

"""Depth-first search with timestamps and Kosaraju SCC decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Digraph, transpose

__all__ = ["DfsAttributes", "SccDecomposition", "dfs_forest", "scc_decompose", "child_sccs"]


@dataclass(frozen=True)
class DfsAttributes:
    """Per-node DFS results; lists are indexed by node, index 0 unused.

    ``pi[v]`` is the DFS-tree predecessor (``None`` for roots); ``start`` and
    ``end`` are discovery and finish times drawn from one counter ``1..2n``.
    """

    pi: list[int | None]
    visited: list[bool]
    start: list[int]
    end: list[int]
    roots: list[int]


def dfs_forest(g: Digraph, order: Sequence[int] | None = None) -> DfsAttributes:
    """Full DFS, trying roots in ``order`` and neighbours in ascending index."""
    n = g.n
    if order is None:
        order = range(1, n + 1)
    order = list(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError("order must be a permutation of the nodes 1..n")

    succ = g.successors
    pi: list[int | None] = [None] * (n + 1)
    visited = [False] * (n + 1)
    start = [0] * (n + 1)
    end = [0] * (n + 1)
    roots = []
    t = 0
    for root in order:
        if visited[root]:
            continue
        roots.append(root)
        visited[root] = True
        t += 1
        start[root] = t
        stack = [(root, 0)]
        while stack:
            v, k = stack[-1]
            nbrs = succ[v]
            while k < len(nbrs) and visited[nbrs[k]]:
                k += 1
            if k < len(nbrs):
                w = nbrs[k]
                stack[-1] = (v, k + 1)
                visited[w] = True
                pi[w] = v
                t += 1
                start[w] = t
                stack.append((w, 0))
            else:
                stack.pop()
                t += 1
                end[v] = t
    return DfsAttributes(pi, visited, start, end, roots)


@dataclass(frozen=True)
class SccDecomposition:
    """SCC partition with child flags and direct condensation edges.

    ``order`` holds ``(a, b)`` component indices whenever an edge runs from
    component ``a`` to component ``b``; longer paths are left to traversal.
    """

    n: int
    components: list[frozenset[int]]
    child_flags: list[bool]
    order: frozenset[tuple[int, int]]
    component_of: list[int]

    @property
    def children(self) -> list[frozenset[int]]:
        return [c for c, flag in zip(self.components, self.child_flags) if flag]

    def precedes(self, a: int, b: int) -> bool:
        """True if a directed path leads from component ``a`` to component ``b``."""
        if a == b:
            return False
        out: dict[int, list[int]] = {}
        for x, y in self.order:
            out.setdefault(x, []).append(y)
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in out.get(x, ()):
                if y == b:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False


def scc_decompose(g: Digraph) -> SccDecomposition:
    first = dfs_forest(g)
    finish_order = sorted(g.nodes, key=lambda v: -first.end[v])
    gt = transpose(g)
    second = dfs_forest(gt, finish_order)

    # each tree of the second forest is one component
    comp_of = [-1] * (g.n + 1)
    members: list[list[int]] = []
    for root in second.roots:
        comp_of[root] = len(members)
        members.append([root])
    # nodes are discovered after their tree parent
    for v in sorted(g.nodes, key=lambda v: second.start[v]):
        if comp_of[v] < 0:
            c = comp_of[second.pi[v]]
            comp_of[v] = c
            members[c].append(v)

    child = [True] * len(members)
    order = set()
    for i, j in g.edges:
        a, b = comp_of[i], comp_of[j]
        if a != b:
            child[b] = False
            order.add((a, b))
    return SccDecomposition(
        g.n, [frozenset(m) for m in members], child, frozenset(order), comp_of
    )


def child_sccs(d: SccDecomposition) -> list[frozenset[int]]:
    return d.children

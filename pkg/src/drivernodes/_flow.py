"""Unit-capacity max flow (Dinic) with a residual network that can be extended."""

from __future__ import annotations

from collections import deque


class UnitFlow:
    """Residual network for integer capacities, grown arc by arc.

    Flow already pushed survives later calls to :meth:`add_arc`, so a second
    :meth:`max_flow` continues from the current flow. Augmenting paths always
    end on a forward arc into the sink, so sink arcs never lose flow.
    """

    def __init__(self, n_vertices: int):
        self.head: list[list[int]] = [[] for _ in range(n_vertices)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_vertex(self) -> int:
        self.head.append([])
        return len(self.head) - 1

    def add_arc(self, u: int, v: int, cap: int = 1) -> int:
        k = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.head[u].append(k)
        self.head[v].append(k + 1)
        return k

    def flow_on(self, arc: int) -> int:
        return self.cap[arc ^ 1]

    def set_capacity(self, arc: int, cap: int) -> None:
        self.cap[arc] = cap - self.cap[arc ^ 1]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * len(self.head)
        level[s] = 0
        q = deque([s])
        to, cap = self.to, self.cap
        while q:
            u = q.popleft()
            for a in self.head[u]:
                v = to[a]
                if cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        """Push flow until no augmenting path is left; return the amount added."""
        total = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * len(head)
            while True:
                # one augmenting path in the level graph, iterative DFS
                path: list[int] = []
                u = s
                while u != t:
                    arcs = head[u]
                    i = it[u]
                    while i < len(arcs):
                        a = arcs[i]
                        v = to[a]
                        if cap[a] > 0 and level[v] == level[u] + 1:
                            break
                        i += 1
                    it[u] = i
                    if i == len(arcs):
                        if u == s:
                            break
                        level[u] = -1  # prune dead end
                        a = path.pop()
                        u = to[a ^ 1]
                        it[u] += 1
                        continue
                    path.append(arcs[i])
                    u = to[arcs[i]]
                if u != t:
                    break
                push = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                total += push

"""System digraphs, their bipartite representation, I/O and random generators.

Edge convention: an edge ``(i, j)`` means state ``i`` influences state ``j``.
A numeric realization therefore puts a nonzero at row ``j``, column ``i``
of the state matrix. Nodes are labelled ``1..n``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "Digraph",
    "BipartiteGraph",
    "GraphParseError",
    "parse_graph",
    "format_graph",
    "transpose",
    "bipartite_of",
    "generate_random",
]


class GraphParseError(ValueError):
    """Raised when graph text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Digraph:
    """Immutable directed graph on nodes ``1..n``.

    Self-loops are allowed; parallel edges collapse into one.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    labels: Mapping[int, str] = field(default_factory=dict, compare=False)

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Mapping[int, str] | None = None,
    ):
        if n < 1:
            raise ValueError(f"node count must be positive, got {n}")
        es = frozenset((int(i), int(j)) for i, j in edges)
        for i, j in es:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i}, {j}) outside node range 1..{n}")
        labels = dict(labels or {})
        for k in labels:
            if not 1 <= k <= n:
                raise ValueError(f"label for unknown node {k}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_succ", None)
        object.__setattr__(self, "_pred", None)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={sorted(self.edges)})"

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def _adjacency(self) -> None:
        succ: list[list[int]] = [[] for _ in range(self.n + 1)]
        pred: list[list[int]] = [[] for _ in range(self.n + 1)]
        for i, j in sorted(self.edges):
            succ[i].append(j)
            pred[j].append(i)
        for lst in pred:
            lst.sort()
        object.__setattr__(self, "_succ", succ)
        object.__setattr__(self, "_pred", pred)

    @property
    def successors(self) -> list[list[int]]:
        """Out-neighbours per node in ascending order; index 0 is unused."""
        if self._succ is None:
            self._adjacency()
        return self._succ

    @property
    def predecessors(self) -> list[list[int]]:
        """In-neighbours per node in ascending order; index 0 is unused."""
        if self._pred is None:
            self._adjacency()
        return self._pred

    def in_neighborhood(self, nodes: Iterable[int]) -> frozenset[int]:
        """Nodes with an edge into ``nodes``."""
        pred = self.predecessors
        return frozenset(v for s in nodes for v in pred[s])

    def reachable_from(self, sources: Iterable[int]) -> set[int]:
        succ = self.successors
        seen = set(sources)
        stack = list(seen)
        while stack:
            v = stack.pop()
            for w in succ[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite representation: left copy ``V+``, right copy ``V-``.

    ``links`` holds ``(j, i)`` for every edge ``j -> i``; the left endpoint is
    the source state and the right endpoint the influenced state.
    """

    n: int
    links: frozenset[tuple[int, int]]

    @property
    def left(self) -> range:
        return range(1, self.n + 1)

    @property
    def right(self) -> range:
        return range(1, self.n + 1)

    def left_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for j, i in sorted(self.links):
            adj[j].append(i)
        return adj

    def right_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for j, i in sorted(self.links):
            adj[i].append(j)
        return adj


def transpose(g: Digraph) -> Digraph:
    """Reverse every edge."""
    return Digraph(g.n, ((j, i) for i, j in g.edges), g.labels)


def bipartite_of(g: Digraph) -> BipartiteGraph:
    return BipartiteGraph(g.n, frozenset(g.edges))


# -- parsing / formatting -------------------------------------------------

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_DOT_EDGE = re.compile(r"^(-?\d+)\s*->\s*(-?\d+)$")
_DOT_NODE = re.compile(r"^(-?\d+)$")


def _build(n: int | None, edges: list[tuple[int, int]], labels=None) -> Digraph:
    top = max((max(e) for e in edges), default=0)
    if labels:
        top = max(top, max(labels))
    if n is None:
        n = top
    elif top > n:
        raise GraphParseError(f"node {top} exceeds declared n={n}")
    if n < 1:
        raise GraphParseError("graph has no nodes; declare n=<count>")
    return Digraph(n, edges, labels)


def _check_index(v: int, line: int) -> int:
    if v < 1:
        raise GraphParseError(f"node index {v} < 1", line)
    return v


def _parse_edge_list(text: str) -> Digraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            if n is not None or edges:
                raise GraphParseError("header must precede edges", lineno)
            n = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected '<src> <dst>', got {line!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer node in {line!r}", lineno) from None
        edges.append((_check_index(i, lineno), _check_index(j, lineno)))
    return _build(n, edges)


def _parse_json(text: str) -> Digraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict) or "edges" not in doc:
        raise GraphParseError("JSON graph must be an object with an 'edges' array")
    edges = []
    for k, e in enumerate(doc["edges"]):
        if not (isinstance(e, list) and len(e) == 2 and all(type(x) is int for x in e)):
            raise GraphParseError(f"edges[{k}] is not a pair of integers")
        if min(e) < 1:
            raise GraphParseError(f"edges[{k}] has node index < 1")
        edges.append((e[0], e[1]))
    labels = {}
    for key, name in (doc.get("labels") or {}).items():
        try:
            idx = int(key)
        except ValueError:
            raise GraphParseError(f"label key {key!r} is not an integer") from None
        if idx < 1:
            raise GraphParseError(f"label key {key!r} < 1")
        labels[idx] = str(name)
    n = doc.get("n")
    if n is not None and type(n) is not int:
        raise GraphParseError("'n' must be an integer")
    return _build(n, edges, labels)


def _parse_dot(text: str) -> Digraph:
    edges = []
    top = 0
    state = "head"  # head -> body -> done
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if state == "head":
            if not line:
                continue
            m = re.match(r"^digraph\s*\w*\s*\{(.*)$", line)
            if not m:
                raise GraphParseError("expected 'digraph {'", lineno)
            line, state = m.group(1), "body"
        if state == "done":
            if line:
                raise GraphParseError("content after closing brace", lineno)
            continue
        if "}" in line:
            line, rest = line.split("}", 1)
            if rest.strip():
                raise GraphParseError("content after closing brace", lineno)
            state = "done"
        for stmt in line.split(";"):
            s = " ".join(stmt.split())
            if not s:
                continue
            em = _DOT_EDGE.match(s)
            if em:
                i = _check_index(int(em.group(1)), lineno)
                j = _check_index(int(em.group(2)), lineno)
                edges.append((i, j))
                continue
            nm = _DOT_NODE.match(s)
            if nm:
                top = max(top, _check_index(int(nm.group(1)), lineno))
                continue
            raise GraphParseError(f"unsupported DOT statement {s!r}", lineno)
    if state != "done":
        raise GraphParseError("missing 'digraph { ... }' block")
    n = max([top] + [max(e) for e in edges])
    return _build(n or None, edges)


def parse_graph(text: str, format: str = "edge-list") -> Digraph:
    """Parse a graph from ``edge-list``, ``json`` or ``dot`` text."""
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "json":
        return _parse_json(text)
    if format == "dot":
        return _parse_dot(text)
    raise ValueError(f"unknown graph format {format!r}")


def format_graph(g: Digraph, format: str = "edge-list") -> str:
    edges = sorted(g.edges)
    if format == "edge-list":
        return "".join([f"n={g.n}\n"] + [f"{i} {j}\n" for i, j in edges])
    if format == "json":
        doc = {"n": g.n, "edges": [list(e) for e in edges]}
        if g.labels:
            doc["labels"] = {str(k): v for k, v in sorted(g.labels.items())}
        return json.dumps(doc) + "\n"
    if format == "dot":
        # isolated nodes are listed so n survives a round trip
        lines = ["digraph {"]
        lines += [f"  {v};" for v in g.nodes]
        lines += [f"  {i} -> {j};" for i, j in edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format {format!r}")


# -- random models ----------------------------------------------------------


def _erdos_renyi(n: int, rng: np.random.Generator, p: float) -> list[tuple[int, int]]:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    # per-row binomial count plus uniform targets: same law as independent
    # Bernoulli draws per ordered pair, without an n x n array
    edges = []
    for i in range(n):
        k = int(rng.binomial(n - 1, p))
        if k == 0:
            continue
        picks = rng.choice(n - 1, size=k, replace=False)
        for t in sorted(int(x) for x in picks):
            j = t + 1 if t >= i else t
            edges.append((i + 1, j + 1))
    return edges


def _small_world(n: int, rng: np.random.Generator, k: int, beta: float) -> list[tuple[int, int]]:
    if k < 0 or k % 2:
        raise ValueError(f"k must be a non-negative even integer, got {k}")
    if k > n - 1:
        raise ValueError(f"k={k} too large for n={n}")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    half = k // 2
    lattice = []
    for i in range(n):
        for d in range(1, half + 1):
            lattice.append((i, (i + d) % n))
            lattice.append((i, (i - d) % n))
    present = set(lattice)
    edges = []
    for i, j in lattice:
        if rng.random() < beta:
            # pick a fresh target; keep the edge if the node is saturated
            candidates = [t for t in range(n) if t != i and (i, t) not in present]
            if candidates:
                t = candidates[int(rng.integers(len(candidates)))]
                present.discard((i, j))
                present.add((i, t))
                j = t
        edges.append((i, j))
    return [(i + 1, j + 1) for i, j in sorted(set(edges))]


def _scale_free(n: int, rng: np.random.Generator, m: int) -> list[tuple[int, int]]:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < m:
        raise ValueError(f"n={n} smaller than m={m}")
    # seed: complete digraph on the first m nodes
    edges = [(i, j) for i in range(m) for j in range(m) if i != j]
    indeg = np.zeros(n, dtype=float)
    for _, j in edges:
        indeg[j] += 1
    for new in range(m, n):
        weights = indeg[:new] + 1.0
        targets = rng.choice(new, size=m, replace=False, p=weights / weights.sum())
        for t in sorted(int(x) for x in targets):
            edges.append((new, t))
            indeg[t] += 1
    return [(i + 1, j + 1) for i, j in edges]


def generate_random(model: str, n: int, seed: int, **params) -> Digraph:
    """Draw a random digraph without self-loops.

    ``model`` is one of ``erdos-renyi`` (``p``), ``small-world`` (``k``,
    ``beta``) or ``scale-free`` (``m``). Output is a pure function of the
    arguments.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(np.uint64(seed & (2**64 - 1)))
    if model == "erdos-renyi":
        edges = _erdos_renyi(n, rng, float(params.get("p", 0.1)))
    elif model == "small-world":
        edges = _small_world(n, rng, int(params.get("k", 2)), float(params.get("beta", 0.1)))
    elif model == "scale-free":
        edges = _scale_free(n, rng, int(params.get("m", 1)))
    else:
        raise ValueError(f"unknown random model {model!r}")
    return Digraph(n, edges)

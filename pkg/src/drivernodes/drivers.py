"""Minimal driver-node selection for structural controllability.

A driver set makes the system structurally controllable iff every node is
reachable from a driver and the state pattern augmented with one input column
per driver has full structural rank. Reachability holds iff every child SCC
(no incoming edge from outside) holds a driver. The rank condition holds iff
the drivers contain the unmatched set of some maximum matching.

Unmatched sets of maximum matchings are exactly the sets reached from the
current unmatched nodes (anchors) by vertex-disjoint alternating paths.
Each anchor therefore picks one endpoint inside its own dilation set, and an
endpoint lying in a child SCC covers that SCC for free. The planner routes
disjoint alternating paths through a unit-capacity network:

    source -> anchor -> ... alternating moves ... -> endpoint
    endpoint -> child-SCC hub -> sink       (first phase)
    endpoint -> sink                        (second phase)

The first phase maximises the number ``k`` of child SCCs covered by distinct
endpoints; the second completes the linkage for the remaining anchors. The
minimum is ``|anchors| + |child SCCs| - k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._flow import UnitFlow
from .dilation import DilationSet, alternating_successors, dilation_sets
from .graph import Digraph, bipartite_of
from .matching import Matching, maximum_matching, s_rank_with_drivers
from .scc import SccDecomposition, scc_decompose

__all__ = [
    "InfeasibleError",
    "Verification",
    "DriverReport",
    "PairingResult",
    "verify_structural_controllability",
    "min_driver_count",
    "select_driver_nodes",
    "input_matrix_structure",
    "pair_decomposition",
]

TYPE_I = "I"
TYPE_II = "II"


class InfeasibleError(Exception):
    """No admissible driver set exists for the given inaccessible nodes."""


def _node_set(nodes: Iterable[int] | None, n: int, what: str) -> frozenset[int]:
    out = frozenset(int(v) for v in (nodes or ()))
    bad = sorted(v for v in out if not 1 <= v <= n)
    if bad:
        raise ValueError(f"{what} {bad} outside node range 1..{n}")
    return out


@dataclass(frozen=True)
class Verification:
    """Outcome of the two structural controllability conditions.

    ``status`` is ``controllable``, ``fails-connectivity`` (``witness`` holds
    the nodes no driver reaches) or ``fails-rank`` (``deficit`` is the number
    of rows left uncovered by the best matching with inputs).
    """

    status: str
    connectivity: bool
    rank: bool
    witness: frozenset[int] = frozenset()
    deficit: int = 0

    @property
    def controllable(self) -> bool:
        return self.status == "controllable"

    def __str__(self) -> str:
        if self.status == "fails-connectivity":
            return f"fails-connectivity: unreachable {sorted(self.witness)}"
        if self.status == "fails-rank":
            return f"fails-rank: deficit {self.deficit}"
        return self.status


def verify_structural_controllability(g: Digraph, drivers: Iterable[int]) -> Verification:
    drivers = _node_set(drivers, g.n, "drivers")
    if not drivers:
        raise ValueError("driver set must be nonempty")
    unreachable = frozenset(g.nodes) - g.reachable_from(drivers)
    deficit = g.n - s_rank_with_drivers(g, drivers)
    if unreachable:
        status = "fails-connectivity"
    elif deficit:
        status = "fails-rank"
    else:
        status = "controllable"
    return Verification(status, not unreachable, deficit == 0, unreachable, deficit)


def input_matrix_structure(n: int, drivers: Iterable[int]) -> np.ndarray:
    """Boolean ``n x N`` input pattern; column ``k`` drives the k-th smallest driver."""
    ds = sorted(_node_set(drivers, n, "drivers"))
    if not ds:
        raise ValueError("driver set must be nonempty")
    pattern = np.zeros((n, len(ds)), dtype=bool)
    pattern[np.array(ds) - 1, np.arange(len(ds))] = True
    return pattern


# -- planning -----------------------------------------------------------------


@dataclass
class _Plan:
    n_min: int
    drivers: list[int]
    types: dict[int, list[str]]
    pairings: list[tuple[int, int, int]]
    endpoints: dict[int, int]  # anchor -> chosen endpoint


def _route(
    starts: Sequence[int],
    successors,
    n_nodes: int,
    group_of: dict[int, int],
    n_groups: int,
    accessible,
    start_is_node: bool,
):
    """Two-phase disjoint routing shared by the graph and set-level planners.

    ``starts`` are flow origins. With ``start_is_node`` each origin is itself a
    node (an anchor) and ``successors[v]`` lists next nodes; otherwise origins
    are abstract sets whose ``successors[i]`` are candidate member nodes and
    members are not chained further. Returns ``(k, total, endpoint_of_start,
    group_arc_used)``.
    """
    # vertex layout: source, sink, node-in 1..n, node-out 1..n, set vertices, hubs
    src, snk = 0, 1
    node_in = lambda v: 1 + v
    node_out = lambda v: 1 + n_nodes + v
    base = 2 + 2 * n_nodes
    n_sets = 0 if start_is_node else len(starts)
    hub = lambda c: base + n_sets + c
    net = UnitFlow(base + n_sets + n_groups)

    direct: dict[int, int] = {}
    hub_arc: dict[int, int] = {}
    for v in range(1, n_nodes + 1):
        net.add_arc(node_in(v), node_out(v))
        if v in accessible:
            direct[v] = net.add_arc(node_out(v), snk, 0)
            c = group_of.get(v)
            if c is not None:
                hub_arc[v] = net.add_arc(node_out(v), hub(c))
    for c in range(n_groups):
        net.add_arc(hub(c), snk)

    start_arc = []
    if start_is_node:
        for u in starts:
            start_arc.append(net.add_arc(src, node_in(u)))
        for v in range(1, n_nodes + 1):
            for w in successors[v]:
                net.add_arc(node_out(v), node_in(w))
    else:
        for i, cands in enumerate(starts):
            start_arc.append(net.add_arc(src, base + i))
            for w in successors[i]:
                net.add_arc(base + i, node_in(w))

    k = net.max_flow(src, snk)
    for v, a in direct.items():
        net.set_capacity(a, 1)
    total = k + net.max_flow(src, snk)

    # read each origin's endpoint back from the flow
    flowing_out: dict[int, list[int]] = {}
    for u in range(len(net.head)):
        for a in net.head[u]:
            if a % 2 == 0 and net.flow_on(a) > 0:
                flowing_out.setdefault(u, []).append(net.to[a])
    endpoint = {}
    for idx, a in enumerate(start_arc):
        if net.flow_on(a) == 0:
            continue
        x = net.to[a]
        while True:
            nxt = flowing_out[x]
            if x >= base or (2 <= x < 2 + n_nodes):
                x = nxt[0]
                continue
            # x is a node-out vertex
            y = nxt[0]
            if y == snk or y >= base + n_sets:
                endpoint[idx] = x - 1 - n_nodes
                break
            x = y
    used_hub = {v for v, a in hub_arc.items() if net.flow_on(a) > 0}
    return k, total, endpoint, used_hub


def _check_groups(sets: Sequence[Iterable[int]], accessible, what: str) -> None:
    for idx, s in enumerate(sets):
        if not any(v in accessible for v in s):
            raise InfeasibleError(f"{what} {sorted(s)} has no accessible node")


def _assemble(
    n_anchor: int,
    children: Sequence[frozenset[int]],
    endpoint: dict[int, int],
    used_hub: set[int],
    child_index: dict[int, int],
    accessible,
) -> _Plan:
    types: dict[int, list[str]] = {}
    pairings = []
    covered = set()
    for d_idx in range(n_anchor):
        v = endpoint[d_idx]
        types.setdefault(v, []).append(TYPE_II)
        if v in used_hub:
            c = child_index[v]
            pairings.append((d_idx, c, v))
            covered.add(c)
            types[v].append(TYPE_I)
    for c, comp in enumerate(children):
        if c not in covered:
            v = min(x for x in comp if x in accessible)
            types.setdefault(v, []).append(TYPE_I)
    drivers = sorted(types)
    types = {v: sorted(set(types[v]), key=[TYPE_I, TYPE_II].index) for v in drivers}
    return _Plan(len(drivers), drivers, types, pairings, {})


def _plan(g: Digraph, inaccessible, m: Matching, dils, decomp: SccDecomposition) -> _Plan:
    F = _node_set(inaccessible, g.n, "inaccessible nodes")
    accessible = frozenset(g.nodes) - F
    children = decomp.children
    _check_groups([d.members for d in dils], accessible, "dilation set")
    _check_groups(children, accessible, "child SCC")

    child_index = {}
    for c, comp in enumerate(children):
        for v in comp:
            child_index[v] = c
    anchors = [d.anchor for d in dils]
    succ = alternating_successors(bipartite_of(g), m)
    k, total, endpoint, used_hub = _route(
        anchors, succ, g.n, child_index, len(children), accessible, True
    )
    if total < len(anchors):
        raise InfeasibleError(
            "no maximum matching leaves only accessible nodes unmatched "
            f"({total} of {len(anchors)} dilation sets get distinct accessible drivers)"
        )
    plan = _assemble(len(anchors), children, endpoint, used_hub, child_index, accessible)
    plan.endpoints = {anchors[i]: v for i, v in endpoint.items()}
    expected = len(anchors) + len(children) - k
    assert plan.n_min == expected, (plan.n_min, expected)
    return plan


def min_driver_count(
    g: Digraph, inaccessible: Iterable[int] = (), matching: Matching | None = None
) -> int:
    """Minimum number of accessible driver nodes; raises :class:`InfeasibleError`.

    Any maximum ``matching`` gives the same count; by default one is computed.
    """
    m = maximum_matching(bipartite_of(g)) if matching is None else matching
    return _plan(g, inaccessible, m, dilation_sets(g, m), scc_decompose(g)).n_min


# -- reports ------------------------------------------------------------------


@dataclass
class DriverReport:
    n: int
    n_min: int
    drivers: list[int]
    types: dict[int, list[str]]
    dilations: list[DilationSet]
    child_sccs: list[frozenset[int]]
    pairings: list[tuple[int, int, int]]
    verification: Verification
    inaccessible: frozenset[int] = field(default_factory=frozenset)

    @property
    def input_pattern(self) -> np.ndarray:
        return input_matrix_structure(self.n, self.drivers)

    @property
    def verified(self) -> bool:
        return self.verification.controllable

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "drivers": list(self.drivers),
            "types": {str(v): list(t) for v, t in sorted(self.types.items())},
            "dilations": [
                {"anchor": d.anchor, "members": d.sorted_members()} for d in self.dilations
            ],
            "child_sccs": [sorted(c) for c in self.child_sccs],
            "pairings": [list(p) for p in self.pairings],
            "input_pattern": [[v, k + 1] for k, v in enumerate(self.drivers)],
            "verified": self.verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def to_text(self) -> str:
        lines = [f"minimal driver nodes: {self.n_min}"]
        lines.append("drivers:")
        for v in self.drivers:
            lines.append(f"  {v}  type {'+'.join(self.types[v])}")
        lines.append(f"dilation sets ({len(self.dilations)}):")
        for k, d in enumerate(self.dilations):
            lines.append(f"  D{k + 1} anchor {d.anchor}: {d.sorted_members()}")
        lines.append(f"child SCCs ({len(self.child_sccs)}):")
        for k, c in enumerate(self.child_sccs):
            lines.append(f"  S{k + 1}: {sorted(c)}")
        lines.append(f"pairings ({len(self.pairings)}):")
        for d, c, v in self.pairings:
            lines.append(f"  D{d + 1} + S{c + 1} via node {v}")
        lines.append(f"verification: {self.verification}")
        return "\n".join(lines) + "\n"


def select_driver_nodes(
    g: Digraph, inaccessible: Iterable[int] = (), matching: Matching | None = None
) -> DriverReport:
    """Pick a minimum driver set avoiding ``inaccessible`` and verify it."""
    F = _node_set(inaccessible, g.n, "inaccessible nodes")
    m = maximum_matching(bipartite_of(g)) if matching is None else matching
    dils = dilation_sets(g, m)
    decomp = scc_decompose(g)
    plan = _plan(g, F, m, dils, decomp)
    check = verify_structural_controllability(g, plan.drivers)
    if not check.controllable:
        raise AssertionError(f"selected drivers {plan.drivers} fail verification: {check}")
    return DriverReport(
        g.n, plan.n_min, plan.drivers, plan.types, dils, decomp.children,
        plan.pairings, check, F,
    )


# -- set-level pairing ----------------------------------------------------------


@dataclass(frozen=True)
class PairingResult:
    k: int
    n_min: int
    pairings: list[tuple[int, int, int]]
    drivers: list[int]
    types: dict[int, list[str]]


def pair_decomposition(
    dilations: Sequence[Iterable[int]],
    children: Sequence[Iterable[int]],
    inaccessible: Iterable[int] = (),
) -> PairingResult:
    """Pair a given decomposition without access to the graph.

    Each dilation set takes a distinct accessible representative; the first
    phase maximises how many child SCCs those representatives hit. Without
    the graph, disjointness of the underlying alternating paths cannot be
    checked, so the count is exact only when distinct representatives are
    simultaneously realisable (use :func:`min_driver_count` on a graph).
    """
    dils = [frozenset(d) for d in dilations]
    kids = [frozenset(c) for c in children]
    n = max([0] + [max(s) for s in dils + kids if s] + [max(inaccessible, default=0)])
    F = _node_set(inaccessible, n, "inaccessible nodes")
    accessible = frozenset(range(1, n + 1)) - F
    _check_groups(dils, accessible, "dilation set")
    _check_groups(kids, accessible, "child SCC")
    child_index = {}
    for c, comp in enumerate(kids):
        for v in comp:
            if v in child_index:
                raise ValueError("child SCCs must be disjoint")
            child_index[v] = c
    cands = [sorted(v for v in d if v in accessible) for d in dils]
    k, total, endpoint, used_hub = _route(
        cands, cands, n, child_index, len(kids), accessible, False
    )
    if total < len(dils):
        raise InfeasibleError("dilation sets admit no distinct accessible representatives")
    plan = _assemble(len(dils), kids, endpoint, used_hub, child_index, accessible)
    assert plan.n_min == len(dils) + len(kids) - k
    return PairingResult(k, plan.n_min, plan.pairings, plan.drivers, plan.types)

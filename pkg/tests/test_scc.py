import random

import pytest
from hypothesis import given, settings

from drivernodes import Digraph, child_sccs, dfs_forest, scc_decompose

from conftest import (
    G2_CHILDREN,
    brute_child_sccs,
    brute_sccs,
    chain,
    cycle,
    digraphs,
    random_er,
)


def test_dfs_two_cycle():
    a = dfs_forest(Digraph(2, [(1, 2), (2, 1)]), [1, 2])
    assert (a.start[1], a.end[1]) == (1, 4)
    assert (a.start[2], a.end[2]) == (2, 3)
    assert a.pi[2] == 1 and a.pi[1] is None


def test_dfs_single_node():
    a = dfs_forest(Digraph(1), [1])
    assert (a.start[1], a.end[1]) == (1, 2)
    assert a.pi[1] is None and a.visited[1]


def test_dfs_chain():
    a = dfs_forest(chain(3), [1, 2, 3])
    assert [(a.start[v], a.end[v]) for v in (1, 2, 3)] == [(1, 6), (2, 5), (3, 4)]


def test_dfs_respects_root_order():
    a = dfs_forest(chain(3), [3, 2, 1])
    assert a.roots == [3, 2, 1]
    assert [(a.start[v], a.end[v]) for v in (3, 2, 1)] == [(1, 2), (3, 4), (5, 6)]


def test_dfs_rejects_bad_order():
    with pytest.raises(ValueError):
        dfs_forest(chain(3), [1, 1, 2])


@settings(max_examples=200)
@given(digraphs(max_n=9))
def test_dfs_intervals_nest(g):
    a = dfs_forest(g)
    stamps = sorted([a.start[v] for v in g.nodes] + [a.end[v] for v in g.nodes])
    assert stamps == list(range(1, 2 * g.n + 1))
    for u in g.nodes:
        assert a.start[u] < a.end[u]
        for v in g.nodes:
            iu, iv = (a.start[u], a.end[u]), (a.start[v], a.end[v])
            disjoint = iu[1] < iv[0] or iv[1] < iu[0]
            nested = (iu[0] < iv[0] and iv[1] < iu[1]) or (iv[0] < iu[0] and iu[1] < iv[1])
            assert u == v or disjoint or nested


def test_g1_sccs(g1):
    d = scc_decompose(g1)
    assert set(d.components) == {frozenset({1, 2}), *(frozenset({v}) for v in (3, 4, 5, 6))}
    assert child_sccs(d) == [{1, 2}]


def test_cycle_single_child():
    d = scc_decompose(cycle(3))
    assert d.components == [{1, 2, 3}]
    assert d.child_flags == [True]


def test_chain_sccs():
    d = scc_decompose(chain(3))
    assert set(d.components) == {frozenset({1}), frozenset({2}), frozenset({3})}
    assert child_sccs(d) == [{1}]


def test_example2_children(g2):
    assert sorted(map(sorted, child_sccs(scc_decompose(g2)))) == sorted(map(sorted, G2_CHILDREN))


def test_order_and_precedes():
    d = scc_decompose(chain(3))
    c = d.component_of
    assert (c[1], c[2]) in d.order and (c[1], c[3]) not in d.order
    assert d.precedes(c[1], c[3])
    assert not d.precedes(c[3], c[1])
    assert not d.precedes(c[1], c[1])


@settings(max_examples=200)
@given(digraphs(max_n=9))
def test_decomposition_invariants(g):
    d = scc_decompose(g)
    covered = [v for comp in d.components for v in comp]
    assert sorted(covered) == list(g.nodes)
    assert any(d.child_flags)
    for a, b in d.order:
        assert a != b
        assert not d.precedes(b, a)  # condensation is acyclic
    for idx, comp in enumerate(d.components):
        entering = any(j in comp and i not in comp for i, j in g.edges)
        assert d.child_flags[idx] == (not entering)


def test_against_pairwise_reachability():
    rng = random.Random(4)
    for _ in range(300):
        g = random_er(rng)
        d = scc_decompose(g)
        assert set(d.components) == brute_sccs(g)
        assert set(d.children) == brute_child_sccs(g)


def test_deep_graph_no_recursion_limit():
    d = scc_decompose(cycle(20000))
    assert len(d.components) == 1

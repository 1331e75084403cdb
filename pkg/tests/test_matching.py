import random

import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings
from scipy.sparse.csgraph import maximum_bipartite_matching

from drivernodes import (
    Digraph,
    Matching,
    bipartite_of,
    dilation_sets,
    maximum_matching,
    s_rank,
    s_rank_with_drivers,
    unmatched_nodes,
)
from drivernodes.matching import has_augmenting_path, hopcroft_karp

from conftest import (
    brute_max_matching_size,
    brute_srank_with_drivers,
    cycle,
    digraphs,
    random_er,
)


def test_g1_matching(g1):
    m = maximum_matching(bipartite_of(g1))
    assert len(m) == 2
    assert m.links == {(1, 2), (2, 1)}
    assert unmatched_nodes(m) == {3, 4, 5, 6}


def test_empty_graph_matching():
    m = maximum_matching(bipartite_of(Digraph(1)))
    assert len(m) == 0
    assert unmatched_nodes(m) == {1}
    assert unmatched_nodes(Matching(3, frozenset())) == {1, 2, 3}


@pytest.mark.parametrize("n", [1, 2, 5, 17])
def test_cycle_perfect(n):
    m = maximum_matching(bipartite_of(cycle(n)))
    assert len(m) == n
    assert unmatched_nodes(m) == frozenset()
    assert s_rank(cycle(n)) == n


def test_s_rank_examples(g1):
    assert s_rank(g1) == 2
    assert s_rank(Digraph(4)) == 0


def test_s_rank_with_drivers_examples(g1):
    assert s_rank_with_drivers(g1, {3}) == 3
    # frozen from exhaustive matching on the augmented bipartite graph
    assert brute_srank_with_drivers(g1, {1, 3}) == 4
    assert s_rank_with_drivers(g1, {1, 3}) == 4
    assert s_rank_with_drivers(g1, set()) == s_rank(g1)


def test_s_rank_with_drivers_range():
    with pytest.raises(ValueError):
        s_rank_with_drivers(cycle(3), {4})


def test_matching_rejects_shared_endpoint():
    with pytest.raises(ValueError):
        Matching(3, frozenset({(1, 2), (1, 3)}))


def test_hopcroft_karp_needs_augmentation():
    # greedy takes 0-0, forcing one augmenting phase
    mate_l, mate_r = hopcroft_karp([[0, 1], [0]], 2, 2)
    assert mate_l == [1, 0] and mate_r == [1, 0]


@settings(max_examples=200)
@given(digraphs(max_n=6))
def test_maximum_matches_brute_force(g):
    b = bipartite_of(g)
    m = maximum_matching(b)
    assert m.links <= g.edges
    assert len(m) == brute_max_matching_size(g.edges)
    assert not has_augmenting_path(b, m)


@settings(max_examples=100)
@given(digraphs(max_n=5))
def test_s_rank_with_drivers_brute_force(g):
    rng = random.Random(g.n * 31 + len(g.edges))
    drivers = {v for v in g.nodes if rng.random() < 0.4}
    assert s_rank_with_drivers(g, drivers) == brute_srank_with_drivers(g, drivers)


def test_matching_size_against_scipy():
    rng = random.Random(11)
    for _ in range(100):
        g = random_er(rng, 2, 60, ps=(0.02, 0.05, 0.1))
        rows = [i - 1 for i, _ in g.edges]
        cols = [j - 1 for _, j in g.edges]
        mat = sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
        ref = int((maximum_bipartite_matching(mat, perm_type="column") >= 0).sum())
        assert s_rank(g) == ref


def test_single_driver_size_law():
    rng = random.Random(5)
    for _ in range(150):
        g = random_er(rng)
        base = s_rank(g)
        in_dilation = set().union(*[d.members for d in dilation_sets(g)])
        for v in g.nodes:
            expect = base + 1 if v in in_dilation else base
            assert s_rank_with_drivers(g, {v}) == expect


@given(digraphs(max_n=7))
def test_s_rank_bounds(g):
    assert 0 <= s_rank(g) <= g.n
    assert s_rank_with_drivers(g, g.nodes) == g.n

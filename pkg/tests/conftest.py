import itertools
import random
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from drivernodes import Digraph, parse_graph

DATA = Path(__file__).parent / "data"

G1_TEXT = "1 2\n2 1\n2 3\n2 4\n1 5\n1 6"

# A 16-node graph realising the second worked example: child SCCs
# {1,2,3,4},{9,10},{11,12},{13,14},{15,16}; dilation sets
# {1,3,5,10},{2,4,6,12},{1,3,7,14},{2,4,8,16}. Nodes 5..8 are parents.
G2_EDGES = [
    (1, 2), (2, 1), (3, 4), (4, 3), (1, 4), (4, 1), (3, 2),
    (2, 5), (9, 5), (2, 7), (13, 7), (1, 6), (11, 6), (1, 8), (15, 8),
    (9, 10), (10, 9), (11, 12), (12, 11), (13, 14), (14, 13), (15, 16), (16, 15),
]
G2_DILATIONS = [{1, 3, 5, 10}, {2, 4, 6, 12}, {1, 3, 7, 14}, {2, 4, 8, 16}]
G2_CHILDREN = [{1, 2, 3, 4}, {9, 10}, {11, 12}, {13, 14}, {15, 16}]
G2_INACCESSIBLE = {2, 4, 5, 12, 15}


@pytest.fixture
def g1():
    return parse_graph(G1_TEXT)


@pytest.fixture
def g2():
    return Digraph(16, G2_EDGES)


def cycle(n):
    return Digraph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def chain(n):
    return Digraph(n, [(i, i + 1) for i in range(1, n)])


def random_er(rng: random.Random, n_lo=2, n_hi=10, ps=(0.1, 0.2, 0.3, 0.5)):
    """Small ER digraph with loops allowed, drawn from a stdlib RNG."""
    n = rng.randint(n_lo, n_hi)
    p = rng.choice(ps)
    edges = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
             if i != j and rng.random() < p]
    return Digraph(n, edges)


@st.composite
def digraphs(draw, max_n=7, loops=True):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if loops or i != j]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=3 * n, unique=True)) if pairs else []
    return Digraph(n, edges)


# -- independent oracles ----------------------------------------------------------


def reachability_matrix(g: Digraph) -> np.ndarray:
    """Reflexive-transitive closure by repeated boolean squaring."""
    R = np.eye(g.n, dtype=bool)
    for i, j in g.edges:
        R[i - 1, j - 1] = True
    while True:
        nxt = R | ((R.astype(int) @ R.astype(int)) > 0)
        if (nxt == R).all():
            return R
        R = nxt


def brute_sccs(g: Digraph) -> set[frozenset]:
    R = reachability_matrix(g)
    mutual = R & R.T
    return {frozenset(int(k) + 1 for k in np.nonzero(mutual[v])[0]) for v in range(g.n)}


def brute_child_sccs(g: Digraph) -> set[frozenset]:
    out = set()
    for comp in brute_sccs(g):
        if not any(j in comp and i not in comp for i, j in g.edges):
            out.add(comp)
    return out


def all_matchings(links):
    """Every matching (as a frozenset of links) by exhaustive recursion."""
    links = sorted(links)

    def rec(k, used_l, used_r, cur):
        if k == len(links):
            yield frozenset(cur)
            return
        yield from rec(k + 1, used_l, used_r, cur)
        a, b = links[k]
        if a not in used_l and b not in used_r:
            cur.append(links[k])
            yield from rec(k + 1, used_l | {a}, used_r | {b}, cur)
            cur.pop()

    yield from rec(0, frozenset(), frozenset(), [])


def brute_max_matching_size(links) -> int:
    return max(len(m) for m in all_matchings(links))


def all_maximum_matchings(g: Digraph):
    ms = list(all_matchings(g.edges))
    best = max(len(m) for m in ms)
    return [m for m in ms if len(m) == best]


def brute_srank_with_drivers(g: Digraph, drivers) -> int:
    links = set(g.edges) | {(("u", d), d) for d in drivers}
    # tuple keys keep input nodes apart from state nodes on the left side
    links = {((0, a) if isinstance(a, int) else (1, a[1]), b) for a, b in links}
    return brute_max_matching_size(links)


def subsets(items):
    items = list(items)
    return itertools.chain.from_iterable(
        itertools.combinations(items, r) for r in range(len(items) + 1)
    )


# -- acceptance summary --------------------------------------------------------------

ACCEPTANCE: dict[str, bool] = {}


def record(criterion: str, ok: bool) -> bool:
    """Store a criterion outcome; a criterion fails if any of its parts fails."""
    ACCEPTANCE[criterion] = ACCEPTANCE.get(criterion, True) and bool(ok)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: (int(s.split()[0].rstrip("abcde")), s)):
        terminalreporter.write_line(f"{'PASS' if ACCEPTANCE[name] else 'FAIL'}  {name}")

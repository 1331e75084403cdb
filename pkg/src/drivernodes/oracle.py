"""Independent checks: exhaustive minimal driver search and exact numeric rank.

Numeric realisations live in the prime field GF(p), p = 2**31 - 1, so ranks are
exact. A random realisation attains the generic (structural) rank except with
probability at most ``deg / p`` by the Schwartz-Zippel lemma.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .drivers import input_matrix_structure, verify_structural_controllability
from .graph import Digraph

__all__ = [
    "PRIME",
    "BruteForceResult",
    "NumericCheck",
    "TooLargeError",
    "brute_force_min_drivers",
    "numeric_controllability_check",
    "random_realization",
    "gf_rank",
    "controllability_matrix",
]

PRIME = 2**31 - 1


class TooLargeError(ValueError):
    """Graph too large for exhaustive enumeration."""


@dataclass(frozen=True)
class BruteForceResult:
    feasible: bool
    count: int | None = None
    witness: tuple[int, ...] | None = None


def brute_force_min_drivers(
    g: Digraph, inaccessible: Iterable[int] = (), limit: int = 12
) -> BruteForceResult:
    """Smallest accessible driver set passing the structural verifier.

    Subsets are tried by increasing size, lexicographically within a size.
    """
    if g.n > limit:
        raise TooLargeError(f"n={g.n} exceeds brute-force limit {limit}")
    F = set(inaccessible)
    pool = [v for v in g.nodes if v not in F]
    for size in range(1, len(pool) + 1):
        for subset in combinations(pool, size):
            if verify_structural_controllability(g, subset).controllable:
                return BruteForceResult(True, size, subset)
    return BruteForceResult(False)


# -- GF(p) linear algebra -----------------------------------------------------


def gf_rank(mat: np.ndarray, p: int = PRIME) -> int:
    """Rank over GF(p) by Gaussian elimination on Python integers."""
    rows = [[int(x) % p for x in r] for r in np.asarray(mat, dtype=object)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def random_realization(
    g: Digraph, drivers: Iterable[int], rng: np.random.Generator, p: int = PRIME
) -> tuple[np.ndarray, np.ndarray]:
    """Random nonzero GF(p) entries on the state and input patterns.

    Edge ``i -> j`` fills ``A[j-1, i-1]``. Arrays have ``object`` dtype so
    products stay exact.
    """
    n = g.n
    A = np.zeros((n, n), dtype=object)
    for i, j in sorted(g.edges):
        A[j - 1, i - 1] = int(rng.integers(1, p))
    pattern = input_matrix_structure(n, drivers)
    B = np.zeros(pattern.shape, dtype=object)
    for r, c in zip(*np.nonzero(pattern)):
        B[r, c] = int(rng.integers(1, p))
    return A, B


def controllability_matrix(A: np.ndarray, B: np.ndarray, p: int = PRIME) -> np.ndarray:
    """``[B, AB, ..., A^(n-1) B]`` reduced mod p."""
    blocks = [B % p]
    for _ in range(A.shape[0] - 1):
        blocks.append(A.dot(blocks[-1]) % p)
    return np.hstack(blocks)


@dataclass(frozen=True)
class NumericCheck:
    full_rank: bool
    max_rank: int
    ranks: tuple[int, ...]

    def __str__(self) -> str:
        if self.full_rank:
            return "full-rank"
        return f"rank-deficient (max rank {self.max_rank})"


def numeric_controllability_check(
    g: Digraph, drivers: Iterable[int], trials: int = 5, seed: int = 0
) -> NumericCheck:
    """Controllability-matrix rank of random GF(p) realisations.

    Stops at the first full-rank trial; any such trial certifies
    controllability of the pattern.
    """
    drivers = sorted(set(drivers))
    if not drivers:
        raise ValueError("driver set must be nonempty")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(np.uint64(seed & (2**64 - 1)))
    ranks = []
    for _ in range(trials):
        A, B = random_realization(g, drivers, rng)
        r = gf_rank(controllability_matrix(A, B))
        ranks.append(r)
        if r == g.n:
            break
    return NumericCheck(max(ranks) == g.n, max(ranks), tuple(ranks))

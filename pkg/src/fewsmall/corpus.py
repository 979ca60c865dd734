"""Seeded random instances for tests, benchmarks and the ``corpus`` command.

Instance ``i`` of a corpus with seed ``s`` depends only on (s, i), so corpora
can be regenerated piecewise.  Large items are drawn by rejection so that the
3-incompatibility (or 3-covering) promise holds and all items are distinct.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .model import (CoveringInstance, CoveringPredicate, HittingInstance, ItemVector, KnapsackInstance,
                    PackingInstance, fits, vector_sum)
from .rng import CORPUS, repeat_rng

# corpus kinds get disjoint index ranges inside the CORPUS stream
_KIND_OFFSET = {"pack": 0, "knapsack": 1 << 40, "cover": 2 << 40, "hitting": 3 << 40, "cnf": 4 << 40}


@dataclass(frozen=True)
class CorpusSpec:
    max_items: int = 8
    max_small: int = 4
    max_dim: int = 3
    max_bins: int = 3
    max_denominator: int = 12


def _rng(kind: str, seed: int, index: int) -> np.random.Generator:
    return repeat_rng(seed, _KIND_OFFSET[kind] + index, CORPUS)


def _rational(rng: np.random.Generator, max_den: int, lo: Fraction = Fraction(0), hi: Fraction = Fraction(1)) -> Fraction:
    den = int(rng.integers(1, max_den + 1))
    nums = [a for a in range(0, 2 * den + 1) if lo <= Fraction(a, den) <= hi]
    if not nums:
        return lo
    return Fraction(int(nums[int(rng.integers(0, len(nums)))]), den)


def _vector(rng, d: int, max_den: int, hi: Fraction) -> ItemVector:
    return tuple(_rational(rng, max_den, Fraction(0), hi) for _ in range(d))


def _promise_ok_packing(large: list[ItemVector], cand: ItemVector, d: int) -> bool:
    return all(not fits((a, b, cand), d) for a, b in itertools.combinations(large, 2))


def _draw_items(rng, n_large: int, k: int, d: int, max_den: int,
                large_ok: Callable[[list[ItemVector], ItemVector], bool],
                large_hi: Fraction, small_hi: Fraction) -> list[ItemVector]:
    large: list[ItemVector] = []
    seen: set[ItemVector] = set()
    for _ in range(n_large):
        for _attempt in range(200):
            cand = _vector(rng, d, max_den, large_hi)
            if cand not in seen and large_ok(large, cand):
                break
        else:
            continue  # give up on this slot; the instance just has fewer large items
        large.append(cand)
        seen.add(cand)
    small: list[ItemVector] = []
    for _ in range(k):
        for _attempt in range(200):
            cand = _vector(rng, d, max_den, small_hi)
            if cand not in seen:
                small.append(cand)
                seen.add(cand)
                break
    return large + small


def _random_packing(kind: str, seed: int, index: int, spec: CorpusSpec) -> PackingInstance:
    rng = _rng(kind, seed, index)
    n = int(rng.integers(1, spec.max_items + 1))
    k = int(rng.integers(0, min(spec.max_small, n) + 1))
    d = int(rng.integers(1, spec.max_dim + 1))
    bins = int(rng.integers(1, spec.max_bins + 1))
    items = _draw_items(rng, n - k, k, d, spec.max_denominator,
                        lambda large, c: _promise_ok_packing(large, c, d), Fraction(1), Fraction(1, 2))
    n_large = len(items) - min(k, len(items))
    return PackingInstance(tuple(items), frozenset(range(n_large, len(items))), bins, d)


def random_packing(seed: int, index: int, spec: CorpusSpec = CorpusSpec()) -> PackingInstance:
    return _random_packing("pack", seed, index, spec)


def random_knapsack(seed: int, index: int, spec: CorpusSpec = CorpusSpec(7, 3, 2, 2, 12),
                    max_profit: int = 9) -> KnapsackInstance:
    base = _random_packing("knapsack", seed, index, spec)
    rng = _rng("knapsack", seed, index + (1 << 39))
    profits = tuple(int(p) for p in rng.integers(1, max_profit + 1, size=base.n))
    goal = int(rng.integers(1, max(sum(profits), 1) + 1))
    return KnapsackInstance(base, profits, goal)


def random_covering(seed: int, index: int, predicate: CoveringPredicate = CoveringPredicate(),
                    spec: CorpusSpec = CorpusSpec(7, 3, 2, 3, 12)) -> CoveringInstance:
    rng = _rng("cover", seed, index)
    n = int(rng.integers(1, spec.max_items + 1))
    k = int(rng.integers(0, min(spec.max_small, n) + 1))
    d = int(rng.integers(1, spec.max_dim + 1))
    bins = int(rng.integers(1, spec.max_bins + 1))

    def covers(large, cand):
        return all(predicate(vector_sum((a, b, cand), d)) for a, b in itertools.combinations(large, 2))

    items = _draw_items(rng, n - k, k, d, spec.max_denominator, covers, Fraction(1), Fraction(1, 2))
    n_large = len(items) - min(k, len(items))
    return CoveringInstance(tuple(items), frozenset(range(n_large, len(items))), bins, predicate, d)


def random_hitting(seed: int, index: int, max_nodes: int = 8, max_k: int = 3) -> HittingInstance:
    rng = _rng("hitting", seed, index)
    nodes = int(rng.integers(1, max_nodes // 2 + 1)) * 2
    pairs = [(u, v) for u in range(nodes) for v in range(u + 1, nodes)]
    density = float(rng.uniform(0.3, 0.9))
    edges = [p for p in pairs if rng.random() < density] or [pairs[0]]
    k = int(rng.integers(0, max_k + 1))
    constraints = []
    for _ in range(k):
        size = int(rng.integers(1, min(3, len(edges)) + 1))
        constraints.append(frozenset(int(e) for e in rng.choice(len(edges), size=size, replace=False)))
    return HittingInstance(nodes, tuple(edges), tuple(constraints))


def packing_corpus(seed: int, count: int, spec: CorpusSpec = CorpusSpec()) -> list[PackingInstance]:
    return [random_packing(seed, i, spec) for i in range(count)]


def random_cnf_clauses(seed: int, index: int, max_vars: int = 6, max_clauses: int = 8,
                       width: Optional[int] = None) -> tuple[int, list[tuple[int, ...]]]:
    """A random CNF as (variable count, clauses of signed literals); clauses are non-tautological."""
    rng = _rng("cnf", seed, index)
    n = int(rng.integers(1, max_vars + 1))
    m = int(rng.integers(0, max_clauses + 1))
    clauses = []
    for _ in range(m):
        w = width or int(rng.integers(1, min(3, n) + 1))
        chosen = rng.choice(n, size=min(w, n), replace=False)
        clauses.append(tuple(int(v + 1) * (1 if rng.random() < 0.5 else -1) for v in sorted(chosen)))
    return n, clauses

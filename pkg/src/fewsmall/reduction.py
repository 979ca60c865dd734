"""Reduction from vector bin packing with few small items to exact-weight perfect matching.

Every large item (plus all-zero dummies up to 2*bins nodes) becomes a node.  Two
nodes are joined by one parallel edge per subset of small items that fits into a
bin together with them; the edge weight encodes that subset.  A perfect matching
of weight ``target_weight(k)`` is exactly a packing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .graph import Edge, WeightedMultigraph
from .model import ItemVector, PackingInstance
from .weights import encode_subset, target_weight


@dataclass(frozen=True)
class ReductionOutput:
    graph: WeightedMultigraph
    target: int
    trivial_answer: Optional[bool] = None
    dummies: int = 0


def subset_sums(small: Sequence[ItemVector], d: int) -> list[tuple[Fraction, ...]]:
    """Coordinate sums of all 2^k subsets, indexed by mask, built in Gray-code order."""
    k = len(small)
    sums: list[tuple[Fraction, ...]] = [()] * (1 << k)
    cur = [Fraction(0)] * d
    sums[0] = tuple(cur)
    prev = 0
    for i in range(1, 1 << k):
        gray = i ^ (i >> 1)
        bit = (gray ^ prev).bit_length() - 1
        vec = small[bit]
        if gray & (1 << bit):
            cur = [a + b for a, b in zip(cur, vec)]
        else:
            cur = [a - b for a, b in zip(cur, vec)]
        sums[gray] = tuple(cur)
        prev = gray
    return sums


def _fitting(slack: Sequence[Fraction], sums: Sequence[tuple[Fraction, ...]]) -> list[int]:
    if any(s < 0 for s in slack):
        return []
    return [mask for mask, vec in enumerate(sums) if all(a <= b for a, b in zip(vec, slack))]


def enumerate_fitting_masks(pair: tuple[ItemVector, ItemVector], small: Sequence[ItemVector],
                            sums: Optional[Sequence[tuple[Fraction, ...]]] = None) -> list[int]:
    """Masks of every small subset that fits in one bin with both items of ``pair``.

    All fitting subsets are returned, not just the maximal ones.
    """
    a, b = pair
    d = len(a)
    if len(b) != d or any(len(v) != d for v in small):
        raise ValueError("dimension mismatch")
    if sums is None:
        sums = subset_sums(small, d)
    slack = [1 - x - y for x, y in zip(a, b)]
    return _fitting(slack, sums)


def reduce_packing_to_matching(inst: PackingInstance) -> ReductionOutput:
    k = inst.k
    target = target_weight(k)
    large = inst.large_items()
    if len(large) > 2 * inst.bins:
        # each bin holds at most two large items
        return ReductionOutput(WeightedMultigraph(0), target, trivial_answer=False)
    d = inst.dimension
    dummies = 2 * inst.bins - len(large)
    nodes = large + [tuple(Fraction(0) for _ in range(d))] * dummies
    small = inst.small_items()
    sums = subset_sums(small, d)
    edges = []
    for u in range(len(nodes)):
        for v in range(u + 1, len(nodes)):
            for mask in enumerate_fitting_masks((nodes[u], nodes[v]), small, sums):
                edges.append(Edge(u, v, encode_subset(mask, k), 0, mask))
    return ReductionOutput(WeightedMultigraph(len(nodes), tuple(edges)), target, None, dummies)

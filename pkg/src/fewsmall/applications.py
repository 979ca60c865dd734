"""Knapsack, bin covering and matching with hitting constraints, lowered onto matchings.

Graph nodes are laid out as real large items first, then all-zero dummies,
then blocker vertices.  Blockers soak up whatever does not sit in one of the
paired bins: dropped items for knapsack, items of bins that hold three or more
large items for covering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .graph import Edge, WeightedMultigraph
from .matching import Engine, EngineConfig, exact_matching_decide, exact_matching_max_cost
from .model import CoveringInstance, HittingInstance, KnapsackInstance, vector_sum
from .reduction import enumerate_fitting_masks, subset_sums
from .sieve import sieve_decide
from .weights import encode_subset, target_weight


class EngineUnsupported(ValueError):
    """The requested engine cannot answer this problem."""


@dataclass(frozen=True)
class KnapsackGraph:
    graph: WeightedMultigraph
    target: int
    large: int
    dummies: int
    blockers: int


def knapsack_graph(inst: KnapsackInstance) -> KnapsackGraph:
    """Matching graph whose maximum cost at the partition target is the best packable profit.

    There are 2*bins dummies and one blocker per large item.  A bin holding x
    large items uses 2-x dummies, so whatever the packing, the leftover large
    items and dummies number exactly |large|, one per blocker.  Dropped small
    items ride on the first blocker's edge (every subset, cost 0); the other
    blockers only take the empty subset.  With no large items one extra dummy
    and blocker keep that outlet available.
    """
    base = inst.base
    k = base.k
    d = base.dimension
    large_idx = base.large_indices
    small_idx = base.small_indices
    small = base.small_items()
    n_large = len(large_idx)
    spare = 1 if n_large == 0 else 0
    dummies = 2 * base.bins + spare
    blockers = n_large + spare
    zero = tuple(Fraction(0) for _ in range(d))
    vectors = [base.items[i] for i in large_idx] + [zero] * dummies
    node_profit = [inst.profits[i] for i in large_idx] + [0] * dummies
    small_profit = [inst.profits[i] for i in small_idx]
    mask_profit = [sum(p for b, p in enumerate(small_profit) if mask >> b & 1) for mask in range(1 << k)]
    sums = subset_sums(small, d)
    edges: list[Edge] = []
    for u in range(len(vectors)):
        for v in range(u + 1, len(vectors)):
            pair_profit = node_profit[u] + node_profit[v]
            for mask in enumerate_fitting_masks((vectors[u], vectors[v]), small, sums):
                edges.append(Edge(u, v, encode_subset(mask, k), pair_profit + mask_profit[mask], mask))
    first_blocker = len(vectors)
    for b in range(first_blocker, first_blocker + blockers):
        masks = range(1 << k) if b == first_blocker else (0,)
        for u in range(len(vectors)):
            for mask in masks:
                edges.append(Edge(u, b, encode_subset(mask, k), 0, mask))
    graph = WeightedMultigraph(first_blocker + blockers, tuple(edges))
    return KnapsackGraph(graph, target_weight(k), n_large, dummies, blockers)


def knapsack_max_profit(inst: KnapsackInstance, cfg: EngineConfig = EngineConfig(),
                        goal: Optional[int] = None) -> int:
    """Best profit of a subset packable into the bins (Monte-Carlo: never overestimates)."""
    if cfg.engine is not Engine.PFAFFIAN:
        raise EngineUnsupported("knapsack needs maximum-cost matchings, which only the pfaffian engine provides")
    kg = knapsack_graph(inst)
    best = exact_matching_max_cost(kg.graph, kg.target, cfg, goal=goal, cost_bound=sum(inst.profits))
    # the empty packing is always a matching, so None only follows from a wrong NO
    return best or 0


def solve_knapsack(inst: KnapsackInstance, cfg: EngineConfig = EngineConfig()) -> bool:
    return knapsack_max_profit(inst, cfg, goal=inst.goal_profit) >= inst.goal_profit


# ---------------------------------------------------------------------------
# covering

@dataclass(frozen=True)
class CoveringGuess:
    bins0: int
    bins1: int
    bins2: int

    @property
    def paired(self) -> int:
        return self.bins0 + self.bins1 + self.bins2


def covering_guesses(n_large: int, bins: int) -> Iterator[CoveringGuess]:
    """Every split of the paired bins by their number of large items that leaves enough triples."""
    for l0 in range(bins + 1):
        for l1 in range(bins + 1 - l0):
            for l2 in range(bins + 1 - l0 - l1):
                rest = n_large - l1 - 2 * l2
                if rest >= 0 and l0 + l1 + l2 + rest // 3 >= bins:
                    yield CoveringGuess(l0, l1, l2)


def covering_graph(inst: CoveringInstance, guess: CoveringGuess) -> WeightedMultigraph:
    """Pairs joined per small subset that makes the bin covered; blockers take the rest.

    Blocker edges carry every subset of small items: in a monotone covering
    problem those items can ride along in any covered bin.
    """
    k = inst.k
    d = inst.dimension
    large = [inst.items[i] for i in inst.large_indices]
    small = [inst.items[i] for i in inst.small_indices]
    dummies = 2 * guess.bins0 + guess.bins1
    blockers = len(large) - guess.bins1 - 2 * guess.bins2
    zero = tuple(Fraction(0) for _ in range(d))
    vectors = large + [zero] * dummies
    sums = subset_sums(small, d)
    pred = inst.predicate
    edges: list[Edge] = []
    for u in range(len(vectors)):
        for v in range(u + 1, len(vectors)):
            pair = vector_sum((vectors[u], vectors[v]), d)
            for mask, extra in enumerate(sums):
                if pred(tuple(a + b for a, b in zip(pair, extra))):
                    edges.append(Edge(u, v, encode_subset(mask, k), 0, mask))
    first_blocker = len(vectors)
    for b in range(first_blocker, first_blocker + blockers):
        for u in range(len(large)):
            for mask in range(1 << k):
                edges.append(Edge(u, b, encode_subset(mask, k), 0, mask))
    return WeightedMultigraph(first_blocker + blockers, tuple(edges))


def solve_covering(inst: CoveringInstance, cfg: EngineConfig = EngineConfig()) -> bool:
    if cfg.engine is not Engine.PFAFFIAN:
        raise EngineUnsupported("covering masks are not closed under subsets; use the pfaffian engine")
    n_large = len(inst.large_indices)
    if inst.n < inst.bins:
        return False
    target = target_weight(inst.k)
    # guesses with equal (paired bins, blocker count) give the same graph
    seen: set[tuple[int, int]] = set()
    for guess in covering_guesses(n_large, inst.bins):
        key = (guess.paired, n_large - guess.bins1 - 2 * guess.bins2)
        if key in seen:
            continue
        seen.add(key)
        if exact_matching_decide(covering_graph(inst, guess), target, cfg):
            return True
    return False


# ---------------------------------------------------------------------------
# hitting

def hitting_graph(inst: HittingInstance) -> WeightedMultigraph:
    """Original edges at weight 0 plus one copy of e per constraint containing it."""
    k = inst.k
    edges = [Edge(u, v, 0, 0, 0) for u, v in inst.edges]
    for i, members in enumerate(inst.constraints):
        for e in sorted(members):
            u, v = inst.edges[e]
            edges.append(Edge(u, v, encode_subset(1 << i, k), 0, 1 << i))
    return WeightedMultigraph(inst.nodes, tuple(edges))


def solve_hitting(inst: HittingInstance, cfg: EngineConfig = EngineConfig()) -> bool:
    if inst.nodes % 2:
        return False
    graph = hitting_graph(inst)
    if cfg.engine is Engine.GF2_SIEVE:
        # every edge carries at most one constraint bit, so covering equals partitioning
        return sieve_decide(graph, inst.k, cfg)
    return exact_matching_decide(graph, target_weight(inst.k), cfg)

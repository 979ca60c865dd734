"""Monte-Carlo exact-weight perfect matching in multigraphs.

Each repeat draws an isolation cost c({i,j}) in {1, ..., 2*C(N,2)} for every
node pair and builds the skew matrix with

    A[i, j] = lam**c({i,j}) * sum(x**w(e) for parallel edges e between i and j)

with lam = 2 * m**N.  A perfect matching of weight t exists iff the x^t
coefficient of pf(A) can be nonzero; when the cheapest set of node pairs (by
isolation cost) is unique, its term owns the lowest nonzero lam-ary digit and
cannot be cancelled.  Nonzero therefore always means YES; a NO is wrong with
probability at most 1/2 per repeat.

That lowest digit counts the edge choices on one fixed set of N/2 pairs, so
any lam above mu**(N/2) (mu = largest number of parallel edges on a pair) works
just as well; :attr:`IsolationBase.MULTIPLICITY` uses 2 * mu**(N/2), which keeps
the integers several times shorter.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .graph import WeightedMultigraph
from .pfaffian import SkewPolyMatrix, pfaffian_coefficient
from .rng import ISOLATION, repeat_rng


class Engine(enum.Enum):
    PFAFFIAN = "pfaffian"
    GF2_SIEVE = "gf2"


class IsolationBase(enum.Enum):
    PAPER = "paper"                # 2 * m**N
    MULTIPLICITY = "multiplicity"  # 2 * mu**(N/2)


@dataclass(frozen=True)
class EngineConfig:
    repeats: Optional[int] = None
    seed: int = 0
    engine: Engine = Engine.PFAFFIAN
    confidence: float = 2.0
    base: IsolationBase = IsolationBase.MULTIPLICITY

    def __post_init__(self):
        if self.repeats is not None and self.repeats < 1:
            raise ValueError("repeats must be at least 1")

    def repeats_for(self, node_count: int) -> int:
        if self.repeats is not None:
            return self.repeats
        return max(1, math.ceil(self.confidence * math.log2(node_count + 2)))


@dataclass(frozen=True)
class CostAssignment:
    """Isolation costs for all node pairs, drawn in lexicographic pair order."""

    cost: dict[tuple[int, int], int]
    seed: int
    index: int

    @classmethod
    def draw(cls, node_count: int, seed: int, index: int) -> "CostAssignment":
        pairs = [(i, j) for i in range(node_count) for j in range(i + 1, node_count)]
        top = 2 * len(pairs)
        rng = repeat_rng(seed, index, ISOLATION)
        values = rng.integers(1, top + 1, size=len(pairs)) if pairs else []
        return cls({p: int(c) for p, c in zip(pairs, values)}, seed, index)


def isolation_base(graph: WeightedMultigraph, base: IsolationBase = IsolationBase.PAPER) -> int:
    """The digit base lam.

    PAPER: 2 * m**N, with m taken as at least 2 so that lam > m**(N/2) holds
    for every m.  MULTIPLICITY: 2 * mu**(N/2).
    """
    if base is IsolationBase.PAPER:
        return 2 * max(graph.m, 2) ** graph.node_count
    return 2 * max(graph.max_multiplicity(), 1) ** (graph.node_count // 2)


def max_isolation_total(node_count: int) -> int:
    pairs = node_count * (node_count - 1) // 2
    return (node_count // 2) * 2 * pairs


def coefficient_bit_ceiling(node_count: int, m: int, t: int, max_exponent: int, lam: int) -> int:
    """Bit length no intermediate value of the Pfaffian program may exceed.

    Entries have at most ``max_exponent * log2(lam) + log2(m)`` bits; each of
    the N/2 layers multiplies by one entry, convolves at most t+1 terms and
    sums over at most N^2 predecessor states.
    """
    entry_bits = max_exponent * lam.bit_length() + max(m, 1).bit_length()
    per_step = entry_bits + (t + 1).bit_length() + 2 * max(node_count, 1).bit_length() + 1
    return (node_count // 2) * per_step + 1


def _build_matrix(graph: WeightedMultigraph, t: int, costs: CostAssignment, lam: int) -> SkewPolyMatrix:
    A = SkewPolyMatrix(graph.node_count, t)
    for (i, j), edges in graph.pair_edges().items():
        coeffs = [0] * (t + 1)
        for e in edges:
            if e.weight <= t:
                coeffs[e.weight] += 1
        if any(coeffs):
            scale = lam ** costs.cost[i, j]
            A[i, j] = [scale * c for c in coeffs]
    return A


def _trivial(graph: WeightedMultigraph, t: int) -> Optional[bool]:
    if t < 0 or graph.node_count % 2:
        return False
    if graph.node_count == 0:
        return t == 0
    if graph.m == 0:
        return False
    return None


def exact_matching_coefficient(graph: WeightedMultigraph, t: int, costs: CostAssignment,
                               base: IsolationBase = IsolationBase.MULTIPLICITY) -> int:
    """One repeat: the x^t coefficient of pf(A) for the given isolation costs."""
    lam = isolation_base(graph, base)
    A = _build_matrix(graph, t, costs, lam)
    ceiling = coefficient_bit_ceiling(graph.node_count, graph.m, t, max(costs.cost.values(), default=0), lam)
    return pfaffian_coefficient(A, t, ceiling)


def exact_matching_decide(graph: WeightedMultigraph, t: int, cfg: EngineConfig = EngineConfig()) -> bool:
    trivial = _trivial(graph, t)
    if trivial is not None:
        return trivial
    for r in range(cfg.repeats_for(graph.node_count)):
        costs = CostAssignment.draw(graph.node_count, cfg.seed, r)
        if exact_matching_coefficient(graph, t, costs, cfg.base) != 0:
            return True
    return False


def _pairings(n: int) -> int:
    out = 1
    for odd in range(n - 1, 0, -2):
        out *= odd
    return out


@dataclass(frozen=True)
class MaxCostLayout:
    """Digit layout of the max-cost engine.

    ``per_edge`` isolates edge sets (every edge gets its own random cost, so
    base 2 suffices); otherwise node pairs are isolated with base 2**b, where
    b covers the mu**(N/2) edge choices a fixed pair set can have.  Input cost
    sits above in radix 2**r, wide enough that each cost level's isolation
    part stays below a quarter of the radix.
    """

    per_edge: bool
    b: int
    r: int


def max_cost_layout(graph: WeightedMultigraph) -> MaxCostLayout:
    n = graph.node_count
    half = n // 2
    mu_bits = (max(graph.max_multiplicity(), 1) - 1).bit_length()
    slack = _pairings(n).bit_length() + half * mu_bits + 2
    b = half * mu_bits + 1
    pair_r = max_isolation_total(n) * b + slack
    edge_r = half * 2 * graph.m + slack
    if edge_r < pair_r:
        return MaxCostLayout(True, 1, edge_r)
    return MaxCostLayout(False, b, pair_r)


def draw_edge_costs(m: int, seed: int, index: int) -> list[int]:
    """Isolation costs in {1, ..., 2m}, one per edge in edge order."""
    if not m:
        return []
    rng = repeat_rng(seed, index, ISOLATION)
    return [int(c) for c in rng.integers(1, 2 * m + 1, size=m)]


def _build_cost_matrix(graph: WeightedMultigraph, t: int, layout: MaxCostLayout,
                       pair_costs: Optional[CostAssignment], edge_costs: Optional[list[int]]) -> SkewPolyMatrix:
    A = SkewPolyMatrix(graph.node_count, t)
    r, b = layout.r, layout.b
    buckets: dict[tuple[int, int], list[int]] = {}
    for idx, e in enumerate(graph.edges):
        if e.weight > t:
            continue
        key = (e.u, e.v) if e.u < e.v else (e.v, e.u)
        coeffs = buckets.setdefault(key, [0] * (t + 1))
        shift = r * e.cost + (edge_costs[idx] if layout.per_edge else 0)
        coeffs[e.weight] += 1 << shift
    for (i, j), coeffs in buckets.items():
        if not layout.per_edge:
            shift = b * pair_costs.cost[i, j]
            coeffs = [c << shift for c in coeffs]
        A[i, j] = coeffs
    return A


def matching_cost_bound(graph: WeightedMultigraph) -> int:
    """Upper bound on the total cost of any perfect matching: half the sum of each node's costliest edge."""
    top = [0] * graph.node_count
    for e in graph.edges:
        top[e.u] = max(top[e.u], e.cost)
        top[e.v] = max(top[e.v], e.cost)
    return sum(top) // 2


def exact_matching_max_cost(graph: WeightedMultigraph, t: int, cfg: EngineConfig = EngineConfig(),
                            goal: Optional[int] = None, cost_bound: Optional[int] = None) -> Optional[int]:
    """Largest total edge cost of a perfect matching of weight exactly t, or None.

    An edge contributes 2**(r*cost + iso): input cost in the most significant
    digits (radix 2**r), its isolation cost below (see :class:`MaxCostLayout`).
    The cost of the best matching is the position of the leading radix-2**r
    digit; it is found whenever that cost level has a unique cheapest isolated
    object, which happens with probability >= 1/2 per repeat, and it is never
    overestimated.
    With ``goal`` set, repeats stop once a matching of cost >= goal is seen.

    Walks inside the Pfaffian program can pile up far more cost than any
    matching, so all arithmetic is done modulo 2**(r*(C+1) + 2), C being
    ``cost_bound`` (an upper bound on matching costs, derived from the graph if
    omitted); the final coefficient is below a third of that in magnitude and
    comes back exactly.
    """
    trivial = _trivial(graph, t)
    if trivial is False:
        return None
    if trivial is True:
        return 0
    layout = max_cost_layout(graph)
    r = layout.r
    bound = matching_cost_bound(graph) if cost_bound is None else min(cost_bound, matching_cost_bound(graph))
    modulus_bits = r * (bound + 1) + 2
    n = graph.node_count
    max_cost = max(e.cost for e in graph.edges)
    best: Optional[int] = None
    for rep in range(cfg.repeats_for(n)):
        if layout.per_edge:
            pair_costs, edge_costs = None, draw_edge_costs(graph.m, cfg.seed, rep)
            top_iso = max(edge_costs)
        else:
            pair_costs, edge_costs = CostAssignment.draw(n, cfg.seed, rep), None
            top_iso = layout.b * max(pair_costs.cost.values())
        A = _build_cost_matrix(graph, t, layout, pair_costs, edge_costs)
        per_step = (r * max_cost + top_iso + graph.m.bit_length()
                    + (t + 1).bit_length() + 2 * n.bit_length() + 1)
        ceiling = (n // 2) * per_step + 1
        coef = pfaffian_coefficient(A, t, ceiling, modulus_bits)
        if coef == 0:
            continue
        found = ((2 * abs(coef)).bit_length() - 1) // r
        if best is None or found > best:
            best = found
        if goal is not None and best >= goal:
            break
    return best

"""Exhaustive reference solvers.

These are slow on purpose and refuse inputs beyond an :class:`OracleBudget`.
Nothing here uses the reductions or engines, so they can serve as ground truth.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .graph import WeightedMultigraph
from .model import CoveringInstance, HittingInstance, KnapsackInstance, PackingInstance


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_items: int = 9
    max_nodes: int = 10
    max_k: int = 4
    time_limit: Optional[float] = None   # seconds per call


DEFAULT_BUDGET = OracleBudget()


class _Clock:
    def __init__(self, budget: OracleBudget):
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks % 1024 == 0 and time.monotonic() > self.deadline:
            raise OracleBudgetExceeded("oracle time limit reached")


def _check(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise OracleBudgetExceeded(f"{what} = {value} exceeds the oracle budget of {limit}")


def _add(load: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a + b for a, b in zip(load, v))


def brute_pack(inst: PackingInstance, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Try every assignment of items to at most ``bins`` bins.

    Bins are opened in order, so each set partition is visited once.
    """
    _check(inst.n, budget.max_items, "items")
    clock = _Clock(budget)
    d = inst.dimension
    items = inst.items
    zero = tuple(Fraction(0) for _ in range(d))

    def place(idx: int, loads: list[tuple[Fraction, ...]]) -> bool:
        clock.tick()
        if idx == len(items):
            return True
        v = items[idx]
        for b in range(len(loads)):
            new = _add(loads[b], v)
            if all(c <= 1 for c in new):
                old = loads[b]
                loads[b] = new
                if place(idx + 1, loads):
                    return True
                loads[b] = old
        if len(loads) < inst.bins:
            new = _add(zero, v)
            if all(c <= 1 for c in new):
                loads.append(new)
                if place(idx + 1, loads):
                    return True
                loads.pop()
        return False

    return place(0, [])


def brute_pack_1d(inst: PackingInstance) -> bool:
    """Independent one-dimensional oracle: DP over item subsets.

    best[S] is the lexicographically smallest (bins used, load of the open bin)
    over all orders of S; for d = 1 this gives the optimal bin count.
    """
    if inst.dimension != 1:
        raise ValueError("subset DP oracle is one-dimensional")
    sizes = [v[0] for v in inst.items]
    if any(s > 1 for s in sizes):
        return False
    n = len(sizes)
    if n == 0:
        return True
    best: list[Optional[tuple[int, Fraction]]] = [None] * (1 << n)
    best[0] = (1, Fraction(0))
    for mask in range(1 << n):
        cur = best[mask]
        if cur is None:
            continue
        bins, load = cur
        for i in range(n):
            if mask >> i & 1:
                continue
            cand = (bins, load + sizes[i]) if load + sizes[i] <= 1 else (bins + 1, sizes[i])
            nxt = mask | 1 << i
            if best[nxt] is None or cand < best[nxt]:
                best[nxt] = cand
    return best[-1][0] <= inst.bins


def min_bins_oracle(inst: PackingInstance, budget: OracleBudget = DEFAULT_BUDGET) -> Optional[int]:
    if any(c > 1 for v in inst.items for c in v):
        return None
    for bins in range(1, max(inst.n, 1) + 1):
        if brute_pack(inst.with_bins(bins), budget):
            return bins
    return None


# ---------------------------------------------------------------------------
# matchings

def _enumerate_matchings(graph: WeightedMultigraph, t: Optional[int], budget: OracleBudget):
    """Yield (weight, cost) of every perfect matching (pruned to weight <= t)."""
    _check(graph.node_count, budget.max_nodes, "nodes")
    clock = _Clock(budget)
    n = graph.node_count
    if n % 2:
        return
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for e in graph.edges:
        adj[e.u].append((e.v, e.weight, e.cost))
        adj[e.v].append((e.u, e.weight, e.cost))
    matched = [False] * n

    def rec(weight: int, cost: int):
        clock.tick()
        try:
            a = matched.index(False)
        except ValueError:
            yield weight, cost
            return
        matched[a] = True
        for b, w, c in adj[a]:
            if matched[b] or (t is not None and weight + w > t):
                continue
            matched[b] = True
            yield from rec(weight + w, cost + c)
            matched[b] = False
        matched[a] = False

    yield from rec(0, 0)


def brute_exact_matching(graph: WeightedMultigraph, t: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return any(w == t for w, _ in _enumerate_matchings(graph, t, budget))


def brute_max_cost_matching(graph: WeightedMultigraph, t: int,
                            budget: OracleBudget = DEFAULT_BUDGET) -> Optional[int]:
    costs = [c for w, c in _enumerate_matchings(graph, t, budget) if w == t]
    return max(costs) if costs else None


def matching_weights(graph: WeightedMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> set[int]:
    return {w for w, _ in _enumerate_matchings(graph, None, budget)}


# ---------------------------------------------------------------------------
# applications

def brute_knapsack(inst: KnapsackInstance, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest total profit of a subset that packs into the bins (0 if none)."""
    base = inst.base
    _check(base.n, budget.max_items, "items")
    clock = _Clock(budget)
    d = base.dimension
    zero = tuple(Fraction(0) for _ in range(d))
    items = base.items
    profits = inst.profits
    best = 0
    # suffix sums bound the remaining profit
    rest = [0] * (len(items) + 1)
    for i in range(len(items) - 1, -1, -1):
        rest[i] = rest[i + 1] + profits[i]

    def rec(idx: int, loads: list, profit: int):
        nonlocal best
        clock.tick()
        if profit + rest[idx] <= best:
            return
        if idx == len(items):
            best = profit
            return
        v = items[idx]
        for b in range(len(loads)):
            new = _add(loads[b], v)
            if all(c <= 1 for c in new):
                old = loads[b]
                loads[b] = new
                rec(idx + 1, loads, profit + profits[idx])
                loads[b] = old
        if len(loads) < base.bins:
            new = _add(zero, v)
            if all(c <= 1 for c in new):
                loads.append(new)
                rec(idx + 1, loads, profit + profits[idx])
                loads.pop()
        rec(idx + 1, loads, profit)

    rec(0, [], 0)
    return best


def brute_knapsack_decide(inst: KnapsackInstance, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return brute_knapsack(inst, budget) >= inst.goal_profit


def brute_cover(inst: CoveringInstance, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Can all items be split into exactly ``bins`` bins that are each covered?"""
    _check(inst.n, budget.max_items, "items")
    if inst.n < inst.bins:
        return False
    clock = _Clock(budget)
    d = inst.dimension
    zero = tuple(Fraction(0) for _ in range(d))
    items = inst.items
    pred = inst.predicate

    def rec(idx: int, loads: list) -> bool:
        clock.tick()
        if len(loads) + (len(items) - idx) < inst.bins:
            return False
        if idx == len(items):
            return len(loads) == inst.bins and all(pred(load) for load in loads)
        v = items[idx]
        for b in range(len(loads)):
            old = loads[b]
            loads[b] = _add(old, v)
            if rec(idx + 1, loads):
                return True
            loads[b] = old
        if len(loads) < inst.bins:
            loads.append(_add(zero, v))
            if rec(idx + 1, loads):
                return True
            loads.pop()
        return False

    return rec(0, [])


def _has_distinct_representatives(options: list[list[int]]) -> bool:
    """Kuhn's augmenting paths: can each constraint pick its own edge?"""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for e in options[i]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                owner[e] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(options)))


def brute_hitting(inst: HittingInstance, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    _check(inst.nodes, budget.max_nodes, "nodes")
    _check(inst.k, budget.max_k, "constraints")
    clock = _Clock(budget)
    n = inst.nodes
    if n % 2:
        return False
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(inst.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    matched = [False] * n
    chosen: list[int] = []

    def rec() -> bool:
        clock.tick()
        try:
            a = matched.index(False)
        except ValueError:
            in_matching = set(chosen)
            options = [sorted(c & in_matching) for c in inst.constraints]
            return _has_distinct_representatives(options)
        matched[a] = True
        for b, idx in adj[a]:
            if matched[b]:
                continue
            matched[b] = True
            chosen.append(idx)
            if rec():
                return True
            chosen.pop()
            matched[b] = False
        matched[a] = False
        return False

    return rec()


def brute_sat(formula, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return any(True for _ in satisfying_assignments(formula))


def satisfying_assignments(formula):
    """Yield every satisfying assignment as a tuple of booleans (variable i+1 at index i)."""
    for bits in itertools.product((False, True), repeat=formula.var_count):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in clause) for clause in formula.clauses):
            yield bits

"""Decision and optimisation front end for vector bin packing with few small items."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from .matching import Engine, EngineConfig, exact_matching_decide
from .model import PackingInstance
from .reduction import ReductionOutput, reduce_packing_to_matching
from .sieve import sieve_decide


@dataclass(frozen=True)
class PackingAnswer:
    answer: bool
    nodes: int
    edges: int
    target: int
    dummies: int
    trivial: bool


def solve_packing_detailed(inst: PackingInstance, cfg: EngineConfig = EngineConfig()) -> PackingAnswer:
    red: ReductionOutput = reduce_packing_to_matching(inst)
    g = red.graph
    if red.trivial_answer is not None:
        return PackingAnswer(red.trivial_answer, g.node_count, g.m, red.target, red.dummies, True)
    if cfg.engine is Engine.GF2_SIEVE:
        # fitting masks are closed under subsets, so covering [k] implies a partition exists
        answer = sieve_decide(g, inst.k, cfg)
    else:
        answer = exact_matching_decide(g, red.target, cfg)
    return PackingAnswer(answer, g.node_count, g.m, red.target, red.dummies, False)


def solve_packing(inst: PackingInstance, cfg: EngineConfig = EngineConfig()) -> bool:
    return solve_packing_detailed(inst, cfg).answer


def binary_search_bins(inst: PackingInstance, cfg: EngineConfig = EngineConfig()) -> Optional[int]:
    """Fewest bins that hold every item, or None if some item exceeds a unit bin.

    Each probe is a Monte-Carlo decision; the repeat count is raised by
    log2 of the number of probes so the overall error stays comparable.
    """
    if any(c > 1 for v in inst.items for c in v):
        return None
    n = inst.n
    if n == 0:
        return 1
    lo, hi = 1, n   # n bins always suffice: one item each
    probes = max(1, math.ceil(math.log2(n + 1)))
    base = cfg.repeats_for(2 * n)
    probe_cfg = replace(cfg, repeats=base + math.ceil(math.log2(probes + 1)))
    while lo < hi:
        mid = (lo + hi) // 2
        if solve_packing(inst.with_bins(mid), probe_cfg):
            hi = mid
        else:
            lo = mid + 1
    return lo

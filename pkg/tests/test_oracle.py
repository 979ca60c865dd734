from fractions import Fraction

import pytest

from fewsmall.corpus import CorpusSpec, random_packing
from fewsmall.graph import Edge, WeightedMultigraph
from fewsmall.hardness import CnfFormula
from fewsmall.model import CoveringInstance, CoveringPredicate, HittingInstance, KnapsackInstance
from fewsmall.oracle import (OracleBudget, OracleBudgetExceeded, brute_cover, brute_exact_matching, brute_hitting,
                             brute_knapsack, brute_max_cost_matching, brute_pack, brute_pack_1d, brute_sat,
                             matching_weights, min_bins_oracle)
from fewsmall.pfaffian import SkewPolyMatrix, pfaffian_bruteforce

from conftest import packing


def test_pack_basics():
    assert brute_pack(packing([], bins=1))
    assert not brute_pack(packing([["0.6"], ["0.6"]], bins=1))
    assert brute_pack(packing([["0.6"], ["0.6"]], bins=2))


def test_hand_computed_three_items():
    inst = packing([["0.5", "0.1"], ["0.5", "0.1"], ["0.2", "0.9"]], bins=2)
    assert brute_pack(inst)
    assert not brute_pack(inst.with_bins(1))
    assert min_bins_oracle(inst) == 2


def test_one_dimensional_dp_agrees():
    spec = CorpusSpec(max_items=8, max_small=8, max_dim=1, max_bins=4, max_denominator=12)
    for i in range(150):
        inst = random_packing(5, i, spec)
        assert brute_pack(inst) == brute_pack_1d(inst)


def test_min_bins_edge_cases():
    assert min_bins_oracle(packing([["1"]] * 1)) == 1
    assert min_bins_oracle(packing([["1"], ["1"], ["1"]])) == 3
    assert min_bins_oracle(packing([["3/2"]])) is None


def test_budget():
    with pytest.raises(OracleBudgetExceeded):
        brute_pack(packing([[Fraction(i, 100)] for i in range(12)]), OracleBudget(max_items=9))


def test_matching_oracles():
    g = WeightedMultigraph(2, (Edge(0, 1, 3, 7),))
    assert brute_exact_matching(g, 3) and not brute_exact_matching(g, 4)
    k4 = WeightedMultigraph(4, tuple(Edge(i, j, 1, i + j) for i in range(4) for j in range(i + 1, 4)))
    assert matching_weights(k4) == {2}
    assert brute_max_cost_matching(k4, 2) == 6
    assert brute_max_cost_matching(k4, 3) is None


def test_matching_oracle_agrees_with_pfaffian_support():
    # with distinct prime-like entries there is no cancellation, so nonzero pf <=> matching exists
    edges = [(0, 1), (2, 3), (0, 2), (4, 5), (1, 5)]
    g = WeightedMultigraph(6, tuple(Edge(u, v, 0) for u, v in edges))
    A = SkewPolyMatrix(6, 0, {e: [1] for e in edges})
    assert bool(pfaffian_bruteforce(A).coeffs) == brute_exact_matching(g, 0)


def test_knapsack_cover_hitting_sat():
    base = packing([["0.6"], ["0.5"], ["0.3"]], bins=1)
    assert brute_knapsack(KnapsackInstance(base, (4, 3, 2), 1)) == 6
    assert brute_knapsack(KnapsackInstance(packing([], bins=1), (), 1)) == 0
    items = tuple((Fraction(x),) for x in ("0.6", "0.5", "0.3"))
    assert brute_cover(CoveringInstance(items, frozenset(), 1, CoveringPredicate()))
    assert not brute_cover(CoveringInstance(items, frozenset(), 2, CoveringPredicate()))
    assert brute_hitting(HittingInstance(0, (), ()))
    assert not brute_hitting(HittingInstance(2, (), ()))
    assert brute_sat(CnfFormula.from_clauses(0, []))
    assert not brute_sat(CnfFormula.from_clauses(1, [(1,), (-1,)]))

import pytest

from fewsmall.applications import (CoveringGuess, EngineUnsupported, covering_guesses, knapsack_graph,
                                   knapsack_max_profit, solve_covering, solve_hitting, solve_knapsack)
from fewsmall.corpus import random_covering, random_hitting, random_knapsack
from fewsmall.matching import Engine, EngineConfig
from fewsmall.model import CoveringInstance, CoveringMode, CoveringPredicate, HittingInstance, KnapsackInstance
from fewsmall.oracle import brute_cover, brute_hitting, brute_knapsack

from conftest import packing

CFG = EngineConfig(repeats=20, seed=4)
GF2 = EngineConfig(repeats=20, seed=4, engine=Engine.GF2_SIEVE)


def cover(items, small=(), bins=1, mode=CoveringMode.ANY):
    base = packing(items, small, bins)
    return CoveringInstance(base.items, base.small, bins, CoveringPredicate(mode), base.dimension)


class TestKnapsack:
    def test_single_item(self):
        inst = KnapsackInstance(packing([["0.3"]], bins=1), (4,), 4)
        assert solve_knapsack(inst, CFG)

    def test_two_clashing_items(self):
        base = packing([["0.6"], ["0.6"]], bins=1)
        assert knapsack_max_profit(KnapsackInstance(base, (5, 7), 1), CFG) == 7
        assert solve_knapsack(KnapsackInstance(base, (5, 7), 7), CFG)
        assert not solve_knapsack(KnapsackInstance(base, (5, 7), 8), CFG)

    def test_dropping_small_items_without_large_ones(self):
        base = packing([["0.5"], ["0.4"], ["0.3"]], small=[0, 1, 2], bins=1)
        inst = KnapsackInstance(base, (3, 5, 4), 1)
        assert knapsack_max_profit(inst, CFG) == brute_knapsack(inst) == 9

    def test_large_items_exceeding_two_bins_can_be_dropped(self):
        base = packing([["0.9"], ["0.8"], ["0.7"], ["0.6"]], bins=1)
        inst = KnapsackInstance(base, (1, 2, 3, 9), 1)
        assert knapsack_max_profit(inst, CFG) == 9

    def test_graph_shape(self):
        base = packing([["0.6"], ["0.7"], ["0.1"]], small=[2], bins=2)
        kg = knapsack_graph(KnapsackInstance(base, (1, 1, 1), 1))
        assert (kg.large, kg.dummies, kg.blockers) == (2, 4, 2)
        assert kg.graph.node_count == 8

    def test_gf2_refused(self):
        with pytest.raises(EngineUnsupported):
            solve_knapsack(KnapsackInstance(packing([["0.3"]]), (1,), 1), GF2)

    def test_random_against_oracle(self):
        for i in range(8):
            inst = random_knapsack(90, i)
            assert knapsack_max_profit(inst, EngineConfig(repeats=20, seed=i)) == brute_knapsack(inst)


class TestCovering:
    def test_three_large_items(self):
        assert solve_covering(cover([["0.4"], ["0.45"], ["0.5"]]), CFG)

    def test_pair_covers(self):
        assert solve_covering(cover([["0.6"], ["0.7"]]), CFG)

    def test_not_enough_items(self):
        assert not solve_covering(cover([["0.6"], ["0.7"]], bins=2), CFG)

    def test_small_items_complete_a_bin(self):
        inst = cover([["0.45"], ["0.5"], ["0.01"], ["0.2"]], small=[2, 3], bins=1)
        assert solve_covering(inst, CFG) == brute_cover(inst) is True

    def test_all_dimensions(self):
        inst = cover([["0.6", "0.2"], ["0.6", "0.5"]], mode=CoveringMode.ALL)
        assert not solve_covering(inst, CFG) and not brute_cover(inst)
        inst = cover([["0.6", "0.6"], ["0.6", "0.5"]], mode=CoveringMode.ALL)
        assert solve_covering(inst, CFG)

    def test_guesses(self):
        guesses = set(covering_guesses(3, 2))
        assert CoveringGuess(1, 0, 0) in guesses       # one dummy pair bin plus a triple of large items
        assert CoveringGuess(0, 1, 1) in guesses
        assert CoveringGuess(0, 0, 1) not in guesses   # the last large item cannot fill a bin alone
        assert CoveringGuess(0, 0, 0) not in guesses   # one triple is only one bin
        assert all(g.paired <= 2 for g in guesses)

    def test_gf2_refused(self):
        with pytest.raises(EngineUnsupported):
            solve_covering(cover([["0.6"], ["0.7"]]), GF2)

    @pytest.mark.parametrize("mode", [CoveringMode.ANY, CoveringMode.ALL])
    def test_random_against_oracle(self, mode):
        for i in range(25):
            inst = random_covering(91, i, CoveringPredicate(mode))
            assert solve_covering(inst, EngineConfig(repeats=20, seed=i)) == brute_cover(inst)


class TestHitting:
    path = ((0, 1), (1, 2), (2, 3))

    def test_no_constraints(self):
        assert solve_hitting(HittingInstance(4, self.path, ()), CFG)
        assert not solve_hitting(HittingInstance(4, ((0, 1), (0, 2), (0, 3)), ()), CFG)

    @pytest.mark.parametrize("cfg", [CFG, GF2])
    def test_path(self, cfg):
        assert solve_hitting(HittingInstance(4, self.path, (frozenset({0}),)), cfg)
        assert not solve_hitting(HittingInstance(4, self.path, (frozenset({1}),)), cfg)

    def test_one_edge_per_constraint(self):
        # both constraints only contain edge 0, which a matching can use once
        square = ((0, 1), (2, 3), (0, 2), (1, 3))
        inst = HittingInstance(4, square, (frozenset({0}), frozenset({0})))
        assert not solve_hitting(inst, CFG) and not brute_hitting(inst)
        inst = HittingInstance(4, square, (frozenset({0}), frozenset({1})))
        assert solve_hitting(inst, CFG) and solve_hitting(inst, GF2)

    def test_odd_node_count(self):
        assert not solve_hitting(HittingInstance(3, ((0, 1),), ()), CFG)

    def test_random_against_oracle(self):
        for i in range(40):
            inst = random_hitting(92, i)
            want = brute_hitting(inst)
            assert solve_hitting(inst, EngineConfig(repeats=20, seed=i)) == want
            assert solve_hitting(inst, EngineConfig(repeats=20, seed=i, engine=Engine.GF2_SIEVE)) == want

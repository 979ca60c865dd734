import itertools

from fewsmall.corpus import (CorpusSpec, random_cnf_clauses, random_covering, random_hitting, random_knapsack,
                             random_packing)
from fewsmall.model import CoveringMode, CoveringPredicate, check_3_covering, validate


def test_packing_respects_spec():
    spec = CorpusSpec()
    for i in range(200):
        inst = random_packing(1, i, spec)
        validate(inst)
        assert inst.n <= spec.max_items and inst.k <= spec.max_small
        assert 1 <= inst.dimension <= spec.max_dim and 1 <= inst.bins <= spec.max_bins
        assert all(c.denominator <= spec.max_denominator for v in inst.items for c in v)


def test_instances_depend_only_on_seed_and_index():
    assert random_packing(4, 17) == random_packing(4, 17)
    assert [random_packing(4, i) for i in range(5)] != [random_packing(5, i) for i in range(5)]
    assert random_knapsack(4, 3) == random_knapsack(4, 3)


def test_kinds_use_separate_streams():
    # same (seed, index) but a different kind must not reuse the packing draw
    assert random_knapsack(4, 0).base != random_packing(4, 0, CorpusSpec(7, 3, 2, 2, 12))


def test_knapsack_goal_in_range():
    for i in range(50):
        inst = random_knapsack(2, i)
        validate(inst)
        assert 1 <= inst.goal_profit <= max(sum(inst.profits), 1)


def test_covering_promise_holds():
    for mode in (CoveringMode.ANY, CoveringMode.ALL):
        pred = CoveringPredicate(mode)
        for i in range(50):
            inst = random_covering(3, i, pred)
            large = [inst.items[j] for j in inst.large_indices]
            assert check_3_covering(large, pred)


def test_hitting_shapes():
    for i in range(50):
        inst = random_hitting(3, i)
        assert inst.nodes % 2 == 0 and inst.edges and inst.k <= 3


def test_cnf_clauses_are_proper():
    for i in range(50):
        n, clauses = random_cnf_clauses(3, i)
        assert 1 <= n <= 6 and len(clauses) <= 8
        for c in clauses:
            assert all(1 <= abs(lit) <= n for lit in c)
            assert len({abs(lit) for lit in c}) == len(c)
            assert not any(-a == b for a, b in itertools.combinations(c, 2))

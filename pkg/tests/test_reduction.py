from fractions import Fraction

from hypothesis import given, settings, strategies as st

from fewsmall.corpus import random_packing
from fewsmall.model import fits
from fewsmall.oracle import brute_exact_matching, brute_pack
from fewsmall.reduction import enumerate_fitting_masks, reduce_packing_to_matching, subset_sums

from conftest import packing


def v(x):
    return (Fraction(x),)


def test_two_large_items_that_clash():
    red = reduce_packing_to_matching(packing([["0.6"], ["0.7"]], bins=1))
    assert red.graph.node_count == 2 and red.graph.m == 0 and red.target == 0
    assert not brute_exact_matching(red.graph, red.target)


def test_empty_instance():
    red = reduce_packing_to_matching(packing([], bins=1))
    assert red.graph.node_count == 2 and red.graph.m == 1
    assert red.graph.edges[0].weight == 0 and red.target == 0 and red.dummies == 2


def test_full_pair_only_admits_empty_mask():
    inst = packing([["0.5"], ["0.5"], ["0.25"], ["0.26"]], small=[2, 3], bins=1)
    red = reduce_packing_to_matching(inst)
    assert [e.tag for e in red.graph.edges] == [0]
    assert red.target == 11
    assert not brute_exact_matching(red.graph, red.target)


def test_too_many_large_items_is_trivially_no():
    red = reduce_packing_to_matching(packing([["0.9"], ["0.8"], ["0.7"]], bins=1))
    assert red.trivial_answer is False


def test_fitting_masks_examples():
    assert enumerate_fitting_masks((v("0.5"), v("0.5")), [v("0.1"), v("0.2")]) == [0]
    assert enumerate_fitting_masks((v("0.5"), v("0.5")), []) == [0]
    assert enumerate_fitting_masks((v("0.6"), v("0.5")), []) == []
    assert enumerate_fitting_masks((v("0.2"), v("0.2")), [v("0.3"), v("0.3")]) == [0, 1, 2, 3]


rat = st.fractions(min_value=0, max_value=Fraction(1, 2), max_denominator=10)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(rat, rat), max_size=5), st.tuples(rat, rat), st.tuples(rat, rat))
def test_fitting_masks_are_exactly_the_fitting_subsets(small, a, b):
    got = set(enumerate_fitting_masks((a, b), small))
    for mask in range(1 << len(small)):
        chosen = [small[i] for i in range(len(small)) if mask >> i & 1]
        assert (mask in got) == fits([a, b, *chosen], 2)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(rat, rat, rat), max_size=6))
def test_gray_code_sums(small):
    sums = subset_sums(small, 3)
    for mask, s in enumerate(sums):
        expected = tuple(sum((small[i][j] for i in range(len(small)) if mask >> i & 1), Fraction(0))
                         for j in range(3))
        assert s == expected


def test_reduction_is_faithful_on_corpus():
    for i in range(120):
        inst = random_packing(77, i)
        red = reduce_packing_to_matching(inst)
        want = brute_pack(inst)
        if red.trivial_answer is not None:
            assert red.trivial_answer == want
        else:
            assert brute_exact_matching(red.graph, red.target) == want

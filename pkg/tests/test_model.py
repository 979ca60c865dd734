from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fewsmall.model import (CoveringInstance, CoveringMode, CoveringPredicate, HittingInstance, InstanceError,
                            KnapsackInstance, PackingInstance, PromiseError, break_duplicates, check_3_covering,
                            check_3_incompatible, find_fitting_triple, fits, parse_hitting, parse_instance,
                            serialize_hitting, serialize_instance, validate)

from conftest import packing

third = Fraction(1, 3)


def vec(*xs):
    return tuple(Fraction(x) for x in xs)


class TestThreeIncompatible:
    def test_heavy_triple_does_not_fit(self):
        assert check_3_incompatible([vec("0.4")] * 3)

    @pytest.mark.parametrize("count", [0, 1, 2])
    def test_fewer_than_three_items(self, count):
        assert check_3_incompatible([vec("0.3")] * count)

    def test_light_triple_fits(self):
        assert not check_3_incompatible([vec("0.3")] * 3)

    def test_exactly_full_counts_as_fitting(self):
        assert find_fitting_triple([vec(third), vec(third), vec(third)]) == (0, 1, 2)

    def test_multidimensional_needs_every_coordinate(self):
        items = [vec("0.2", "0.5"), vec("0.2", "0.5"), vec("0.2", "0.1")]
        assert check_3_incompatible(items)


class TestThreeCovering:
    def test_any(self):
        assert check_3_covering([vec("0.5")] * 3, CoveringPredicate())

    def test_fewer_than_three(self):
        assert check_3_covering([vec("0.1")] * 2, CoveringPredicate(CoveringMode.ALL))

    @pytest.mark.parametrize("mode", [CoveringMode.ANY, CoveringMode.ALL])
    def test_light_items_never_cover(self, mode):
        assert not check_3_covering([vec("0.2", "0.2")] * 3, CoveringPredicate(mode))

    def test_predicates_are_strict(self):
        assert not CoveringPredicate()(vec(1, 1))
        assert CoveringPredicate()(vec(1, "1.01"))
        assert not CoveringPredicate(CoveringMode.ALL)(vec(2, 1))

    def test_custom(self):
        pred = CoveringPredicate(CoveringMode.CUSTOM, lambda load: sum(load) > 3)
        assert pred(vec(2, 2)) and not pred(vec(1, 1))
        with pytest.raises(ValueError):
            CoveringPredicate(CoveringMode.CUSTOM)


class TestDocuments:
    def test_round_trip(self):
        doc = b'{"dimension": 1, "items": [["1/2"], ["2/3"]], "small": [], "bins": 1}'
        inst = parse_instance(doc)
        assert inst == PackingInstance((vec("1/2"), vec("2/3")), frozenset(), 1, 1)
        assert parse_instance(serialize_instance(inst)) == inst

    def test_rational_strings_stay_exact(self):
        inst = parse_instance('{"dimension": 1, "items": [["1/3"]], "small": [], "bins": 1}')
        assert inst.items[0][0] == third and isinstance(inst.items[0][0], Fraction)

    def test_bare_decimals_are_read_from_their_digits(self):
        inst = parse_instance('{"dimension": 1, "items": [[0.1], ["0.2"]], "small": [], "bins": 1}')
        assert inst.items == (vec("1/10"), vec("1/5"))

    def test_integer_coordinates_accepted(self):
        assert parse_instance('{"dimension": 1, "items": [[1], [0]], "small": [], "bins": 1}').items[0] == vec(1)

    def test_promise_violation_names_triple(self):
        doc = '{"dimension": 1, "items": [["1/4"], ["1/5"], ["1/6"], ["1/2"]], "small": [3], "bins": 1}'
        with pytest.raises(PromiseError) as info:
            parse_instance(doc)
        assert info.value.triple == (0, 1, 2)
        assert "0, 1, 2" in str(info.value)

    def test_small_items_exempt_from_promise(self):
        doc = '{"dimension": 1, "items": [["1/4"], ["1/5"], ["1/6"]], "small": [2], "bins": 1}'
        assert parse_instance(doc).k == 1

    def test_duplicates_rejected_then_broken(self):
        doc = '{"dimension": 1, "items": [["3/5"], ["3/5"]], "small": [], "bins": 2}'
        with pytest.raises(InstanceError, match="equal"):
            parse_instance(doc)
        inst = parse_instance(doc, dedupe=True)
        assert inst.dimension == 2 and len(set(inst.items)) == 2

    def test_break_duplicates_keeps_extra_load_below_half(self):
        items = [vec("0.5")] * 6
        out = break_duplicates(items)
        assert sum(v[1] for v in out) <= Fraction(1, 2)
        assert len(set(out)) == 6

    def test_capacity_normalisation(self):
        doc = '{"dimension": 2, "items": [[3, 1]], "capacity": [6, 2], "small": [], "bins": 1}'
        assert parse_instance(doc).items[0] == vec("1/2", "1/2")

    @pytest.mark.parametrize("doc, where", [
        ('{"items": [], "small": [], "bins": 1}', "dimension"),
        ('{"dimension": 2, "items": [["1"]], "small": [], "bins": 1}', "items[0]"),
        ('{"dimension": 1, "items": [["1"]], "small": [4], "bins": 1}', "small[0]"),
        ('{"dimension": 1, "items": [["-1"]], "small": [], "bins": 1}', "items[0][0]"),
        ('{"dimension": 1, "items": [], "small": [], "bins": 0}', "bins"),
        ('[1, 2]', "object"),
        ('{"dimension": 1', "malformed"),
    ])
    def test_bad_documents(self, doc, where):
        with pytest.raises(InstanceError, match=where.replace("[", "\\[").replace("]", "\\]")):
            parse_instance(doc)

    def test_knapsack_and_covering_documents(self):
        k = parse_instance('{"dimension": 1, "items": [["3/5"], ["1/5"]], "small": [1], "bins": 1,'
                           ' "profits": [5, 7], "goal_profit": 9}')
        assert isinstance(k, KnapsackInstance) and k.profits == (5, 7)
        assert parse_instance(serialize_instance(k)) == k
        c = parse_instance('{"dimension": 1, "items": [["3/5"], ["3/4"], ["1/2"]], "small": [],'
                           ' "bins": 1, "covering": "any"}')
        assert isinstance(c, CoveringInstance) and c.predicate.mode is CoveringMode.ANY
        with pytest.raises(InstanceError, match="predicate"):
            parse_instance('{"dimension": 1, "items": [], "small": [], "bins": 1, "covering": "most"}')

    def test_covering_promise(self):
        with pytest.raises(PromiseError, match="cover"):
            parse_instance('{"dimension": 1, "items": [["1/5"], ["1/4"], ["1/3"]], "small": [],'
                           ' "bins": 1, "covering": "any"}')

    def test_unpromised_documents_skip_the_check(self):
        doc = '{"dimension": 1, "items": [["1/5"], ["1/4"], ["1/3"]], "small": [], "bins": 1, "promise": "none"}'
        assert parse_instance(doc).n == 3

    def test_hitting_round_trip(self):
        inst = HittingInstance(4, ((0, 1), (2, 3), (1, 2)), (frozenset({2}),))
        assert parse_hitting(serialize_hitting(inst)) == inst

    def test_hitting_rejects_parallel_edges(self):
        with pytest.raises(InstanceError, match="parallel"):
            HittingInstance(2, ((0, 1), (1, 0)), ())


def test_validate_knapsack_checks_base():
    base = packing([["1/5"], ["1/4"], ["1/3"]])
    with pytest.raises(PromiseError):
        validate(KnapsackInstance(base, (1, 1, 1), 1))


rationals = st.fractions(min_value=0, max_value=1, max_denominator=12)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(rationals, rationals), min_size=0, max_size=6, unique=True),
       st.integers(1, 3))
def test_serialization_round_trip_property(rows, bins):
    inst = PackingInstance(tuple(rows), frozenset(), bins, 2)
    doc = parse_instance(serialize_instance(inst), validate_promise=False)
    assert doc == inst


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(rationals), min_size=3, max_size=6))
def test_fitting_triple_is_witness(rows):
    triple = find_fitting_triple(rows)
    if triple is None:
        assert check_3_incompatible(rows)
    else:
        assert fits([rows[i] for i in triple], 1)

from fractions import Fraction

import pytest

from fewsmall.corpus import random_cnf_clauses
from fewsmall.hardness import (CnfError, CnfFormula, cnf_to_packing_family, family_documents, mutate_family,
                               parse_dimacs, verify_family)
from fewsmall.matching import Engine, EngineConfig
from fewsmall.model import PackingInstance, parse_instance
from fewsmall.oracle import brute_pack, satisfying_assignments
from fewsmall.solver import solve_packing


def all_small(inst):
    return PackingInstance(inst.items, frozenset(range(inst.n)), inst.bins, inst.dimension)


def packable_ts(family):
    return {t for t, inst in enumerate(family.instances) if brute_pack(inst)}


def true_counts(formula):
    return {sum(a) for a in satisfying_assignments(formula)}


class TestDimacs:
    def test_basic(self):
        f = parse_dimacs("c hi\np cnf 3 2\n1 -2 0\n2 3\n0\n")
        assert f.var_count == 3 and f.clauses == (frozenset({1, -2}), frozenset({2, 3}))

    def test_trailing_clause_and_percent(self):
        f = parse_dimacs("p cnf 2 2\n1 0\n-2\n%\n0\n")
        assert f.clauses == (frozenset({1}), frozenset({-2}))

    def test_tautologies_dropped(self):
        assert parse_dimacs("p cnf 1 1\n1 -1 0\n").m == 0

    @pytest.mark.parametrize("text, msg", [
        ("1 0\n", "before"), ("p cnf 2 1\n3 0\n", "exceeds"), ("p cnf x 1\n", "problem line"),
        ("p cnf 1 1\np cnf 1 1\n", "problem line"), ("p cnf 1 1\n1 a 0\n", "literal"), ("c only\n", "header"),
    ])
    def test_errors(self, text, msg):
        with pytest.raises(CnfError, match=msg):
            parse_dimacs(text)

    def test_round_trip(self):
        f = CnfFormula.from_clauses(3, [(1, -3), (2,), (-1, -2, 3)])
        assert parse_dimacs(f.to_dimacs()) == f


class TestFamily:
    def test_single_positive_literal(self):
        fam = cnf_to_packing_family(CnfFormula.from_clauses(1, [(1,)]))
        assert packable_ts(fam) == {1}

    def test_tautology(self):
        fam = cnf_to_packing_family(parse_dimacs("p cnf 1 1\n1 -1 0\n"))
        assert packable_ts(fam) == {0, 1}

    def test_negative_literal(self):
        fam = cnf_to_packing_family(CnfFormula.from_clauses(2, [(-1,), (1, 2)]))
        assert packable_ts(fam) == {1}

    def test_shape(self):
        f = CnfFormula.from_clauses(3, [(1, 2), (-3,)])
        fam = cnf_to_packing_family(f)
        assert len(fam.instances) == 4
        assert all(inst.n == 5 and inst.dimension == 4 and inst.bins == 2 for inst in fam.instances)

    def test_no_clauses(self):
        f = CnfFormula.from_clauses(3, [])
        fam = cnf_to_packing_family(f)
        assert packable_ts(fam) == {0, 1, 2, 3}
        assert verify_family(fam).clean

    def test_needs_a_variable(self):
        with pytest.raises(CnfError):
            cnf_to_packing_family(CnfFormula.from_clauses(0, []))

    def test_random_formulas_match_true_counts(self):
        for i in range(25):
            n, clauses = random_cnf_clauses(7, i, max_vars=5, max_clauses=6)
            f = CnfFormula.from_clauses(n, clauses)
            fam = cnf_to_packing_family(f)
            assert packable_ts(fam) == true_counts(f)

    def test_engines_with_every_item_small(self):
        f = CnfFormula.from_clauses(3, [(1, -2), (2, 3), (-1, -3)])
        fam = cnf_to_packing_family(f)
        for t, inst in enumerate(fam.instances):
            want = brute_pack(inst)
            for engine in Engine:
                assert solve_packing(all_small(inst), EngineConfig(repeats=20, seed=t, engine=engine)) == want

    def test_documents_are_unpromised(self):
        fam = cnf_to_packing_family(CnfFormula.from_clauses(2, [(1, -2)]))
        docs = family_documents(fam)
        assert [name for name, _ in docs] == ["t0.json", "t1.json", "t2.json"]
        inst = parse_instance(docs[1][1])
        assert inst == fam.instances[1]


class TestVerify:
    def test_clean_for_small_formulas(self):
        for i in range(20):
            n, clauses = random_cnf_clauses(8, i, max_vars=4, max_clauses=6)
            report = verify_family(cnf_to_packing_family(CnfFormula.from_clauses(n, clauses)))
            assert report.clean, report.summary()
            assert report.checked_assignments == 2 ** n

    def test_mutated_true_item_is_caught(self):
        f = CnfFormula.from_clauses(3, [(1, 2), (-1, 3)])
        fam = cnf_to_packing_family(f)
        n = f.var_count
        for sign in (1, -1):
            bad = mutate_family(fam, 1, fam.t_index, 0, sign * Fraction(1, 2 * n))
            report = verify_family(bad)
            assert not report.clean
            assert any(v.t == 1 and v.dimension == 1 for v in report.violations)

    def test_wrong_shape(self):
        fam = cnf_to_packing_family(CnfFormula.from_clauses(1, [(1,)]))
        broken = type(fam)(fam.formula, (fam.instances[0].with_bins(3),) + fam.instances[1:])
        assert "shape" in verify_family(broken).summary()

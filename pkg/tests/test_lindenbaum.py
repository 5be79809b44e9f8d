import itertools

import pytest
from hypothesis import given, settings, strategies as st

from stonework.algebra import check_complement_uniqueness, check_de_morgan, check_homomorphism, verify_axioms
from stonework.errors import ArgumentError, SizeError
from stonework.lindenbaum import (
    build_lt_algebra,
    class_of,
    consistency,
    projection,
    representative_formula,
)
from stonework.logic import And, Not, Or, Theory, Var, parse, pretty, semantically_equivalent, truth_table

from test_logic import formulas

V3 = ("P", "Q", "R")


def lt(formulas_, universe):
    return build_lt_algebra(Theory.of(formulas_, list(universe)))


def semantic_classes(formula_list, V):
    return {tuple(v for _, v in truth_table(f, V)) for f in formula_list}


class TestBuild:
    def test_one_variable_empty_theory(self):
        B = lt([], "P")
        assert B.size == 4
        small = [Var("P"), Not(Var("P")), parse("P | ~P"), parse("P & ~P"), parse("P -> P"), parse("~~P")]
        assert len(semantic_classes(small, ["P"])) == 4

    def test_inconsistent_theory_is_trivial(self):
        B = lt(["P", "~P"], "P")
        assert B.size == 1 and B.algebra.zero == B.algebra.one
        assert not consistency(B)

    def test_theory_p_over_pq(self):
        B = lt(["P"], "PQ")
        assert B.models == (2, 3)  # (P=1,Q=0), (P=1,Q=1)
        assert B.size == 4

    @pytest.mark.parametrize("n, size", [(0, 2), (1, 4), (2, 16), (3, 256)])
    def test_empty_theory_sizes(self, n, size):
        assert lt([], V3[:n]).size == size == 2 ** (2 ** n)

    def test_size_cap(self):
        with pytest.raises(SizeError):
            lt([], "PQRS")
        with pytest.raises(SizeError):
            build_lt_algebra(Theory.of([], list("PQR")), cap=16)

    @pytest.mark.parametrize("theory", [[], ["P"], ["P | Q"], ["P -> Q", "Q -> R"], ["P <-> ~Q"], ["P", "~P"]])
    def test_algebra_is_boolean(self, theory):
        A = lt(theory, V3).algebra
        assert verify_axioms(A).passed
        assert check_de_morgan(A) and check_complement_uniqueness(A)

    def test_consistency_examples(self):
        assert consistency(lt([], "PQ"))
        assert consistency(lt(["P -> Q", "P"], "PQ"))


class TestClasses:
    def test_constants(self):
        B = lt([], "PQ")
        assert class_of(B, parse("P | ~P")).element == B.algebra.one
        assert class_of(B, parse("P & ~P")).element == B.algebra.zero

    def test_axiom_of_theory_is_one(self):
        B = lt(["P"], "PQ")
        assert class_of(B, Var("P")).element == B.algebra.one

    def test_unknown_variable(self):
        with pytest.raises(ArgumentError):
            class_of(lt([], "P"), Var("Q"))

    @settings(max_examples=150, deadline=None)
    @given(formulas(8), formulas(8), st.sampled_from([[], ["P"], ["P | Q"], ["Q -> R", "~P"]]))
    def test_class_equality_is_semantic_equivalence(self, a, b, theory):
        T = Theory.of(theory, list(V3))
        B = build_lt_algebra(T)
        assert (class_of(B, a) == class_of(B, b)) == semantically_equivalent(a, b, T)

    @settings(max_examples=100, deadline=None)
    @given(formulas(6), formulas(6), st.sampled_from([[], ["P"], ["Q <-> R"]]))
    def test_operations_well_defined(self, a, b, theory):
        B = lt(theory, V3)
        A = B.algebra
        # equivalent variants: double negation and commuted forms
        a2, b2 = Not(Not(a)), And(b, b)
        ca, cb = class_of(B, a).element, class_of(B, b).element
        assert class_of(B, Or(a2, b2)).element == class_of(B, Or(a, b)).element == A.join(ca, cb)
        assert class_of(B, And(a2, b2)).element == A.meet(ca, cb)
        assert class_of(B, Not(a2)).element == A.complement(ca)

    @pytest.mark.parametrize("theory", [[], ["P"], ["P | Q | R"], ["P", "~P"]])
    def test_class_of_is_surjective_via_representatives(self, theory):
        B = lt(theory, V3)
        for c in B.algebra.carrier:
            rep = representative_formula(B, c)
            assert class_of(B, rep).element == c


class TestRepresentatives:
    def test_examples(self):
        B1 = lt([], "P")
        assert pretty(representative_formula(B1, B1.algebra.zero)) == "P & ~P"
        assert pretty(representative_formula(B1, B1.algebra.one)) == "P | ~P"
        B2 = lt([], "PQ")
        c = B2.element_of({2})  # P=1, Q=0
        assert pretty(representative_formula(B2, c)) == "P & ~Q"
        assert class_of(B2, representative_formula(B2, c)).element == c

    def test_empty_universe(self):
        with pytest.raises(ArgumentError):
            representative_formula(lt([], ""), 0)


class TestProjection:
    @pytest.mark.parametrize("theory", [[], ["P"], ["P | Q"], ["P -> Q", "Q -> R"], ["R"], ["P", "~P"]])
    def test_homomorphism_and_surjective(self, theory):
        B0, BT = lt([], V3), lt(theory, V3)
        pi = projection(B0, BT)
        assert check_homomorphism(pi, B0.algebra, BT.algebra)
        assert set(pi.tolist()) == set(BT.algebra.carrier)

    @settings(max_examples=80, deadline=None)
    @given(formulas(8))
    def test_commutes_with_class_map(self, f):
        B0, BT = lt([], V3), lt(["P | Q", "~R"], V3)
        pi = projection(B0, BT)
        assert pi[class_of(B0, f).element] == class_of(BT, f).element

    def test_examples(self):
        B0, BT = lt([], "P"), lt(["P"], "P")
        pi = projection(B0, BT)
        assert pi[B0.algebra.one] == BT.algebra.one and pi[B0.algebra.zero] == BT.algebra.zero
        assert pi[class_of(B0, Var("P")).element] == BT.algebra.one
        bad = lt(["P", "~P"], "P")
        assert projection(B0, bad).tolist() == [0] * 4

    def test_mismatched_universe(self):
        with pytest.raises(ArgumentError):
            projection(lt([], "P"), lt(["P"], "PQ"))
        with pytest.raises(ArgumentError):
            projection(lt(["P"], "P"), lt(["P"], "P"))

    def test_element_names_follow_model_sets(self):
        B = lt(["P"], "PQ")
        assert B.algebra.names == ("{}", "{2}", "{3}", "{2,3}")
        assert B.model_set(3) == {2, 3}
        assert list(itertools.islice(B.to_dict()["models"], 1)) == [{"P": True, "Q": False}]

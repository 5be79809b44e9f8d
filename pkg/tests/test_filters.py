import itertools

import pytest

from stonework.algebra import atoms, verify_axioms
from stonework.errors import ArgumentError, PreconditionError, SizeError
from stonework.filters import (
    Filter,
    Ultrafilter,
    brute_force_maximal_filters,
    brute_force_ultrafilters,
    check_ultrafilter_prime,
    enumerate_ultrafilters,
    extend_to_ultrafilter,
    filter_generated_by,
    is_filter,
    is_maximal,
    is_ultrafilter,
    principal_filter,
    unit_filter,
)

from conftest import medium_test_algebras, powerset_n, small_test_algebras


def els(A, *names):
    return {A.index(n) for n in names}


def scan_is_filter(A, S):
    """Definition-level check, written independently of the library."""
    S = set(S)
    if A.one not in S:
        return False
    return all((A.meet(x, y) in S) == (x in S and y in S) for x in A.carrier for y in A.carrier)


class TestIsFilter:
    def test_examples(self, p12):
        S = els(p12, "{1}", "{1,2}")
        assert scan_is_filter(p12, S)
        assert is_filter(p12, S)
        assert not is_filter(p12, els(p12, "{1}"))
        assert is_filter(p12, set(p12.carrier))

    def test_out_of_carrier(self, p12):
        with pytest.raises(ArgumentError):
            is_filter(p12, {0, 7})

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_agrees_with_scan_on_all_subsets(self, k):
        A = powerset_n(k)
        for r in range(A.size + 1):
            for S in itertools.combinations(A.carrier, r):
                assert is_filter(A, S) == scan_is_filter(A, S)

    def test_filter_class_validates(self, p12):
        with pytest.raises(PreconditionError):
            Filter(p12, els(p12, "{1}"))
        F = Filter(p12, els(p12, "{1}", "{1,2}"))
        assert F.names() == ["{1}", "{1,2}"] and F.is_proper


class TestPrincipalAndGenerated:
    def test_principal_examples(self, p123):
        a = p123.index("{1,2}")
        expected = {x for x in p123.carrier if p123.meet(x, a) == a}
        assert expected == els(p123, "{1,2}", "{1,2,3}")
        assert principal_filter(p123, a).members == expected
        assert principal_filter(p123, p123.zero).members == set(p123.carrier)
        assert principal_filter(p123, p123.one).members == {p123.one}

    @pytest.mark.parametrize("A", small_test_algebras(), ids=lambda A: f"n{A.size}")
    def test_principal_filters_are_filters(self, A):
        for a in A.carrier:
            assert scan_is_filter(A, principal_filter(A, a).members)

    def test_generated_examples(self, p123):
        assert filter_generated_by(p123, []).members == {p123.one}
        S = els(p123, "{1,2}", "{2,3}")
        assert filter_generated_by(p123, S) == principal_filter(p123, p123.index("{2}"))
        x = p123.index("{1}")
        assert filter_generated_by(p123, {x, p123.complement(x)}).members == set(p123.carrier)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_generated_is_smallest_filter_containing(self, k):
        A = powerset_n(k)
        all_filters = [set(S) for r in range(A.size + 1) for S in itertools.combinations(A.carrier, r)
                       if scan_is_filter(A, S)]
        for r in range(3):
            for S in itertools.combinations(A.carrier, r):
                smallest = set.intersection(*[F for F in all_filters if set(S) <= F])
                assert filter_generated_by(A, S).members == smallest

    @pytest.mark.parametrize("A", small_test_algebras(), ids=lambda A: f"n{A.size}")
    def test_filter_with_zero_is_everything(self, A):
        for F in brute_force_filters(A):
            if A.zero in F:
                assert F == set(A.carrier)


def brute_force_filters(A):
    return [set(S) for r in range(A.size + 1) for S in itertools.combinations(A.carrier, r)
            if scan_is_filter(A, S)] if A.size <= 8 else []


class TestUltrafilters:
    def test_examples(self, p12, trivial):
        S = els(p12, "{1}", "{1,2}")
        assert is_ultrafilter(p12, S) and is_maximal(p12, S)
        assert not is_ultrafilter(p12, {p12.one})
        assert not is_maximal(p12, {p12.one})
        for S in ([], [0]):
            assert not is_ultrafilter(trivial, S)

    def test_ultrafilter_class_validates(self, p12):
        with pytest.raises(PreconditionError):
            Ultrafilter(p12, {p12.one})

    def test_enumerate_examples(self, p123, two, trivial):
        assert len(enumerate_ultrafilters(p123)) == 3
        assert enumerate_ultrafilters(trivial) == []
        assert [u.members for u in enumerate_ultrafilters(two)] == [{two.one}]
        assert [u.members for u in enumerate_ultrafilters(two, method="brute")] == [{two.one}]

    def test_enumeration_cap(self):
        with pytest.raises(SizeError):
            enumerate_ultrafilters(powerset_n(3), cap=4)
        with pytest.raises(SizeError):
            enumerate_ultrafilters(powerset_n(5), method="brute")
        with pytest.raises(ArgumentError):
            enumerate_ultrafilters(powerset_n(1), method="zorn")

    @pytest.mark.parametrize("A", small_test_algebras(), ids=lambda A: f"n{A.size}")
    def test_two_enumeration_routes_agree(self, A):
        by_atoms = enumerate_ultrafilters(A, method="atoms")
        by_brute = enumerate_ultrafilters(A, method="brute")
        assert [u.members for u in by_atoms] == [u.members for u in by_brute]

    @pytest.mark.parametrize("A", small_test_algebras(), ids=lambda A: f"n{A.size}")
    def test_ultrafilters_are_maximal_filters(self, A):
        ultra = set(brute_force_ultrafilters(A))
        assert ultra == set(brute_force_maximal_filters(A))
        assert all(is_maximal(A, u) for u in ultra)

    @pytest.mark.parametrize("k", range(6))
    def test_powerset_ultrafilters_are_principal_at_singletons(self, k):
        A = powerset_n(k)
        ults = enumerate_ultrafilters(A)
        assert len(ults) == k
        singletons = [1 << i for i in range(k)]
        assert [u.members for u in ults] == [principal_filter(A, s).members for s in singletons]
        assert atoms(A) == singletons


class TestExtension:
    def test_from_unit_filter(self, p12):
        U = extend_to_ultrafilter(p12, unit_filter(p12))
        assert U.members == els(p12, "{1}", "{1,2}")

    def test_ultrafilter_unchanged(self, p123):
        for U in enumerate_ultrafilters(p123):
            assert extend_to_ultrafilter(p123, U).members == U.members

    def test_canonical_first_choice(self, p123):
        F = principal_filter(p123, p123.index("{1,2}"))
        U = extend_to_ultrafilter(p123, F)
        assert U.members == principal_filter(p123, p123.index("{1}")).members
        assert F.members <= U.members

    def test_improper_refused(self, p12):
        with pytest.raises(PreconditionError):
            extend_to_ultrafilter(p12, principal_filter(p12, p12.zero))

    def test_other_algebra_refused(self, p12, p123):
        with pytest.raises(ArgumentError):
            extend_to_ultrafilter(p12, unit_filter(p123))

    @pytest.mark.parametrize("A", medium_test_algebras(), ids=lambda A: f"n{A.size}")
    def test_every_nonzero_element_lies_in_an_ultrafilter(self, A):
        for a in A.carrier:
            if a == A.zero:
                continue
            U = extend_to_ultrafilter(A, principal_filter(A, a))
            assert a in U and is_ultrafilter(A, U.members)


class TestPrime:
    @pytest.mark.parametrize("A", medium_test_algebras(), ids=lambda A: f"n{A.size}")
    def test_every_ultrafilter_is_prime(self, A):
        for U in enumerate_ultrafilters(A):
            assert check_ultrafilter_prime(A, U)

    def test_two_element(self, two):
        assert check_ultrafilter_prime(two, Ultrafilter(two, {two.one}))

    def test_precondition(self, p12):
        with pytest.raises(PreconditionError):
            check_ultrafilter_prime(p12, Filter(p12, set(p12.carrier)))

    def test_prime_by_scan(self, p123):
        for U in enumerate_ultrafilters(p123):
            for x, y in itertools.product(p123.carrier, repeat=2):
                if p123.join(x, y) in U:
                    assert x in U or y in U
                if p123.meet(x, y) in U:
                    assert x in U and y in U


def test_medium_algebras_are_boolean():
    for A in medium_test_algebras():
        assert verify_axioms(A).passed

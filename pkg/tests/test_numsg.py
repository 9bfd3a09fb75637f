"""Numerical semigroup primitives."""

from functools import reduce
from itertools import combinations, product
from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ngcurves.errors import (
    BaseNotInSemigroupError,
    GcdNotOneError,
    NonPositiveError,
    NotStrictlyIncreasingError,
    SequenceTooShortError,
)
from ngcurves.numsg import NumericalSemigroup
from ngcurves.verification import pf_brute

gen_tuples = (
    st.lists(st.integers(2, 40), min_size=2, max_size=4, unique=True)
    .map(lambda v: tuple(sorted(v)))
    .filter(lambda v: reduce(gcd, v) == 1)
)


class TestConstruction:
    def test_accepts_coprime_pair(self):
        sg = NumericalSemigroup((6, 7))
        assert sg.generators == (6, 7)

    def test_rejects_common_divisor(self):
        with pytest.raises(GcdNotOneError, match="gcd must be 1"):
            NumericalSemigroup((2, 4))

    def test_rejects_unsorted(self):
        with pytest.raises(NotStrictlyIncreasingError):
            NumericalSemigroup((7, 6))

    def test_rejects_duplicates(self):
        with pytest.raises(NotStrictlyIncreasingError):
            NumericalSemigroup((3, 3, 4))

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveError):
            NumericalSemigroup((0, 3))
        with pytest.raises(NonPositiveError):
            NumericalSemigroup((-2, 3))

    def test_rejects_empty(self):
        with pytest.raises(SequenceTooShortError):
            NumericalSemigroup(())


class TestMembership:
    def test_frobenius_number_is_excluded(self):
        assert not NumericalSemigroup((6, 7)).contains(29)

    def test_zero_is_member(self):
        assert NumericalSemigroup((6, 7)).contains(0)

    def test_multiple_is_member(self):
        assert NumericalSemigroup((6, 7)).contains(30)

    def test_negative_is_not_member(self):
        assert not NumericalSemigroup((6, 7)).contains(-6)

    def test_far_beyond_conductor_is_member(self):
        assert NumericalSemigroup((6, 7)).contains(10**7)

    @pytest.mark.parametrize(
        "gens", [(2, 3), (3, 5, 7), (6, 7), (5, 12, 13), (8, 9, 30), (7, 30)]
    )
    def test_agrees_with_coefficient_enumeration(self, gens):
        sg = NumericalSemigroup(gens)
        limit = 200
        reachable = {
            sum(c * g for c, g in zip(coeffs, gens))
            for coeffs in product(*(range(limit // g + 1) for g in gens))
        }
        for n in range(limit + 1):
            assert sg.contains(n) == (n in reachable)


class TestFrobenius:
    def test_six_seven(self):
        assert NumericalSemigroup((6, 7)).frobenius == 29

    def test_five_seven(self):
        assert NumericalSemigroup((5, 7)).frobenius == 23

    def test_full_semigroup(self):
        assert NumericalSemigroup((1, 5)).frobenius == -1
        assert NumericalSemigroup((1, 5)).conductor == 0

    @given(st.integers(2, 40), st.integers(2, 40))
    def test_two_generator_closed_form(self, a, b):
        assume(a < b and gcd(a, b) == 1)
        assert NumericalSemigroup((a, b)).frobenius == a * b - a - b


class TestApery:
    def test_three_four_base_seven(self):
        ap = NumericalSemigroup((3, 4)).apery(7)
        assert set(ap.elements) == {7, 3, 6, 9, 4, 8, 12}

    def test_two_three_base_five(self):
        ap = NumericalSemigroup((2, 3)).apery(5)
        assert set(ap.elements) == {5, 2, 4, 3, 6}

    def test_six_seven_base_thirteen(self):
        ap = NumericalSemigroup((6, 7)).apery(13)
        assert set(ap.elements) == {13, 6, 12, 18, 24, 30, 36, 7, 14, 21, 28, 35, 42}

    def test_base_must_be_member(self):
        with pytest.raises(BaseNotInSemigroupError):
            NumericalSemigroup((6, 7)).apery(5)
        with pytest.raises(BaseNotInSemigroupError):
            NumericalSemigroup((6, 7)).apery(0)

    def test_base_beyond_sieve_is_fine(self):
        ap = NumericalSemigroup((6, 7)).apery(6 * 7 * 10)
        assert len(ap.elements) == 420

    @given(gen_tuples, st.integers(0, 3), st.integers(1, 4))
    @settings(max_examples=150, deadline=None)
    def test_apery_shape(self, gens, idx, mult):
        sg = NumericalSemigroup(gens)
        s = mult * gens[idx % len(gens)]
        ap = sg.apery(s)
        assert len(ap.elements) == s
        assert ap.elements[0] == s
        assert sorted(e % s for e in ap.elements) == list(range(s))
        for r, e in enumerate(ap.elements):
            if r == 0:
                continue
            assert sg.contains(e)
            assert not sg.contains(e - s)  # least member of its class

    @given(
        gen_tuples,
        st.lists(st.integers(0, 3), min_size=4, max_size=4),
        st.lists(st.integers(0, 2), min_size=4, max_size=4),
    )
    @settings(max_examples=150, deadline=None)
    def test_downward_closure_of_representations(self, gens, coeffs, scoeffs):
        # If a combination lands in an Apery set, every coefficient-wise
        # smaller combination does too.
        sg = NumericalSemigroup(gens)
        coeffs = coeffs[: len(gens)]
        scoeffs = scoeffs[: len(gens)]
        s = sum(c * g for c, g in zip(scoeffs, gens))
        assume(s > 0)
        x = sum(c * g for c, g in zip(coeffs, gens))
        in_apery = lambda v: sg.contains(v) and not sg.contains(v - s)
        assume(in_apery(x))
        for sub in product(*(range(c + 1) for c in coeffs)):
            y = sum(c * g for c, g in zip(sub, gens))
            assert in_apery(y)


class TestPseudoFrobenius:
    def test_symmetric_pair_has_single_value(self):
        assert NumericalSemigroup((6, 7)).pseudo_frobenius() == {29}
        assert NumericalSemigroup((2, 3)).pseudo_frobenius() == {1}

    def test_three_four_five(self):
        sg = NumericalSemigroup((3, 4, 5))
        assert pf_brute(sg) == {1, 2}
        assert sg.pseudo_frobenius() == {1, 2}

    def test_full_semigroup_is_empty(self):
        assert NumericalSemigroup((1, 4)).pseudo_frobenius() == frozenset()

    @given(gen_tuples)
    @settings(max_examples=100, deadline=None)
    def test_agrees_with_brute_force(self, gens):
        sg = NumericalSemigroup(gens)
        assert sg.pseudo_frobenius() == pf_brute(sg)


class TestSymmetry:
    def test_examples(self):
        assert NumericalSemigroup((6, 7)).is_symmetric()
        assert NumericalSemigroup((2, 3)).is_symmetric()
        assert not NumericalSemigroup((3, 4, 5)).is_symmetric()

    @given(st.integers(2, 40), st.integers(2, 40))
    def test_two_generator_semigroups_are_symmetric(self, a, b):
        assume(a < b and gcd(a, b) == 1)
        assert NumericalSemigroup((a, b)).is_symmetric()

    def test_equivalent_to_singleton_pseudo_frobenius(self):
        # exhaustive over pairs and triples with generators <= 20
        for n in (2, 3):
            for gens in combinations(range(2, 21), n):
                if reduce(gcd, gens) != 1:
                    continue
                sg = NumericalSemigroup(gens)
                singleton = sg.pseudo_frobenius() == {sg.frobenius}
                assert sg.is_symmetric() == singleton, gens


class TestSemigroupIdentity:
    def test_redundant_generators_compare_equal(self):
        assert NumericalSemigroup((6, 7, 13)) == NumericalSemigroup((6, 7))
        assert NumericalSemigroup((6, 7, 13)).minimal_generators() == (6, 7)

    def test_distinct_semigroups_differ(self):
        assert NumericalSemigroup((2, 3)) != NumericalSemigroup((2, 5))

    def test_hash_consistent(self):
        assert hash(NumericalSemigroup((6, 7, 13))) == hash(NumericalSemigroup((6, 7)))

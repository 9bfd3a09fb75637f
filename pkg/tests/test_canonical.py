"""Canonical module: membership, generators, levelness, movements."""

from functools import reduce
from itertools import combinations
from math import gcd

import pytest

from ngcurves.canonical import (
    canonical_generators,
    find_movement,
    in_s_minus_v,
    is_level,
    is_nearly_gorenstein,
    omega_contains,
    render_movement,
)
from ngcurves.curve import Curve, Point
from ngcurves.errors import NotCohenMacaulayError


def cm_curves(max_an, lengths=(2, 3, 4)):
    for n in lengths:
        for vals in combinations(range(1, max_an + 1), n):
            if reduce(gcd, vals) != 1:
                continue
            c = Curve(vals)
            if c.is_cm():
                yield c


class TestOmegaMembership:
    def test_known_member(self):
        assert omega_contains(Curve((6, 7, 13)), Point(-29, -23))

    def test_origin_is_never_a_member(self):
        assert not omega_contains(Curve((6, 7, 13)), Point(0, 0))
        assert not omega_contains(Curve((1, 2, 3, 4)), Point(0, 0))

    def test_second_coordinate_in_projection_excludes(self):
        # 36 = 6 * 6 lies in the second projection
        assert not omega_contains(Curve((6, 7, 13)), Point(-29, -36))

    def test_off_lattice_is_not_a_member(self):
        assert not omega_contains(Curve((6, 7, 13)), Point(-29, -22))

    def test_requires_cm(self):
        with pytest.raises(NotCohenMacaulayError):
            omega_contains(Curve((3, 5, 8, 10)), Point(0, 0))


class TestCanonicalGenerators:
    def test_codimension_two_example(self):
        data = canonical_generators(Curve((6, 7, 13)))
        assert data.gens == (Point(-29, -23), Point(-23, -29))
        assert data.degrees == (-4, -4)
        assert data.vmin == data.gens
        assert data.level

    def test_codimension_three_example(self):
        data = canonical_generators(Curve((5, 7, 12, 19)))
        assert data.gens == (Point(-23, -53), Point(-18, -58), Point(-11, -65))
        assert data.level

    def test_positive_generators(self):
        data = canonical_generators(Curve((1, 2, 3, 4)))
        assert data.gens == (Point(1, 3), Point(2, 2), Point(3, 1))
        assert data.degrees == (1, 1, 1)

    def test_generator_count_is_the_type(self):
        for c in cm_curves(14):
            assert len(canonical_generators(c).gens) == c.cm_type(), c.seq

    def test_requires_cm(self):
        with pytest.raises(NotCohenMacaulayError):
            canonical_generators(Curve((3, 5, 8, 10)))

    @pytest.mark.parametrize("k", range(1, 16))
    def test_closed_form_for_triple_family(self, k):
        data = canonical_generators(Curve((k, k + 1, 2 * k + 1)))
        want = {
            Point(-(k * k - k - 1), -(k * k - 2 * k - 1)),
            Point(-(k * k - 2 * k - 1), -(k * k - k - 1)),
        }
        assert set(data.gens) == want

    @pytest.mark.parametrize("k", range(1, 11))
    def test_closed_form_for_quadruple_family(self, k):
        data = canonical_generators(
            Curve((2 * k - 1, 2 * k + 1, 4 * k, 6 * k + 1))
        )
        want = {
            Point(-(4 * k * k - 4 * k - 1), -(8 * k * k - 6 * k - 1)),
            Point(-(4 * k * k - 6 * k), -(8 * k * k - 4 * k - 2)),
            Point(-(4 * k * k - 8 * k - 1), -(8 * k * k - 2 * k - 1)),
        }
        assert set(data.gens) == want


class TestLevel:
    def test_examples(self):
        assert is_level(Curve((5, 7, 12, 19)))
        assert not is_level(Curve((4, 9, 12, 13, 21)))
        assert is_level(Curve((6, 7, 13, 20)))  # single generator


class TestSMinusV:
    def test_zero_when_generators_lie_in_the_semigroup(self):
        assert in_s_minus_v(Curve((1, 2, 3, 4)), Point(0, 0))

    def test_shifted_member(self):
        assert in_s_minus_v(Curve((1, 2, 3, 4)), Point(-1, 5))

    def test_negative_shift_fails(self):
        assert not in_s_minus_v(Curve((1, 2, 3, 4)), Point(1, -5))

    def test_off_lattice_fails(self):
        assert not in_s_minus_v(Curve((1, 2, 3, 4)), Point(1, 0))


class TestNearlyGorenstein:
    def test_examples(self):
        assert is_nearly_gorenstein(Curve((1, 2, 3, 4)))
        assert not is_nearly_gorenstein(Curve((2, 3, 5, 7)))
        assert is_nearly_gorenstein(Curve((6, 7, 13)))

    def test_gorenstein_curves_qualify(self):
        assert is_nearly_gorenstein(Curve((6, 7, 13, 20)))
        assert is_nearly_gorenstein(Curve((2, 3)))

    def test_requires_cm(self):
        with pytest.raises(NotCohenMacaulayError):
            is_nearly_gorenstein(Curve((3, 5, 8, 10)))

    def test_vmin_bounds_when_non_gorenstein(self):
        for c in cm_curves(14):
            if is_nearly_gorenstein(c) and c.cm_type() > 1:
                size = len(canonical_generators(c).vmin)
                assert 2 <= size <= c.seq.n, c.seq


class TestMovement:
    def test_codimension_two_chain(self):
        c = Curve((6, 7, 13))
        chain = find_movement(c)
        assert chain.covers_all
        assert [t.covered for t in chain.translates] == [(0, 6), (7, 13)]
        assert chain.movement == (29, 36)
        assert render_movement(chain, c.seq) == "[0,6],7,13 --(+7)--> 0,6,[7,13]"

    def test_minimal_cover_omits_middle_translate(self):
        c = Curve((1, 2, 3, 4))
        chain = find_movement(c)
        assert [t.covered for t in chain.translates] == [(0, 1, 2), (2, 3, 4)]
        assert chain.movement == (-1, 1)
        assert render_movement(chain, c.seq) == "[0,1,2],3,4 --(+2)--> 0,1,[2,3,4]"

    def test_absent_iff_not_nearly_gorenstein(self):
        assert find_movement(Curve((2, 3, 5, 7))) is None
        for c in cm_curves(12):
            assert (find_movement(c) is not None) == is_nearly_gorenstein(c), c.seq

    def test_gorenstein_chain_brackets_one_entry_per_step(self):
        c = Curve((6, 7, 13, 20))
        chain = find_movement(c)
        assert len(chain.translates) == 5
        assert all(len(t.covered) == 1 for t in chain.translates)
        text = render_movement(chain, c.seq)
        assert text.count("-->") == 4
        assert text == (
            "[0],6,7,13,20 --(+6)--> 0,[6],7,13,20 --(+1)--> 0,6,[7],13,20"
            " --(+6)--> 0,6,7,[13],20 --(+7)--> 0,6,7,13,[20]"
        )

    def test_chain_structure(self):
        for c in cm_curves(12):
            chain = find_movement(c)
            if chain is None:
                continue
            data = canonical_generators(c)
            universe = {g.x for g in c.generators}
            hit = set()
            for t in chain.translates:
                assert in_s_minus_v(c, t.u), c.seq
                assert len(t.covered) == len(data.vmin)
                assert set(t.covered) <= universe
                hit.update(t.covered)
            assert hit >= universe
            xs = [t.u.x for t in chain.translates]
            assert xs == sorted(xs)
            assert chain.movement == tuple(xs)

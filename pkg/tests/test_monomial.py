from itertools import product as cartesian
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import exponent_vectors, primary_ideals
from monideal import (DimensionMismatch, MonomialIdeal, MonomialIdealError,
                      NotPrimaryError, colon, contains, ideal_sum, index,
                      intersect, is_m_primary, m_power, maximal_ideal,
                      minimalize, mu, ord_, power, product)
from monideal.monomial import format_monomial, monomials_of_degree
from oracles import brute_minimal
import worked_examples as D


class TestMinimalize:
    def test_drops_multiples(self):
        I = minimalize([(2, 0, 0), (2, 1, 0), (0, 3, 0)])
        assert I.gens == ((2, 0, 0), (0, 3, 0))

    def test_antichain_kept(self):
        I = minimalize([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert I == maximal_ideal(3)

    def test_corner_generators(self):
        # (x^12, y^7 z^5) + m^13: every degree-13 monomial except the three
        # multiples of x^12 and the three multiples of y^7 z^5
        raw = [(12, 0, 0), (0, 7, 5)] + list(monomials_of_degree(3, 13))
        I = minimalize(raw)
        assert list(I.gens) == brute_minimal(raw)
        assert len(I) == comb(15, 2) - 6 + 2 == 101

    def test_canonical_order(self):
        I = minimalize([(0, 1), (1, 0)])
        assert I.gens == ((1, 0), (0, 1))

    def test_errors(self):
        with pytest.raises(MonomialIdealError):
            minimalize([])
        with pytest.raises(DimensionMismatch):
            minimalize([(1, 0), (1, 0, 0)])
        with pytest.raises(DimensionMismatch):
            minimalize([(1, 0)], dim=3)

    def test_constructor_validates(self):
        with pytest.raises(MonomialIdealError):
            MonomialIdeal(2, ((-1, 0),))
        with pytest.raises(DimensionMismatch):
            MonomialIdeal(2, ((1, 0, 0),))

    @given(st.integers(1, 4).flatmap(lambda d: st.lists(exponent_vectors(d), min_size=1, max_size=80)))
    def test_agrees_with_pairwise_filter(self, raw):
        assert list(minimalize(raw).gens) == brute_minimal(raw)

    def test_large_inputs_use_the_same_answer(self):
        # above 64 vectors the staircase path is taken
        raw = [v for v in cartesian(range(7), range(7), range(5)) if sum(v) >= 6]
        assert list(minimalize(raw).gens) == brute_minimal(raw)

    @given(primary_ideals())
    def test_idempotent(self, I):
        assert minimalize(I.gens) == I


class TestContains:
    def test_examples(self):
        I = D.P("(x^2, y, z)")
        assert contains(I, (3, 0, 0))
        assert not contains(I, (1, 0, 0))
        assert contains(D.FIRST_I, (1, 1, 0))
        assert (1, 1, 0) in D.FIRST_I

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            contains(maximal_ideal(3), (1, 0))

    @given(primary_ideals(), st.data())
    def test_invariant_under_redundant_generators(self, I, data):
        a = data.draw(exponent_vectors(I.dim, 8))
        redundant = list(I.gens) + [tuple(x + 1 for x in g) for g in I.gens]
        assert contains(I, a) == contains(minimalize(redundant), a)


class TestArithmetic:
    def test_m_squared(self):
        assert product(maximal_ideal(3), maximal_ideal(3)) == m_power(3, 2)
        assert len(m_power(3, 2)) == 6

    def test_sum_intersect(self):
        A, B = D.P("(x^2, y)"), D.P("(x, y^3)")
        assert ideal_sum(A, B) == D.P("(x, y)")
        assert intersect(A, B) == D.P("(x^2, x*y, y^3)")

    def test_colon(self):
        assert colon(m_power(3, 3), maximal_ideal(3)) == m_power(3, 2)
        assert colon(D.P("(x^2, y)"), D.P("(x)")) == D.P("(x, y)")

    def test_dimension_checks(self):
        for op in (ideal_sum, product, intersect, colon):
            with pytest.raises(DimensionMismatch):
                op(maximal_ideal(2), maximal_ideal(3))

    def test_operators(self):
        m = maximal_ideal(2)
        assert m * m == m ** 2 == m_power(2, 2)
        assert (m + m) == (m & m) == m
        assert m.colon(m) == MonomialIdeal.unit(2)

    @given(primary_ideals(max_extra=2), st.integers(0, 4))
    def test_power_by_squaring(self, I, k):
        expected = MonomialIdeal.unit(I.dim)
        for _ in range(k):
            expected = product(expected, I)
        assert power(I, k) == expected

    def test_principal_power(self):
        assert power(D.P("(x*y^2)"), 10 ** 6).gens == ((10 ** 6, 2 * 10 ** 6, 0),)
        with pytest.raises(MonomialIdealError):
            power(maximal_ideal(2), -1)

    @given(primary_ideals(), st.data())
    def test_order_additive(self, I, data):
        J = data.draw(primary_ideals(dims=(I.dim,)))
        assert ord_(product(I, J)) == ord_(I) + ord_(J)

    @given(primary_ideals(), st.data())
    def test_colon_laws(self, I, data):
        J = data.draw(primary_ideals(dims=(I.dim,)))
        Q = colon(I, J)
        assert all(contains(I, a) for a in product(Q, J).gens)
        assert all(contains(Q, a) for a in I.gens)

    @given(primary_ideals(), st.data())
    def test_colon_is_largest(self, I, data):
        # every monomial a with a + g in I for all g in Delta(J) lies in I : J
        J = data.draw(primary_ideals(dims=(I.dim,), max_extra=1))
        Q = colon(I, J)
        box = [max(g[k] for g in I.gens) for k in range(I.dim)]
        for a in cartesian(*(range(b + 1) for b in box)):
            expected = all(contains(I, tuple(x + y for x, y in zip(a, g))) for g in J.gens)
            assert contains(Q, a) == expected


class TestOrderIndexMu:
    def test_order(self):
        assert ord_(D.FIRST_I) == 2
        assert ord_(maximal_ideal(3)) == 1
        assert ord_(D.TEN_CIT) == 3

    def test_index(self):
        assert index(D.XYYZ_K) == 7
        for k in range(1, 5):
            assert index(m_power(3, k)) == k
        for n in range(1, 5):
            assert index(D.P(f"(x^{n + 1}, y, z)")) == n + 1

    def test_index_needs_primary(self):
        with pytest.raises(NotPrimaryError):
            index(D.P("(x*y, z)"))

    def test_mu(self):
        assert mu(D.TEN_CIT) == 10 == comb(5, 3)
        assert mu(D.SHAPE_FAIL_CIT) == 6
        for d in (2, 3, 4):
            for r in range(1, 5):
                assert mu(m_power(d, r)) == comb(d + r - 1, r)

    def test_primary(self):
        assert is_m_primary(D.P("(x^2, y, z)"))
        assert not is_m_primary(D.P("(x*y)", ("x", "y")))
        assert is_m_primary(D.SHAPE_FAIL_I1)
        assert not is_m_primary(MonomialIdeal.unit(3))

    @given(primary_ideals())
    def test_sandwich(self, I):
        s, r = index(I), ord_(I)
        assert s >= r
        assert (s == r) == (I == m_power(I.dim, r))
        assert all(contains(I, a) for a in monomials_of_degree(I.dim, s))
        assert not all(contains(I, a) for a in monomials_of_degree(I.dim, s - 1))
        assert all(sum(g) >= r for g in I.gens)
        assert not all(sum(g) >= r + 1 for g in I.gens)


class TestFormatting:
    def test_monomial(self):
        assert format_monomial((2, 1, 0), "xyz") == "x^2*y"
        assert format_monomial((0, 0, 0), "xyz") == "1"

    def test_ideal(self):
        assert str(D.P("(z, x^2, y)")) == "(x^2, y, z)"
        assert MonomialIdeal.unit(2).format() == "(1)"

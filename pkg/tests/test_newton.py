import pytest
from hypothesis import given, strategies as st

from conftest import complete_ideals, exponent_vectors, primary_ideals
from monideal import (DimensionMismatch, MonomialIdealError, NotPrimaryError,
                      check_closure, contains, in_newton_polyhedron,
                      integral_closure, is_complete, m_power, maximal_ideal,
                      minimalize, newton_polyhedron, newton_vertices, ord_,
                      power_test, product, rees_valuations, star_power,
                      star_product, weight_value)
from monideal._lp import convex_dominance
from monideal.newton import dot, hyperplane_normal, in_power, power_certificate
from oracles import caratheodory_member, lattice_closure
import worked_examples as D


# -- membership -----------------------------------------------------------------


class TestMembership:
    def test_corner_points(self):
        mI = product(maximal_ideal(3), D.CORNER_I0)
        for a in D.CORNER_EXTRA:
            assert in_newton_polyhedron(mI, a)
            assert not contains(mI, a)

    def test_generators_are_members(self):
        for g in D.XYYZ_K.gens:
            assert in_newton_polyhedron(D.XYYZ_K, g)

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            in_newton_polyhedron(maximal_ideal(3), (1, 1))

    @given(primary_ideals(max_extra=4), st.data())
    def test_lp_matches_caratheodory(self, I, data):
        a = data.draw(exponent_vectors(I.dim, 7))
        ok, cert = convex_dominance(I.gens, a)
        assert ok == caratheodory_member(I.gens, a)
        if ok:
            assert sum(cert.values()) == 1 and all(v > 0 for v in cert.values())
            assert len(cert) <= I.dim + 1
            for k in range(I.dim):
                assert sum(l * I.gens[i][k] for i, l in cert.items()) <= a[k]
        else:
            w, c = cert
            assert all(x >= 0 for x in w)
            assert dot(w, a) < c
            assert all(dot(w, g) >= c for g in I.gens)

    @given(primary_ideals(max_extra=4), st.data())
    def test_power_test_oracle(self, I, data):
        a = data.draw(exponent_vectors(I.dim, 6))
        member = in_newton_polyhedron(I, a)
        # the power test can only confirm membership
        if power_test(I, a, 8):
            assert member
        if member:
            k, mult = power_certificate(I, a)
            assert in_power(I, tuple(k * e for e in a), k)

    def test_power_test_examples(self):
        mI = product(maximal_ideal(3), D.CORNER_I0)
        assert power_test(mI, (6, 4, 3), 4)
        assert not power_test(mI, (5, 4, 3), 4)
        assert in_power(maximal_ideal(2), (1, 1), 2)
        assert not in_power(maximal_ideal(2), (1, 0), 2)


# -- closure ----------------------------------------------------------------------


class TestClosure:
    def test_powers_of_m_are_complete(self):
        for d in (2, 3, 4):
            for k in (1, 2, 3):
                assert is_complete(m_power(d, k))

    def test_corner(self):
        assert D.CORNER_I0 == D.corner_by_hand()
        assert is_complete(D.CORNER_I0)
        assert integral_closure(D.CORNER_GENS) == D.CORNER_I0
        assert not is_complete(product(maximal_ideal(3), D.CORNER_I0))

    def test_pure_power_part(self):
        # (y^r, z^r) + x^N closes up to contain (y, z)^r
        for r in (2, 3, 4):
            I = D.P(f"(y^{r}, z^{r}, x^9)")
            J = integral_closure(I)
            assert all(contains(J, a) for a in D.P(f"(y, z)^{r}").gens)

    def test_two_variable_example(self):
        assert integral_closure(D.P("(x^3, y^3)", "xy")) == m_power(2, 3)
        assert integral_closure(D.P("(x^2, y^4)", "xy")) == D.P("(x^2, x*y^2, y^4)", "xy")

    def test_unit_ideal(self):
        from monideal import MonomialIdeal
        assert integral_closure(MonomialIdeal.unit(3)).is_unit()

    def test_simple_k_printed_is_not_complete(self):
        assert not is_complete(D.SIMPLE_K_PRINTED)
        assert integral_closure(D.SIMPLE_K_PRINTED) == D.TEN_CIT

    def test_check_closure_accepts_and_rejects(self):
        mI = product(maximal_ideal(3), D.CORNER_I0)
        J = integral_closure(mI)
        check_closure(mI, J)
        with pytest.raises(AssertionError):
            check_closure(mI, mI)
        with pytest.raises(AssertionError):
            check_closure(D.P("(x^2, y^2)", "xy"), D.P("(x, y^2)", "xy"))

    @given(primary_ideals())
    def test_closure_laws(self, I):
        J = integral_closure(I)
        assert all(contains(J, g) for g in I.gens)
        assert integral_closure(J) == J
        assert ord_(J) == ord_(I)
        check_closure(I, J)

    @given(primary_ideals(), st.data())
    def test_monotone(self, I, data):
        extra = data.draw(st.lists(exponent_vectors(I.dim), max_size=2))
        bigger = minimalize(list(I.gens) + [e for e in extra if any(e)])
        B = integral_closure(bigger)
        assert all(contains(B, g) for g in integral_closure(I).gens)

    @given(complete_ideals())
    def test_no_new_pure_powers(self, I):
        J = integral_closure(I)
        assert [J.pure_power(i) for i in range(I.dim)] == [I.pure_power(i) for i in range(I.dim)]


class TestStar:
    def test_first_neighbourhood_factorization(self):
        left = star_product(maximal_ideal(3), D.FIRST_I)
        assert left == star_product(D.FIRST_PX, D.FIRST_PY, D.FIRST_PZ)

    def test_simple(self):
        assert star_product(D.SIMPLE_I, D.SIMPLE_IP) == star_product(maximal_ideal(3), D.SIMPLE_K_PRINTED)

    def test_m(self):
        assert star_product(maximal_ideal(3), maximal_ideal(3)) == m_power(3, 2)
        assert star_power(maximal_ideal(2), 3) == m_power(2, 3)
        assert star_power(maximal_ideal(2), 0).is_unit()
        with pytest.raises(MonomialIdealError):
            star_product()

    @given(complete_ideals(dims=(2, 3)), st.data())
    def test_laws(self, I, data):
        J = data.draw(complete_ideals(dims=(I.dim,), max_extra=2))
        K = data.draw(complete_ideals(dims=(I.dim,), max_extra=1, max_degree=3))
        IJ = star_product(I, J)
        assert IJ == star_product(J, I)
        assert star_product(IJ, K) == star_product(I, star_product(J, K))
        assert ord_(IJ) == ord_(I) + ord_(J)


# -- valuations -------------------------------------------------------------------


class TestRees:
    def test_corner(self):
        assert rees_valuations(D.CORNER_I0) == D.CORNER_REES

    def test_xyyz(self):
        assert rees_valuations(D.XYYZ_K) == D.XYYZ_REES

    def test_powers_of_m(self):
        for d in (2, 3, 4):
            assert rees_valuations(m_power(d, 3)) == [(1,) * d]

    def test_errors(self):
        with pytest.raises(NotPrimaryError):
            rees_valuations(D.P("(x*y, z)"))
        with pytest.raises(MonomialIdealError):
            rees_valuations(m_power(5, 1))
        assert rees_valuations(m_power(5, 1), max_dim=5) == [(1,) * 5]

    def test_weight_values(self):
        assert weight_value((6, 8, 11), D.XYYZ_K) == 40
        assert weight_value((1, 1, 1), D.FIRST_I) == ord_(D.FIRST_I)
        assert weight_value((91, 96, 84), D.CORNER_I0) == min(12 * 91, 7 * 96 + 5 * 84) == 1092
        with pytest.raises(DimensionMismatch):
            weight_value((1, 1), D.FIRST_I)

    def test_hyperplane_normal(self):
        assert hyperplane_normal([(2, 0, 0), (0, 2, 0), (0, 0, 2)]) == (1, 1, 1)
        assert hyperplane_normal([(1, 0, 0), (2, 0, 0), (3, 0, 0)]) == (0, 0, 0)

    def test_polyhedron(self):
        N = newton_polyhedron(D.XYYZ_K)
        assert all(g in N for g in D.XYYZ_K.gens)
        assert (0, 0, 0) not in N
        assert N.vertices == newton_vertices(D.XYYZ_K)
        for w, c in N.facets:
            assert all(dot(w, v) >= c for v in N.vertices)

    @given(primary_ideals())
    def test_facet_reconstruction(self, I):
        facets = [(w, weight_value(w, I)) for w in rees_valuations(I)]
        for w, _ in facets:
            assert min(w) >= 1
        assert lattice_closure(I, facets) == integral_closure(I)

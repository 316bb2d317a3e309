"""Tests for the exterior-algebra Lefschetz/Hodge laboratory."""

from fractions import Fraction
from math import factorial

import pytest

from qflag.kaehler import (
    SL2_RANK_BOUND,
    ExtForm,
    GaussScalar,
    adjoint_Lambda,
    all_keys,
    bidegree_keys,
    counting_H,
    fundamental_form,
    gram_matrix,
    gram_positive_definite,
    hermitian_positive_definite,
    hodge_star,
    hodge_star_inverse,
    lambda_is_metric_adjoint,
    lefschetz_L,
    lefschetz_decompose,
    lefschetz_power_bijective,
    metric,
    primitive_test,
    sl2_check,
)

I = GaussScalar.i_unit()


def basis(n, holo, anti):
    return ExtForm.basis(n, (tuple(holo), tuple(anti)))


def L_power(form, j):
    for _ in range(j):
        form = lefschetz_L(form)
    return form


class TestGaussScalar:
    def test_field_ops(self):
        a = GaussScalar(Fraction(1, 2), 3)
        b = GaussScalar(2, -1)
        assert a + b == GaussScalar(Fraction(5, 2), 2)
        assert a * b == GaussScalar(4, Fraction(11, 2))
        assert (a / b) * b == a
        assert a - a == GaussScalar()

    def test_conj_is_involutive_automorphism(self):
        a = GaussScalar(2, 5)
        b = GaussScalar(-1, Fraction(1, 3))
        assert a.conj().conj() == a
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()

    def test_i_powers(self):
        assert GaussScalar.i_power(1) == I
        assert GaussScalar.i_power(2) == GaussScalar(-1)
        assert GaussScalar.i_power(-1) == GaussScalar(0, -1)
        assert GaussScalar.i_power(4) == GaussScalar(1)


class TestExtForm:
    def test_wedge_anticommutes_in_degree_one(self):
        n = 2
        dz1 = basis(n, [1], [])
        dz2 = basis(n, [2], [])
        assert dz1.wedge(dz2) == -(dz2.wedge(dz1))
        assert dz1.wedge(dz1).is_zero()

    def test_wedge_graded_commutativity(self):
        n = 3
        for key1 in all_keys(n):
            w = ExtForm.basis(n, key1)
            k = len(key1[0]) + len(key1[1])
            for key2 in all_keys(n):
                v = ExtForm.basis(n, key2)
                l = len(key2[0]) + len(key2[1])
                sign = -1 if (k * l) % 2 else 1
                assert w.wedge(v) == v.wedge(w).scale(sign)

    def test_star_antimultiplicative(self):
        # (w ^ v)* = (-1)^(kl) v* ^ w*
        n = 2
        for key1 in all_keys(n):
            w = ExtForm.basis(n, key1)
            k = len(key1[0]) + len(key1[1])
            for key2 in all_keys(n):
                v = ExtForm.basis(n, key2)
                l = len(key2[0]) + len(key2[1])
                sign = -1 if (k * l) % 2 else 1
                lhs = w.wedge(v).conjugate()
                rhs = v.conjugate().wedge(w.conjugate()).scale(sign)
                assert lhs == rhs

    def test_star_swaps_bidegrees(self):
        n = 3
        form = basis(n, [1, 3], [2]).scale(GaussScalar(1, 2))
        image = form.conjugate()
        assert image.bidegrees() == [(1, 2)]
        assert form.conjugate().conjugate() == form

    def test_bidegree_split(self):
        n = 2
        mixed = basis(n, [1], []) + basis(n, [], [2])
        assert mixed.bidegree_component(1, 0) == basis(n, [1], [])
        with pytest.raises(ValueError):
            mixed.homogeneous_bidegree()


class TestFundamentalForm:
    def test_n1_single_term(self):
        sigma = fundamental_form(1)
        assert sigma.terms == {((1,), (1,)): I}

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_reality(self, n):
        sigma = fundamental_form(n)
        assert sigma.conjugate() == sigma

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_top_power_vanishes(self, n):
        # sigma^n spans the top degree and sigma^(n+1) overflows to zero
        assert not L_power(ExtForm.unit(n), n).is_zero()
        assert L_power(ExtForm.unit(n), n + 1).is_zero()

    def test_rejects_bad_dimension(self):
        with pytest.raises(ValueError):
            fundamental_form(0)


class TestOperators:
    def test_L_on_unit(self):
        n = 2
        assert lefschetz_L(ExtForm.unit(n)) == fundamental_form(n)

    def test_H_scales_by_degree_offset(self):
        n = 2
        assert counting_H(ExtForm.unit(n)) == ExtForm.unit(n).scale(-n)
        two_form = fundamental_form(n)
        assert counting_H(two_form) == two_form.scale(2 - n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_lambda_counts_sigma(self, n):
        assert adjoint_Lambda(fundamental_form(n)) == ExtForm.unit(n).scale(n)

    def test_operators_extend_linearly(self):
        n = 2
        mixed = ExtForm.unit(n) + fundamental_form(n)
        assert counting_H(mixed) == ExtForm.unit(n).scale(-2) + ExtForm.zero(n)
        assert lefschetz_L(mixed) == fundamental_form(n) + L_power(ExtForm.unit(n), 2)


class TestPrimitives:
    def test_unit_primitive(self):
        assert primitive_test(ExtForm.unit(2))

    def test_traceless_diagonal_primitive(self):
        n = 2
        w = basis(n, [1], [1]) - basis(n, [2], [2])
        assert primitive_test(w)

    def test_sigma_not_primitive(self):
        assert not primitive_test(fundamental_form(2))

    def test_above_middle_degree(self):
        n = 1
        top = basis(n, [1], [1])
        assert not primitive_test(top)
        assert primitive_test(ExtForm.zero(n))

    def test_decompose_primitive_is_identity(self):
        n = 2
        w = basis(n, [1], [1]) - basis(n, [2], [2])
        assert lefschetz_decompose(w) == [(0, w)]

    def test_decompose_sigma(self):
        n = 2
        decomposition = lefschetz_decompose(fundamental_form(n))
        assert len(decomposition) == 1
        j, part = decomposition[0]
        assert j == 1
        assert part == ExtForm.unit(n)

    def test_decompose_diagonal_form(self):
        n = 2
        w = basis(n, [1], [1])
        parts = dict(lefschetz_decompose(w))
        assert set(parts) == {0, 1}
        assert parts[0] == (basis(n, [1], [1]) - basis(n, [2], [2])).scale(Fraction(1, 2))
        assert parts[1] == ExtForm.unit(n).scale(GaussScalar(0, Fraction(-1, 2)))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_decompose_reassembles_and_components_primitive(self, n):
        for key in all_keys(n):
            w = ExtForm.basis(n, key)
            total = ExtForm.zero(n)
            for j, part in lefschetz_decompose(w):
                for a, b in part.bidegrees():
                    assert primitive_test(part.bidegree_component(a, b))
                total = total + L_power(part, j)
            assert total == w


class TestHodgeStar:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_star_of_unit(self, n):
        expected = L_power(ExtForm.unit(n), n).scale(Fraction(1, factorial(n)))
        assert hodge_star(ExtForm.unit(n)) == expected

    def test_star_sigma_fixed_at_n2(self):
        assert hodge_star(fundamental_form(2)) == fundamental_form(2)

    def test_star_squared_on_two_forms_n2(self):
        n = 2
        for key in all_keys(n):
            if len(key[0]) + len(key[1]) != 2:
                continue
            form = ExtForm.basis(n, key)
            assert hodge_star(hodge_star(form)) == form

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_star_invertible(self, n):
        for key in all_keys(n):
            form = ExtForm.basis(n, key)
            assert hodge_star_inverse(hodge_star(form)) == form
            assert hodge_star(hodge_star_inverse(form)) == form

    @pytest.mark.parametrize("n", [1, 2])
    def test_star_squared_parity(self, n):
        for key in all_keys(n):
            form = ExtForm.basis(n, key)
            sign = -1 if (len(key[0]) + len(key[1])) % 2 else 1
            assert hodge_star(hodge_star(form)) == form.scale(sign)


class TestMetric:
    def test_unit_norm(self):
        for n in (1, 2, 3):
            assert metric(ExtForm.unit(n), ExtForm.unit(n)) == GaussScalar(1)

    def test_hermitian_symmetry(self):
        n = 2
        for key1 in all_keys(n):
            w = ExtForm.basis(n, key1)
            for key2 in all_keys(n):
                v = ExtForm.basis(n, key2)
                assert metric(w, v) == metric(v, w).conj()

    def test_degree_mismatch_is_zero(self):
        n = 2
        assert metric(ExtForm.unit(n), fundamental_form(n)) == GaussScalar()

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_holomorphic_generator_norm_positive(self, n):
        dz1 = basis(n, [1], [])
        value = metric(dz1, dz1)
        assert value.im == 0 and value.re > 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_gram_positive_definite(self, n):
        assert gram_positive_definite(n)

    def test_gram_is_hermitian_block(self):
        matrix = gram_matrix(2, 1, 1)
        assert hermitian_positive_definite(matrix)


class TestSl2:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_relations(self, n):
        assert sl2_check(n)

    def test_bound_enforced(self):
        with pytest.raises(ValueError):
            sl2_check(SL2_RANK_BOUND + 1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_lambda_is_adjoint_of_L(self, n):
        assert lambda_is_metric_adjoint(n)

    @pytest.mark.parametrize("n", [2, 3])
    def test_lefschetz_powers_are_isomorphisms(self, n):
        for k in range(n):
            assert lefschetz_power_bijective(n, k)

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            lefschetz_power_bijective(2, 2)


def test_basis_sizes():
    assert len(all_keys(2)) == 16
    assert len(all_keys(3)) == 64
    assert len(bidegree_keys(3, 1, 1)) == 9


def test_zero_form_degeneracies():
    n = 2
    zero = ExtForm.zero(n)
    assert hodge_star(zero).is_zero()
    assert lefschetz_decompose(zero) == []
    assert metric(zero, fundamental_form(n)) == GaussScalar()
    assert metric(zero, zero) == GaussScalar()

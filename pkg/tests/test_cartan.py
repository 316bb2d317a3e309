"""Tests for the root-system and weight-lattice engine."""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from qflag.cartan import (
    Weight,
    bilinear_form,
    build_root_system,
    cominuscule_nodes,
    fundamental_weight,
    inverse_cartan_entry,
    positive_root_count,
    weight_to_root_basis,
    weyl_dim,
    weyl_vector,
)

ALL_SYSTEMS = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(3, 9)]
    + [("E6", 6), ("E7", 7)]
)


class TestConstruction:
    def test_a2(self):
        rs = build_root_system("A", 2)
        assert rs.cartan == ((2, -1), (-1, 2))
        assert len(rs.positive_roots) == 3

    def test_c3_convention(self):
        # with the long root at node 3, a_ij = (a_i^v, a_j) puts the -2
        # in row 2, column 3
        rs = build_root_system("C", 3)
        assert rs.cartan[1][2] == -2
        assert rs.cartan[2][1] == -1

    def test_b3_convention(self):
        rs = build_root_system("B", 3)
        assert rs.cartan[1][2] == -1
        assert rs.cartan[2][1] == -2

    def test_e7(self):
        rs = build_root_system("E7", 7)
        assert len(rs.positive_roots) == 63
        assert rs.highest_root == (2, 2, 3, 4, 3, 2, 1)

    @pytest.mark.parametrize("series,rank", ALL_SYSTEMS)
    def test_positive_root_counts(self, series, rank):
        rs = build_root_system(series, rank)
        assert len(rs.positive_roots) == positive_root_count(series, rank)

    @pytest.mark.parametrize("series,rank", ALL_SYSTEMS)
    def test_cartan_invariants(self, series, rank):
        rs = build_root_system(series, rank)
        n = rs.rank
        for i in range(n):
            assert rs.cartan[i][i] == 2
            for j in range(n):
                if i != j:
                    assert rs.cartan[i][j] <= 0
                    assert (rs.cartan[i][j] == 0) == (rs.cartan[j][i] == 0)
        # diag(1/d) * A is the symmetric matrix of root products, and the
        # shortest simple root is normalised to squared length 2
        products = [
            [Fraction(rs.cartan[i][j]) / rs.symmetrizers[i] for j in range(n)]
            for i in range(n)
        ]
        assert all(products[i][j] == products[j][i] for i in range(n) for j in range(n))
        assert min(products[i][i] for i in range(n)) == 2

    @pytest.mark.parametrize("series,rank", ALL_SYSTEMS)
    def test_highest_root_is_componentwise_maximum(self, series, rank):
        rs = build_root_system(series, rank)
        assert all(
            all(h >= c for h, c in zip(rs.highest_root, root))
            for root in rs.positive_roots
        )

    def test_invalid_ranks(self):
        for series, rank in [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E6", 5), ("E7", 8)]:
            with pytest.raises(ValueError):
                build_root_system(series, rank)
        with pytest.raises(ValueError):
            build_root_system("F", 4)


class TestBilinearForm:
    def test_fundamental_against_simple(self):
        # (w_1, a_1) = 1 in the A series, where d_1 = 1; the fundamental
        # coordinates of a_1 are (a_1, a_j^v) = column 1 of the Cartan matrix
        for n in range(1, 6):
            rs = build_root_system("A", n)
            w1 = fundamental_weight(rs, 1)
            alpha1 = Weight.of(*[rs.cartan[j][0] for j in range(n)])
            assert bilinear_form(rs, w1, alpha1) == 1

    def test_a2_values(self):
        rs = build_root_system("A", 2)
        w1 = fundamental_weight(rs, 1)
        assert bilinear_form(rs, w1, w1) == Fraction(2, 3)

    @pytest.mark.parametrize("series,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
    def test_symmetry(self, series, rank):
        rs = build_root_system(series, rank)
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                wi, wj = fundamental_weight(rs, i), fundamental_weight(rs, j)
                assert bilinear_form(rs, wi, wj) == bilinear_form(rs, wj, wi)

    @pytest.mark.parametrize("series,rank", [("A", 4), ("C", 3), ("E6", 6)])
    def test_root_basis_round_trip(self, series, rank):
        # (weight, a_j^v) recovers the fundamental coordinates
        rs = build_root_system(series, rank)
        w = Weight.of(*range(1, rank + 1))
        x = weight_to_root_basis(rs, w)
        for j in range(rank):
            pairing = sum(Fraction(rs.cartan[j][i]) * x[i] for i in range(rank))
            assert pairing == w.coords[j]


class TestInverseCartanEntry:
    def test_a_series_closed_form(self):
        for n in range(1, 9):
            rs = build_root_system("A", n)
            for s in range(1, n + 1):
                assert inverse_cartan_entry(rs, s) == Fraction(s * (n + 1 - s), n + 1)

    def test_spot_values(self):
        assert inverse_cartan_entry(build_root_system("A", 1), 1) == Fraction(1, 2)
        assert inverse_cartan_entry(build_root_system("D", 5), 1) == 1
        assert inverse_cartan_entry(build_root_system("E6", 6), 6) == Fraction(4, 3)
        assert inverse_cartan_entry(build_root_system("E7", 7), 7) == Fraction(3, 2)

    def test_node_range(self):
        with pytest.raises(ValueError):
            inverse_cartan_entry(build_root_system("A", 3), 4)


class TestWeylDim:
    def test_sl2_ladder(self):
        rs = build_root_system("A", 1)
        for k in range(8):
            assert weyl_dim(rs, fundamental_weight(rs, 1, k)) == k + 1

    def test_small_values(self):
        assert weyl_dim(build_root_system("A", 2), Weight.of(1, 0)) == 3
        assert weyl_dim(build_root_system("B", 2), Weight.of(1, 0)) == 5
        assert weyl_dim(build_root_system("E6", 6), fundamental_weight(build_root_system("E6", 6), 6)) == 27
        assert weyl_dim(build_root_system("E7", 7), fundamental_weight(build_root_system("E7", 7), 7)) == 56

    def test_trivial_weight(self):
        for series, rank in [("A", 3), ("C", 3), ("E6", 6)]:
            rs = build_root_system(series, rank)
            assert weyl_dim(rs, Weight.of(*[0] * rank)) == 1

    def test_monomial_counting_oracle(self):
        # sections of degree k over projective n-space are the degree-k
        # monomials in n+1 variables
        for n in range(1, 6):
            rs = build_root_system("A", n)
            for k in range(7):
                count = sum(1 for _ in combinations_with_replacement(range(n + 1), k))
                assert weyl_dim(rs, fundamental_weight(rs, 1, k)) == count

    def test_strictly_increasing_along_cominuscule_rays(self):
        for series, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("E6", 6), ("E7", 7)]:
            rs = build_root_system(series, rank)
            for s in cominuscule_nodes(rs):
                dims = [weyl_dim(rs, fundamental_weight(rs, s, k)) for k in range(5)]
                assert all(a < b for a, b in zip(dims, dims[1:]))

    def test_rejects_non_dominant(self):
        rs = build_root_system("A", 2)
        with pytest.raises(ValueError):
            weyl_dim(rs, Weight.of(-1, 0))
        with pytest.raises(ValueError):
            weyl_dim(rs, Weight.of(Fraction(1, 2), 0))


class TestCominusculeNodes:
    def test_sets(self):
        assert cominuscule_nodes(build_root_system("A", 5)) == (1, 2, 3, 4, 5)
        assert cominuscule_nodes(build_root_system("B", 4)) == (1,)
        assert cominuscule_nodes(build_root_system("C", 4)) == (4,)
        assert cominuscule_nodes(build_root_system("D", 5)) == (1, 4, 5)
        assert cominuscule_nodes(build_root_system("E6", 6)) == (1, 6)
        assert cominuscule_nodes(build_root_system("E7", 7)) == (7,)

    def test_counts(self):
        expected = {"A": lambda n: n, "B": lambda n: 1, "C": lambda n: 1}
        for series, rank in ALL_SYSTEMS:
            count = len(cominuscule_nodes(build_root_system(series, rank)))
            if series in expected:
                assert count == expected[series](rank)
            elif series == "D" and rank >= 4:
                assert count == 3
            elif series == "E6":
                assert count == 2
            elif series == "E7":
                assert count == 1

    def test_weyl_vector(self):
        rs = build_root_system("A", 3)
        assert weyl_vector(rs).coords == (1, 1, 1)

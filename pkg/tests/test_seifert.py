"""Seifert-matrix calculus: Alexander, signatures, Arf, mirrors."""

import random
from fractions import Fraction

import pytest

from eqcasson.errors import (ExactnessError, NotAKnotMatrix, SignatureAtRoot)
from eqcasson.kernels import STATS
from eqcasson.seifert import (FIGURE_EIGHT, RIGHT_TREFOIL, UNKNOT,
                              SeifertMatrix, alexander,
                              alexander_second_derivative, arf, direct_sum,
                              mirror, random_seifert_matrix, signature_sum,
                              tl_signature, total_signature)

LEFT_TREFOIL = mirror(RIGHT_TREFOIL)


class TestMatrix:
    def test_validation(self):
        with pytest.raises(NotAKnotMatrix):
            SeifertMatrix(((0, 0), (0, 0)))
        with pytest.raises(NotAKnotMatrix):
            SeifertMatrix(((1, 2, 3), (4, 5, 6)))

    def test_json_roundtrip(self):
        V = RIGHT_TREFOIL
        assert SeifertMatrix.from_json(V.to_json()) == V

    def test_size(self):
        assert UNKNOT.size == 0
        assert RIGHT_TREFOIL.size == 2

    def test_nontrivial_skew_part_accepted(self):
        # det(V - V^T) = 1 can hold without the standard symplectic shape.
        SeifertMatrix(((0, 2), (1, 0)))


class TestAlexander:
    def test_unknot(self):
        assert alexander(UNKNOT).to_pairs() == [[0, 1]]

    def test_trefoil(self):
        assert alexander(RIGHT_TREFOIL).to_pairs() == [[-1, 1], [0, -1], [1, 1]]

    def test_figure_eight(self):
        assert alexander(FIGURE_EIGHT).to_pairs() == [[-1, -1], [0, 3], [1, -1]]

    def test_mirror_invariant(self):
        assert alexander(LEFT_TREFOIL) == alexander(RIGHT_TREFOIL)

    def test_unknotted_matrix(self):
        assert alexander(SeifertMatrix(((0, 1), (0, 1)))).to_pairs() == [[0, 1]]

    def test_connected_sum_multiplies(self):
        V = direct_sum(RIGHT_TREFOIL, FIGURE_EIGHT)
        prod = alexander(RIGHT_TREFOIL).poly * alexander(FIGURE_EIGHT).poly
        assert alexander(V).poly == prod

    def test_second_derivative(self):
        assert alexander_second_derivative(RIGHT_TREFOIL) == 2
        assert alexander_second_derivative(FIGURE_EIGHT) == -2


class TestSignature:
    def test_trefoil_total(self):
        assert total_signature(RIGHT_TREFOIL) == -2
        assert total_signature(LEFT_TREFOIL) == 2

    def test_level_zero(self):
        assert tl_signature(RIGHT_TREFOIL, 0) == 0
        assert tl_signature(UNKNOT, Fraction(1, 2)) == 0

    def test_string_level(self):
        assert tl_signature(RIGHT_TREFOIL, "1/2") == -2

    def test_symmetry_and_periodicity(self):
        a = Fraction(2, 5)
        assert tl_signature(RIGHT_TREFOIL, a) == tl_signature(
            RIGHT_TREFOIL, 1 - a)
        assert tl_signature(RIGHT_TREFOIL, a) == tl_signature(
            RIGHT_TREFOIL, a + 1)

    def test_signature_at_root(self):
        with pytest.raises(SignatureAtRoot):
            tl_signature(RIGHT_TREFOIL, Fraction(1, 6))

    def test_sum_over_fifth_roots(self):
        assert signature_sum(RIGHT_TREFOIL, 5) == -8

    def test_mirror_negates(self):
        for m, n in [(1, 2), (1, 3), (2, 5), (3, 7)]:
            a = Fraction(m, n)
            assert tl_signature(LEFT_TREFOIL, a) == -tl_signature(
                RIGHT_TREFOIL, a)

    def test_connected_sum_adds(self):
        V = direct_sum(RIGHT_TREFOIL, RIGHT_TREFOIL)
        assert total_signature(V) == -4

    def test_t25_sum(self):
        V = SeifertMatrix(((-1, 1, 0, 0), (0, -1, 1, 0),
                           (0, 0, -1, 1), (0, 0, 0, -1)))
        assert signature_sum(V, 3) == -8

    def test_always_even(self):
        rng = random.Random(11)
        for _ in range(20):
            V = random_seifert_matrix(rng, 2 * rng.randint(1, 3))
            for n in (2, 3, 5, 7):
                for m in range(1, n):
                    try:
                        assert tl_signature(V, Fraction(m, n)) % 2 == 0
                    except SignatureAtRoot:
                        pass


class TestArf:
    def test_known_values(self):
        assert arf(UNKNOT) == 0
        assert arf(RIGHT_TREFOIL) == 1
        assert arf(FIGURE_EIGHT) == 1

    def test_connected_sum_adds_mod2(self):
        V = direct_sum(RIGHT_TREFOIL, FIGURE_EIGHT)
        assert arf(V) == 0


class TestRandomMatrices:
    def test_shape_and_validity(self):
        rng = random.Random(0)
        for _ in range(50):
            V = random_seifert_matrix(rng, 6)
            assert V.size == 6  # construction already validated det = 1

    def test_odd_size_rejected(self):
        with pytest.raises(ValueError):
            random_seifert_matrix(random.Random(0), 3)


def test_kernel_counters_stay_clean():
    assert STATS.mismatches == 0
    assert STATS.gate_disagreements == 0

"""Exact pillowcase intersection counting for torus-knot moduli curves."""

from fractions import Fraction

import pytest

from eqcasson import equivariant as eq
from eqcasson.braid import torus_knot_matrix
from eqcasson.errors import EndpointHit, NotCoprime
from eqcasson.pillowcase import (EMPTY_CURVE, PCArc, PCPoint,
                                 circle_union_count, decomposition_check,
                                 intersect_circle, intersect_line,
                                 line_count_as_invariant, torus_knot_curve)

TREFOIL = torus_knot_curve(2, 3)


class TestGeometry:
    def test_point_reduction(self):
        p = PCPoint(Fraction(5, 2), Fraction(-1, 3))
        assert p.phi == Fraction(1, 2) and p.psi == Fraction(5, 3)

    def test_sigma_involution(self):
        p = PCPoint(Fraction(1, 3), Fraction(1, 2))
        assert p.sigma().sigma() == p

    def test_arc_endpoints_on_reducible_circle(self):
        with pytest.raises(ValueError):
            PCArc(-6, Fraction(1, 2), (Fraction(1, 6), Fraction(5, 6)))

    def test_arc_sigma_preserves_slope(self):
        arc = TREFOIL.arcs[0]
        assert arc.sigma().slope == arc.slope

    def test_to_dict_strings(self):
        d = TREFOIL.arcs[0].to_dict()
        assert d == {"slope": -6, "offset": "1",
                     "interval": ["1/6", "5/6"], "orientation": 1}


class TestTorusKnotCurve:
    @pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (2, 7)])
    def test_arc_count(self, p, q):
        curve = torus_knot_curve(p, q)
        assert len(curve.arcs) == (p - 1) * (q - 1)
        assert curve.is_sigma_invariant()

    def test_left_hand_flips_slope(self):
        left = torus_knot_curve(2, 3, "left")
        assert {a.slope for a in left.arcs} == {6}
        assert {a.slope for a in TREFOIL.arcs} == {-6}

    def test_coprimality(self):
        with pytest.raises(NotCoprime):
            torus_knot_curve(2, 4)


class TestLineCounts:
    def test_trefoil_values(self):
        assert intersect_line(TREFOIL, 5, 1, 0) == 0
        assert intersect_line(TREFOIL, 2, 1, 0) == -4
        assert intersect_line(TREFOIL, 2, 1, 1) == -2
        assert intersect_line(TREFOIL, 5, -1, 0) == 8

    def test_empty_curve(self):
        assert intersect_line(EMPTY_CURVE, 3, 1, 0) == 0

    def test_input_validation(self):
        with pytest.raises(ValueError):
            intersect_line(TREFOIL, 2, 2, 0)
        with pytest.raises(ValueError):
            intersect_line(TREFOIL, 2, 0, 0)
        with pytest.raises(ValueError):
            intersect_line(TREFOIL, 2, 1, 2)

    def test_parallel_line_misses(self):
        # n = 6, q = 1 is parallel to the slope -6 arcs and misses them.
        assert intersect_line(TREFOIL, 6, 1, 0) == 0

    def test_endpoint_hit(self):
        # n = 12, q = 1 passes through the Alexander-root endpoints.
        with pytest.raises(EndpointHit):
            intersect_line(TREFOIL, 12, 1, 0)


class TestCircleCounts:
    def test_trefoil_psi_pi(self):
        assert abs(intersect_circle(TREFOIL, "psi_pi")) == 4

    def test_circle_union(self):
        assert circle_union_count(TREFOIL, 5, 0) == 4

    def test_phi_endpoint_hit(self):
        with pytest.raises(EndpointHit):
            intersect_circle(TREFOIL, "phi", Fraction(1, 6))

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            intersect_circle(TREFOIL, "theta")


class TestInvariantCalibration:
    @pytest.mark.parametrize("n,q,w", [(2, 1, 0), (2, 1, 1), (5, 1, 0),
                                       (5, -1, 0), (3, 2, 0), (4, 3, 1)])
    def test_matches_boyer_nicas(self, n, q, w):
        V = torus_knot_matrix(2, 3)
        assert line_count_as_invariant(TREFOIL, n, q, w) == \
            eq.boyer_nicas(w, n, q, 0, V)

    def test_t25(self):
        curve = torus_knot_curve(2, 5)
        V = torus_knot_matrix(2, 5)
        assert line_count_as_invariant(curve, 3, 1, 0) == \
            eq.boyer_nicas(0, 3, 1, 0, V)

    @pytest.mark.parametrize("n,q,w", [(2, 1, 0), (5, 1, 0), (3, 2, 0),
                                       (4, 1, 1)])
    def test_decomposition(self, n, q, w):
        assert decomposition_check(TREFOIL, n, q, w)

    def test_sigma_image_preserves_counts(self):
        img = TREFOIL.sigma_image()
        assert intersect_line(img, 5, -1, 0) == intersect_line(
            TREFOIL, 5, -1, 0)

"""Braid-word parsing and Seifert matrices of braid closures."""

import pytest

from eqcasson.braid import (BraidWord, closure_component_count,
                            cork_branch_knot, seifert_matrix_of_closure,
                            torus_knot, torus_knot_matrix)
from eqcasson.errors import NotAKnot, NotCoprime
from eqcasson.seifert import (alexander, alexander_second_derivative,
                              total_signature)


class TestParsing:
    def test_pipe_format(self):
        b = BraidWord.parse("2 | 1 1 1")
        assert b.strands == 2 and b.letters == (1, 1, 1)

    def test_keyword_format(self):
        b = BraidWord.parse("strands: 3; word: s1 s2^-1 s1 s2^-1")
        assert b.strands == 3 and b.letters == (1, -2, 1, -2)

    def test_powers_expand(self):
        b = BraidWord.parse("strands: 2; word: s1^3")
        assert b.letters == (1, 1, 1)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            BraidWord.parse("nonsense")
        with pytest.raises(ValueError):
            BraidWord(2, (0,))
        with pytest.raises(ValueError):
            BraidWord(2, (2,))
        with pytest.raises(ValueError):
            BraidWord(1, ())

    def test_mirror(self):
        assert BraidWord(2, (1, 1, 1)).mirror().letters == (-1, -1, -1)


class TestClosure:
    def test_component_counts(self):
        assert closure_component_count(BraidWord(2, (1,))) == 1
        assert closure_component_count(BraidWord(2, (1, 1))) == 2
        assert closure_component_count(BraidWord(3, (1, 2))) == 1

    def test_link_rejected(self):
        with pytest.raises(NotAKnot):
            seifert_matrix_of_closure(BraidWord(2, (1, 1)))

    def test_unused_generator_gives_link(self):
        # A missing generator always disconnects the closure, so the
        # component check fires before the surface check.
        with pytest.raises(NotAKnot):
            seifert_matrix_of_closure(BraidWord(3, (1, 1, 1)))

    def test_trefoil(self):
        V = seifert_matrix_of_closure(BraidWord(2, (1, 1, 1)))
        assert alexander(V).to_pairs() == [[-1, 1], [0, -1], [1, 1]]
        assert total_signature(V) == -2

    def test_figure_eight_word(self):
        V = seifert_matrix_of_closure(BraidWord.parse("3 | 1 -2 1 -2"))
        assert alexander(V).to_pairs() == [[-1, -1], [0, 3], [1, -1]]

    def test_genus(self):
        V = seifert_matrix_of_closure(torus_knot(2, 5))
        assert V.size == 4  # genus 2, i.e. (p-1)(q-1)/2 generators


class TestTorusKnots:
    def test_word_shape(self):
        b = torus_knot(3, 4)
        assert b.strands == 4 and len(b.letters) == 9

    def test_coprimality(self):
        with pytest.raises(NotCoprime):
            torus_knot(2, 4)
        with pytest.raises(NotCoprime):
            torus_knot(1, 3)

    @pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (2, 7), (3, 4),
                                     (3, 5), (5, 6)])
    def test_second_derivative_closed_form(self, p, q):
        V = torus_knot_matrix(p, q)
        assert alexander_second_derivative(V) == \
            (p * p - 1) * (q * q - 1) // 12

    def test_handedness(self):
        assert total_signature(torus_knot_matrix(2, 3, "left")) == 2
        assert total_signature(torus_knot_matrix(5, 6, "left")) == 16
        assert total_signature(torus_knot_matrix(5, 6, "right")) == -16

    def test_alexander_vs_closed_form(self):
        # Delta(t) = (t^{pq/2} - t^{-pq/2})(t^{1/2} - t^{-1/2}) /
        #            ((t^{p/2} - t^{-p/2})(t^{q/2} - t^{-q/2})) for T(3, 4):
        d = alexander(torus_knot_matrix(3, 4))
        assert d.to_pairs() == [[-3, 1], [-2, -1], [0, 1], [2, -1], [3, 1]]


class TestCorkKnot:
    def test_word(self):
        b = cork_branch_knot()
        assert b.strands == 6 and len(b.letters) == 27
        assert closure_component_count(b) == 1

    def test_branched_double_cover_is_zhs(self):
        V = seifert_matrix_of_closure(cork_branch_knot())
        assert abs(alexander(V)(-1)) == 1

    def test_signature(self):
        V = seifert_matrix_of_closure(cork_branch_knot())
        assert total_signature(V) == 16

"""Unit tests for Gaussian moments and the y^k -> Ch_k substitution."""

from fractions import Fraction as F

import pytest
import sympy

from orbchi.moments import (
    build_exponent,
    expand_h,
    gaussian_moment,
    moment_table,
    substitute_moments,
)
from orbchi.oracle import count_pairings
from orbchi.series import BivariatePoly, TSeries
from orbchi.species import builtin_species


class TestGaussianMoment:
    def test_empty(self):
        assert gaussian_moment(0) == 1

    def test_odd_is_zero(self):
        assert gaussian_moment(3) == 0

    def test_four(self):
        assert gaussian_moment(4) == 3

    def test_six(self):
        assert gaussian_moment(6) == 15

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            gaussian_moment(-1)

    def test_matches_pairing_enumeration(self):
        # independent cross-check against brute-force matching counts
        for k in range(13):
            assert gaussian_moment(k) == count_pairings(k)

    def test_table_recurrence(self):
        table = moment_table(12)
        assert table[0] == 1
        for k in range(2, 13, 2):
            assert table[k] == (k - 1) * table[k - 2]
        assert all(table[k] == 0 for k in range(1, 13, 2))
        assert table == [gaussian_moment(k) for k in range(13)]


class TestBuildExponent:
    def test_commutative_small(self):
        e = build_exponent(builtin_species("commutative"), 2)
        assert e.terms == {(1, 3): F(-1, 6), (2, 4): F(-1, 24)}

    def test_chord_small(self):
        e = build_exponent(builtin_species("chord"), 2)
        assert e.terms == {(2, 4): F(-1, 8)}

    def test_cutoff_zero(self):
        e = build_exponent(builtin_species("lie"), 0)
        assert e == BivariatePoly.zero(0)

    def test_coverage_error_names_required_n(self, tmp_path):
        from orbchi.species import species_from_file

        f = tmp_path / "short.json"
        f.write_text('{"name": "short", "Q": {"3": 1, "4": 1}}')
        sp = species_from_file(f)
        with pytest.raises(ValueError, match="n=6"):
            build_exponent(sp, 4)


class TestExpandH:
    def test_commutative_hand_expansion(self):
        h = expand_h(build_exponent(builtin_species("commutative"), 2))
        assert h.terms == {
            (0, 0): F(1),
            (1, 3): F(-1, 6),
            (2, 4): F(-1, 24),
            (2, 6): F(1, 72),
        }

    def test_zero_exponent(self):
        assert expand_h(BivariatePoly.zero(4)) == BivariatePoly.one(4)

    def test_chord_single_term(self):
        h = expand_h(build_exponent(builtin_species("chord"), 2))
        assert h.terms == {(0, 0): F(1), (2, 4): F(-1, 8)}

    def test_against_sympy_expansion(self):
        # independent engine: series-expand exp of the same exponent
        s, y = sympy.symbols("s y")
        cutoff = 6
        sp = builtin_species("commutative")
        mine = expand_h(build_exponent(sp, cutoff))
        expr = sympy.exp(sympy.Add(*[
            -sympy.Rational(1, sympy.factorial(n)) * s ** (n - 2) * y ** n
            for n in range(3, cutoff + 3)
        ]))
        expanded = sympy.series(expr, s, 0, cutoff + 1).removeO()
        poly = sympy.Poly(sympy.expand(expanded), s, y)
        theirs = {
            (int(i), int(j)): F(*sympy.fraction(c))
            for (i, j), c in zip(poly.monoms(), poly.coeffs())
        }
        assert mine.terms == theirs

    @pytest.mark.parametrize("name", ["commutative", "associative", "lie", "chord"])
    def test_y_degree_band(self, name):
        # each s^i monomial carries y-degree between i+2 and 3i, same parity
        for cutoff in (2, 8, 20):
            h = expand_h(build_exponent(builtin_species(name), cutoff))
            for (i, j), c in h.items():
                assert c != 0
                if i == 0:
                    assert j == 0
                    continue
                assert i + 2 <= j <= 3 * i
                assert (j - i) % 2 == 0


class TestSubstituteMoments:
    def test_commutative_h(self):
        h = expand_h(build_exponent(builtin_species("commutative"), 2))
        assert substitute_moments(h) == TSeries([1, F(1, 12)])

    def test_chord_h(self):
        h = expand_h(build_exponent(builtin_species("chord"), 2))
        assert substitute_moments(h) == TSeries([1, F(-3, 8)])

    def test_constant_one(self):
        assert substitute_moments(BivariatePoly.one(0)) == TSeries([1])

    def test_odd_cutoff_rejected(self):
        with pytest.raises(ValueError, match="even s_cutoff"):
            substitute_moments(BivariatePoly.one(3))

    def test_surviving_odd_s_degree_rejected(self):
        p = BivariatePoly({(1, 4): F(1)}, 2)
        with pytest.raises(ValueError, match="half-integer power of t"):
            substitute_moments(p)

    def test_odd_s_degree_with_odd_y_degree_vanishes(self):
        p = BivariatePoly({(0, 0): 1, (1, 3): F(5)}, 2)
        assert substitute_moments(p) == TSeries([1, 0])

    def test_linearity(self):
        p = BivariatePoly({(0, 0): 1, (2, 4): F(1, 3)}, 4)
        q = BivariatePoly({(2, 2): F(-1, 2), (4, 6): F(7)}, 4)
        a, b = F(3, 5), F(-2, 7)
        lhs = substitute_moments(p * a + q * b)
        rhs = substitute_moments(p) * a + substitute_moments(q) * b
        assert lhs == rhs

"""Rational and Gaussian-rational arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from implitrig.rationals import GaussianRational, parse_rational, rational_gcd

fractions = st.fractions(
    min_value=-100, max_value=100, max_denominator=50)


class TestParseRational:
    @pytest.mark.parametrize("text,value", [
        ("1/2", Fraction(1, 2)),
        ("-3/4", Fraction(-3, 4)),
        ("7", Fraction(7)),
        ("0", Fraction(0)),
        ("5/10", Fraction(1, 2)),
        ("0.25", Fraction(1, 4)),
    ])
    def test_values(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["", "a/b", "1/0", "1//2", "1.2.3"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)


class TestRationalGcd:
    def test_integers(self):
        assert rational_gcd(Fraction(12), Fraction(18)) == 6

    def test_fractions(self):
        # gcd of numerators over lcm of denominators
        assert rational_gcd(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 6)
        assert rational_gcd(Fraction(4, 9), Fraction(2, 3)) == Fraction(2, 9)

    def test_zero(self):
        assert rational_gcd(Fraction(0), Fraction(5, 7)) == Fraction(5, 7)

    @given(fractions, fractions)
    def test_divides_both(self, a, b):
        g = rational_gcd(a, b)
        if g == 0:
            assert a == 0 and b == 0
        else:
            assert (a / g).denominator == 1
            assert (b / g).denominator == 1


class TestGaussianRational:
    def test_basic_ops(self):
        i = GaussianRational.of(0, 1)
        assert i * i == GaussianRational.of(-1)
        assert (1 + i) * (1 - i) == GaussianRational.of(2)
        assert (GaussianRational.of(3, 4) / GaussianRational.of(0, 2)
                == GaussianRational.of(2, Fraction(-3, 2)))

    def test_norm_conjugate(self):
        z = GaussianRational.of(Fraction(3, 5), Fraction(4, 5))
        assert z.norm() == 1
        assert z * z.conjugate() == GaussianRational.of(1)

    def test_pow(self):
        i = GaussianRational.of(0, 1)
        assert i**4 == GaussianRational.of(1)
        assert (1 + i)**2 == GaussianRational.of(0, 2)

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational.of(1) / GaussianRational.of(0)

    @given(fractions, fractions, fractions, fractions)
    def test_field_axioms(self, a, b, c, d):
        z = GaussianRational.of(a, b)
        w = GaussianRational.of(c, d)
        assert z + w == w + z
        assert z * w == w * z
        assert z * (z + w) == z * z + z * w
        if not w.is_zero:
            assert (z / w) * w == z

"""Multivariate gcd, content and primitive part."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from implitrig.poly import MultiPoly
from implitrig.gcdtools import (content, content_and_primitive, gcd_many,
                                gcd_modular, multivar_gcd, poly_gcd,
                                primitive_part, squarefree_part)

VARS = ("x", "y", "z")


def rand_poly(rng, deg=2, terms=4, variables=VARS):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, deg) for _ in variables)
        out[e] = out.get(e, 0) + Fraction(rng.randint(-8, 8))
    return MultiPoly(variables, {e: c for e, c in out.items() if c != 0})


def poly_strategy(max_deg=3, max_terms=4):
    exps = st.tuples(*(st.integers(0, max_deg) for _ in VARS))
    coeff = st.fractions(min_value=-9, max_value=9, max_denominator=6)
    return st.dictionaries(exps, coeff, max_size=max_terms).map(
        lambda d: MultiPoly(VARS, d))


polys = poly_strategy()


class TestMultivarGcd:
    def test_simple(self):
        x, y, _ = (MultiPoly.var(v, VARS) for v in VARS)
        g = x + y
        assert multivar_gcd(g * (x - y), g * (x * x + 1)).normalized() \
            == g.normalized()

    def test_coprime(self):
        x, y, _ = (MultiPoly.var(v, VARS) for v in VARS)
        assert multivar_gcd(x + 1, y + 1).is_constant

    @given(polys, polys, polys)
    @settings(max_examples=30, deadline=None)
    def test_common_factor_recovered(self, a, b, g):
        if g.is_zero or g.is_constant:
            return
        d = multivar_gcd(a * g, b * g)
        assert g.divides(d)
        assert d.divides(a * g) and d.divides(b * g)

    @given(polys, polys)
    @settings(max_examples=30, deadline=None)
    def test_divides_inputs(self, a, b):
        d = multivar_gcd(a, b)
        if a.is_zero and b.is_zero:
            assert d.is_zero
        else:
            assert d.divides(a) and d.divides(b)


class TestGcdModularAgreement:
    """The interpolation gcd must agree with the remainder-sequence gcd."""

    @given(polys, polys)
    @settings(max_examples=30, deadline=None)
    def test_agrees_random(self, a, b):
        assert gcd_modular(a, b) == multivar_gcd(a, b)

    @given(polys, polys, polys)
    @settings(max_examples=30, deadline=None)
    def test_agrees_with_common_factor(self, a, b, g):
        assert gcd_modular(a * g, b * g) == multivar_gcd(a * g, b * g)

    def test_seeded_batch(self):
        rng = random.Random(20240817)
        for _ in range(40):
            a, b, g = (rand_poly(rng) for _ in range(3))
            assert gcd_modular(a * g, b * g) == multivar_gcd(a * g, b * g)


class TestContentPrimitive:
    def test_reconstruction(self):
        rng = random.Random(7)
        for _ in range(25):
            p = rand_poly(rng, deg=3, terms=5)
            if p.is_zero:
                continue
            for v in VARS:
                c, pp = content_and_primitive(p, v)
                assert c * pp == p
                assert content(p, v) == c
                assert primitive_part(p, v) == pp

    def test_primitive_part_is_primitive(self):
        rng = random.Random(8)
        for _ in range(15):
            p = rand_poly(rng, deg=3, terms=5)
            if p.is_zero:
                continue
            pp = primitive_part(p, "x")
            assert content(pp, "x").is_constant

    def test_known_content(self):
        x, y, _ = (MultiPoly.var(v, VARS) for v in VARS)
        p = (y + 1) * x * x + (y * y + y) * x
        c = content(p, "x")
        # content is (y + 1) up to a constant
        assert c.divides(y + 1) and (y + 1).divides(c)


class TestGcdMany:
    def test_chain(self):
        x, y, _ = (MultiPoly.var(v, VARS) for v in VARS)
        g = x + y
        ps = [g * (x + 1), g * (y + 2), g * (x * y + 3)]
        d = gcd_many(ps)
        assert g.divides(d)
        for p in ps:
            assert d.divides(p)


class TestPolyGcdUnivariateView:
    def test_gcd_in_main_variable(self):
        x, y, _ = (MultiPoly.var(v, VARS) for v in VARS)
        p = (x - y) * (x + 1)
        q = (x - y) * (x + 2)
        d = poly_gcd(p, q, "x")
        assert (x - y).divides(d) and d.divides(p)


class TestSquarefree:
    def test_strips_multiplicity(self):
        x, y, _ = (MultiPoly.var(v, VARS) for v in VARS)
        p = (x + y) ** 3 * (x - 1) ** 2 * (y + 2)
        sf = squarefree_part(p).normalized()
        expected = ((x + y) * (x - 1) * (y + 2)).normalized()
        assert sf == expected

    def test_squarefree_fixed_point(self):
        x, y, _ = (MultiPoly.var(v, VARS) for v in VARS)
        p = ((x + y) * (x - 2)).normalized()
        assert squarefree_part(p).normalized() == p

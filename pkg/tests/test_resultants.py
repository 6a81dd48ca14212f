"""Resultant engines and perfect-power roots."""

import random
from fractions import Fraction

import pytest

from implitrig.poly import MultiPoly
from implitrig.resultants import (ResultantError, bareiss_determinant,
                                  bezout_matrix, resultant, resultant_fast,
                                  resultant_measured, rth_root,
                                  sylvester_matrix)

VARS = ("t", "x", "y")


def rand_poly(rng, deg=3, terms=5, variables=VARS, denom=False):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, deg) for _ in variables)
        c = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)) if denom else 1)
        out[e] = out.get(e, 0) + c
    return MultiPoly(variables, {e: c for e, c in out.items() if c != 0})


def rand_pair(rng, **kw):
    while True:
        p, q = rand_poly(rng, **kw), rand_poly(rng, **kw)
        if p.partial_degree("t") >= 1 and q.partial_degree("t") >= 1:
            return p, q


class TestMatrices:
    def test_sylvester_shape(self):
        p = MultiPoly.univariate("t", [1, 2, 3])       # degree 2
        q = MultiPoly.univariate("t", [4, 5, 6, 7])    # degree 3
        mat = sylvester_matrix(p, q, "t")
        assert len(mat) == 5 and all(len(row) == 5 for row in mat)

    def test_bezout_shape(self):
        p = MultiPoly.univariate("t", [1, 2, 3])
        q = MultiPoly.univariate("t", [4, 5, 6, 7])
        mat = bezout_matrix(p, q, "t")
        assert len(mat) == 3

    def test_bareiss_integer_matrix(self):
        one = MultiPoly.const(("x",), 1)
        mat = [[one.scale(Fraction(a)) for a in row]
               for row in [[2, 1, 0], [1, 3, 1], [0, 1, 4]]]
        assert bareiss_determinant(mat).constant_value() == 19


class TestEngineAgreement:
    def test_sylvester_equals_bezout_up_to_sign(self):
        rng = random.Random(101)
        for _ in range(100):
            p, q = rand_pair(rng, deg=2, terms=4)
            rs = resultant(p, q, "t", method="sylvester")
            rb = resultant(p, q, "t", method="bezout")
            assert rs == rb or rs == -rb

    def test_fast_equals_sylvester(self):
        rng = random.Random(202)
        for _ in range(40):
            p, q = rand_pair(rng, deg=3, terms=5, denom=True)
            assert resultant(p, q, "t", method="fast") \
                == resultant(p, q, "t", method="sylvester")

    def test_measured_equals_sylvester(self):
        rng = random.Random(303)
        for _ in range(30):
            p, q = rand_pair(rng, deg=3, terms=5)
            assert resultant(p, q, "t", method="measured") \
                == resultant(p, q, "t", method="sylvester")

    def test_measured_with_true_bounds(self):
        rng = random.Random(404)
        for _ in range(10):
            p, q = rand_pair(rng, deg=2, terms=4)
            ref = resultant(p, q, "t", method="sylvester")
            bounds = {v: ref.partial_degree(v) for v in ("x", "y")}
            assert resultant_measured(p, q, "t", degree_bounds=bounds) == ref


class TestResultantProperties:
    def test_multiplicative_in_first_argument(self):
        rng = random.Random(505)
        for _ in range(15):
            p1, q = rand_pair(rng, deg=2, terms=3)
            p2, _ = rand_pair(rng, deg=2, terms=3)
            lhs = resultant(p1 * p2, q, "t", method="fast")
            rhs = resultant(p1, q, "t", method="fast") \
                * resultant(p2, q, "t", method="fast")
            assert lhs == rhs

    def test_common_root_means_zero(self):
        t = MultiPoly.var("t", VARS)
        x = MultiPoly.var("x", VARS)
        common = t - x
        p = common * (t + 1)
        q = common * (t + 2)
        assert resultant(p, q, "t", method="sylvester").is_zero

    def test_vanishes_exactly_at_shared_specializations(self):
        # Res_t((t - x)(t+1), (t - 2)(t+3)) is zero iff x makes the factors share a root
        t = MultiPoly.var("t", VARS)
        x = MultiPoly.var("x", VARS)
        p = (t - x) * (t + 1)
        q = (t - 2) * (t + 3)
        r = resultant(p, q, "t", method="sylvester")
        assert r.eval_partial("x", Fraction(2)).is_zero
        assert r.eval_partial("x", Fraction(-3)).is_zero
        assert not r.eval_partial("x", Fraction(5)).is_zero


class TestRthRoot:
    def test_round_trip_squares(self):
        rng = random.Random(606)
        done = 0
        while done < 50:
            base = rand_poly(rng, deg=2, terms=4)
            if base.is_zero:
                continue
            sq = base * base
            root = rth_root(sq, 2)
            assert root == base or root == -base
            done += 1

    def test_round_trip_cubes(self):
        rng = random.Random(707)
        for _ in range(10):
            base = rand_poly(rng, deg=2, terms=3)
            if base.is_zero:
                continue
            assert rth_root(base**3, 3) in (base, -base)

    def test_rejects_non_power(self):
        x = MultiPoly.var("x", ("x",))
        with pytest.raises(ResultantError):
            rth_root(x * x + 1, 2)

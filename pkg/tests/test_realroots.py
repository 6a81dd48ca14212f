"""Univariate real-root isolation and nonnegativity certificates."""

import random
from fractions import Fraction

from implitrig.realroots import (count_real_roots, degree, isolate_real_roots,
                                 nonnegative_on_reals, odd_multiplicity_part,
                                 poly_eval, poly_gcd_uni, root_bound,
                                 squarefree_part_uni, sturm_chain)


def F(*cs):
    """Coefficient list (ascending powers) of Fractions."""
    return [Fraction(c) for c in cs]


def poly_from_roots(roots):
    p = F(1)
    for r in roots:
        # multiply by (x - r)
        q = [Fraction(0)] + p
        p = [a - Fraction(r) * b for a, b in
             zip(q, p + [Fraction(0)])]
    return p


class TestBasics:
    def test_eval_and_degree(self):
        p = F(-1, 0, 1)  # x^2 - 1
        assert degree(p) == 2
        assert poly_eval(p, Fraction(3)) == 8

    def test_gcd_uni(self):
        p = poly_from_roots([1, 2])
        q = poly_from_roots([2, 3])
        g = poly_gcd_uni(p, q)
        assert degree(g) == 1 and poly_eval(g, Fraction(2)) == 0

    def test_squarefree(self):
        p = poly_from_roots([1, 1, 1, 2])
        sf = squarefree_part_uni(p)
        assert degree(sf) == 2
        assert poly_eval(sf, Fraction(1)) == 0
        assert poly_eval(sf, Fraction(2)) == 0

    def test_odd_multiplicity_part(self):
        # (x-1)^2 (x-2)^3: only x = 2 is crossed with odd multiplicity
        p = poly_from_roots([1, 1, 2, 2, 2])
        om = odd_multiplicity_part(p)
        assert poly_eval(om, Fraction(2)) == 0
        assert poly_eval(om, Fraction(1)) != 0


class TestSturm:
    def test_counts_known_roots(self):
        p = poly_from_roots([-3, Fraction(1, 2), 7])
        assert count_real_roots(p) == 3
        assert count_real_roots(F(1, 0, 1)) == 0  # x^2 + 1

    def test_counts_in_interval(self):
        p = poly_from_roots([-3, Fraction(1, 2), 7])
        assert count_real_roots(p, Fraction(0), Fraction(1)) == 1

    def test_chain_starts_with_input(self):
        p = F(-2, 0, 1)
        chain = sturm_chain(p)
        assert chain[0] == p

    def test_random_root_sets(self):
        rng = random.Random(99)
        for _ in range(20):
            roots = sorted(set(rng.randint(-20, 20) for _ in range(4)))
            p = poly_from_roots(roots)
            assert count_real_roots(p) == len(roots)


class TestIsolation:
    def test_root_bound_contains_roots(self):
        p = poly_from_roots([-11, 5, 13])
        b = root_bound(p)
        assert b >= 13

    def test_isolating_intervals(self):
        roots = [-4, 1, 9]
        p = poly_from_roots(roots)
        intervals = isolate_real_roots(p)
        assert len(intervals) == 3
        for (lo, hi), r in zip(sorted(intervals), roots):
            assert lo <= r <= hi


class TestNonnegativity:
    def test_positive_poly(self):
        ok, witness = nonnegative_on_reals(F(1, 0, 1))   # x^2 + 1
        assert ok and witness is None

    def test_square_touches_zero(self):
        ok, _ = nonnegative_on_reals(poly_from_roots([2, 2]))
        assert ok

    def test_negative_somewhere(self):
        ok, witness = nonnegative_on_reals(F(-1, 0, 1))  # x^2 - 1
        assert not ok
        assert poly_eval(F(-1, 0, 1), witness) < 0

    def test_negative_leading(self):
        ok, witness = nonnegative_on_reals(F(0, 0, -1))  # -x^2
        assert not ok
        assert poly_eval(F(0, 0, -1), witness) < 0

"""Acceptance gate: the ten headline criteria, one pass/fail line each.

Each test prints ``ACCEPTANCE <n> <name>: PASS`` (or the assertion fails).
Slow-tier rows run only with ``IMPLITRIG_SLOW=1``.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from implitrig.gcdtools import content_and_primitive
from implitrig.poly import MultiPoly
from implitrig.rationals import GaussianRational
from implitrig.curves import (implicitize, rational_parametrization,
                              tracing_index)
from implitrig.resultants import ResultantError, resultant, rth_root
from implitrig.surfaces import harmonic_surface, surface_implicitize_small
from implitrig.tables import HARMONIC_ROWS, REVOLUTION_ROWS, compute_row
from implitrig.trig import SphericalSupport, TrigPoly, cheb_C, parity_class

F = Fraction


def _report(num, name, t0):
    print(f"ACCEPTANCE {num} {name}: PASS ({time.monotonic() - t0:.1f}s)")


# ---------------------------------------------------------------------------
# criterion 1: the degree-8 constant-width polynomial


#: The published rendition of the degree-8 polynomial (all 24 terms).
PUBLISHED_WIDTH_TERMS = {
    (0, 0): -182284263, (0, 6): -469762048, (0, 2): 1269789696,
    (7, 0): 33554432, (4, 2): -490733568, (4, 4): 1610612736,
    (5, 2): -134217728, (6, 2): 268435456, (8, 0): 16777216,
    (1, 4): 6794772480, (6, 0): 9437184, (0, 8): 4294967296,
    (2, 0): 317447424, (5, 0): -141557760, (2, 2): -1066991616,
    (2, 6): 4294967296, (2, 4): 2063597568, (0, 4): -2133983232,
    (4, 0): -133373952, (1, 2): -931627008, (3, 0): 77635584,
    (1, 6): -6442450944, (3, 2): 1132462080, (3, 4): -2684354560,
}


def _published_width_poly():
    return MultiPoly(("x", "y"), {e: F(c)
                                  for e, c in PUBLISHED_WIDTH_TERMS.items()})


WIDTH_SUPPORT = TrigPoly(F(1, 2), {3: F(1, 16)}, {})


@pytest.mark.xfail(
    strict=True,
    reason="the published rendition of the degree-8 polynomial does not "
           "vanish on the curve; it equals the correct polynomial with x "
           "replaced by x/2 (see the true-properties test)")
def test_criterion_01_width_polynomial_published_rendition():
    rep = implicitize(WIDTH_SUPPORT)
    assert rep.f == _published_width_poly().normalized()


def test_criterion_01_width_polynomial_true_properties():
    t0 = time.monotonic()
    rep = implicitize(WIDTH_SUPPORT)
    f = rep.f
    assert rep.tracing_index == 1
    assert rep.total_degree == 8
    assert len(f.terms) == 24
    assert f.terms[(0, 0)] == -182284263
    assert f.terms[(0, 8)] == 4294967296
    assert f.terms[(8, 0)] == 4294967296
    # the curve passes through (9/16, 0) at θ = 0, and f vanishes there
    assert f.evaluate({"x": F(9, 16), "y": F(0)}) == 0
    # the published rendition misses that point by an exact nonzero amount...
    pub = _published_width_poly()
    assert pub.evaluate({"x": F(9, 16), "y": F(0)}) == F(-22600591407, 256)
    # ...because it is the correct polynomial with x halved
    two_x = MultiPoly.univariate("x", [0, 2]).restrict(("x", "y"))
    assert pub.subs("x", two_x).normalized() == f.normalized()
    assert time.monotonic() - t0 < 5.0
    _report(1, "degree-8 constant-width polynomial", t0)


# ---------------------------------------------------------------------------
# criterion 2: the degree-6 rotor polynomial


ROTOR_TERMS = {
    (0, 6): 191102976, (2, 4): 573308928, (0, 4): 318504960,
    (4, 2): 573308928, (2, 2): -509607936, (0, 2): 113246208,
    (6, 0): 191102976, (4, 0): -254803968, (2, 0): 113246208,
    (0, 0): -16777216,
}


def test_criterion_02_rotor_polynomial():
    t0 = time.monotonic()
    rep = implicitize(TrigPoly(F(1, 2), {2: F(1, 6)}, {}))
    assert rep.total_degree == 6
    published = MultiPoly(("x", "y"), {e: F(c) for e, c in ROTOR_TERMS.items()})
    # canonical normalization removes the published constant multiple (2^18)
    assert published.normalized() == rep.f
    assert published == rep.f.scale(F(262144))
    assert time.monotonic() - t0 < 2.0
    _report(2, "degree-6 rotor polynomial", t0)


# ---------------------------------------------------------------------------
# criteria 3 and 4: randomized degree law and tracing index


def _random_support(rng):
    N = rng.randint(2, 6)
    a, b = {}, {}
    for k in range(1, N + 1):
        if rng.random() < 0.4:
            a[k] = F(rng.randint(-3, 3), rng.randint(1, 4))
        if rng.random() < 0.4:
            b[k] = F(rng.randint(-3, 3), rng.randint(1, 4))
    a[N] = F(rng.randint(1, 3), rng.randint(1, 4))
    a0 = F(rng.choice([0, 1, 2]))
    return TrigPoly(a0, {k: v for k, v in a.items() if v},
                    {k: v for k, v in b.items() if v})


SUITE_SEED = 20230405


def _suite():
    rng = random.Random(SUITE_SEED)
    return [_random_support(rng) for _ in range(50)]


def test_criterion_03_degree_law_suite():
    t0 = time.monotonic()
    for p in _suite():
        rep = implicitize(p)
        N = p.degree
        expected = N + 1 if parity_class(p) == "odd_only" else 2 * N + 2
        assert rep.total_degree == expected
        if rep.tracing_index == 1:
            param = rational_parametrization(p)
            assert rep.deg_y == max(param.P1.partial_degree("t"),
                                    param.Q.partial_degree("t"))
    assert time.monotonic() - t0 < 180.0
    _report(3, "degree law on 50 random support functions", t0)


def test_criterion_04_tracing_index_parity():
    t0 = time.monotonic()
    ts = [F(k, 7) for k in range(1, 21)]
    for p in _suite():
        parity_prediction = 2 if parity_class(p) == "odd_only" else 1
        r = tracing_index(p)
        assert r == parity_prediction
        param = rational_parametrization(p)
        same = [param.point(t) == param.point(F(-1) / t) for t in ts]
        if r == 2:
            assert all(same)
        else:
            assert not all(same)
    _report(4, "tracing index parity vs point identity", t0)


# ---------------------------------------------------------------------------
# criterion 5: constant-width and rotor degree theorems


def test_criterion_05_width_rotor_degree_theorems():
    t0 = time.monotonic()
    # constant width with top harmonic 2M+1 → total degree 4M+4
    for M in (1, 2):
        p = TrigPoly(F(1, 2), {2 * M + 1: F(1, 50)}, {})
        assert implicitize(p).total_degree == 4 * M + 4
    # rotor(n) with top harmonic nm+1 → total degree 2nm+4
    for n, m in ((3, 1), (3, 2), (5, 1)):
        p = TrigPoly(F(1, 2), {n * m + 1: F(1, 50)}, {})
        assert implicitize(p).total_degree == 2 * n * m + 4
    assert time.monotonic() - t0 < 60.0
    _report(5, "constant-width and rotor degree theorems", t0)


# ---------------------------------------------------------------------------
# criteria 6 and 8: surfaces of revolution table and the 4N+4 conjecture


@pytest.fixture(scope="module")
def revolution_results():
    return {row.key: compute_row(row)
            for row in REVOLUTION_ROWS if not row.slow}


def test_criterion_06_revolution_table_default_tier(revolution_results):
    t0 = time.monotonic()
    for key, res in revolution_results.items():
        assert res.all_match, (key, res.computed, res.row.expected)
    total = sum(res.wall_time for res in revolution_results.values())
    assert total < 600.0
    _report(6, f"revolution table, {len(revolution_results)} default rows", t0)


@pytest.mark.slow
@pytest.mark.parametrize("key", [r.key for r in REVOLUTION_ROWS if r.slow])
def test_criterion_06_revolution_table_slow_tier(key):
    t0 = time.monotonic()
    row = next(r for r in REVOLUTION_ROWS if r.key == key)
    res = compute_row(row)
    assert res.all_match, (key, res.computed, res.row.expected)
    assert res.wall_time < 3600.0
    _report(6, f"revolution table slow row {key}", t0)


def test_criterion_08_conjecture_map_times_ratio(revolution_results):
    t0 = time.monotonic()
    for key, res in revolution_results.items():
        N = res.row.support().degree
        map_degree, ratio_x = res.computed[0], res.computed[1]
        assert map_degree * ratio_x == 4 * N + 4, key
    _report(8, "map degree × ratio = 4N+4 on revolution rows", t0)


# ---------------------------------------------------------------------------
# criterion 7: spherical-harmonic table


@pytest.mark.parametrize("key", [r.key for r in HARMONIC_ROWS if not r.slow])
def test_criterion_07_harmonic_table_l2_l3(key):
    t0 = time.monotonic()
    row = next(r for r in HARMONIC_ROWS if r.key == key)
    res = compute_row(row)
    assert res.all_match, (key, res.computed, res.row.expected)
    _report(7, f"harmonic table row {key}", t0)


@pytest.mark.slow
@pytest.mark.parametrize("key", [r.key for r in HARMONIC_ROWS if r.slow])
def test_criterion_07_harmonic_table_l4(key):
    t0 = time.monotonic()
    row = next(r for r in HARMONIC_ROWS if r.key == key)
    res = compute_row(row)
    assert res.all_match, (key, res.computed, res.row.expected)
    _report(7, f"harmonic table slow row {key}", t0)


# ---------------------------------------------------------------------------
# criterion 9: sphere identities for degree ≤ 1 support


def test_criterion_09_sphere_identities():
    t0 = time.monotonic()
    vs = ("x", "y", "z")
    x, y, z = (MultiPoly.var(v, vs) for v in vs)
    cases = [
        (F(1), F(0), F(0), F(0)),
        (F(5), F(1, 2), F(1, 3), F(1, 7)),
        (F(3, 2), F(-1), F(2, 5), F(0)),
    ]
    for a00, a10, a11, b11 in cases:
        coeffs = {(0, 0): (a00, F(0))}
        if a10 or a11 or b11:
            coeffs[(1, 0)] = (a10, F(0))
            coeffs[(1, 1)] = (a11, b11)
        t1 = time.monotonic()
        f = surface_implicitize_small(harmonic_surface(SphericalSupport(coeffs)))
        expected = ((x + a11)**2 + (y + b11)**2 + (z - a10)**2
                    - a00**2).normalized()
        assert f == expected
        assert time.monotonic() - t1 < 5.0
    _report(9, "sphere identities for degree ≤ 1 support", t0)


# ---------------------------------------------------------------------------
# criterion 10: kernel properties


def _rand_uni(rng, var, deg):
    return MultiPoly.univariate(var, [F(rng.randint(-9, 9))
                                      for _ in range(deg + 1)])


def test_criterion_10_kernel_properties():
    t0 = time.monotonic()
    rng = random.Random(424242)
    # Sylvester vs Bézout, 100 random pairs of degree ≤ 6
    done = 0
    while done < 100:
        p = _rand_uni(rng, "t", rng.randint(1, 6))
        q = _rand_uni(rng, "t", rng.randint(1, 6))
        if p.partial_degree("t") < 1 or q.partial_degree("t") < 1:
            continue
        rs = resultant(p, q, "t", method="sylvester")
        rb = resultant(p, q, "t", method="bezout")
        assert rs == rb or rs == -rb
        done += 1
    # rth_root round-trips on 50 random square-free polynomials
    done = 0
    while done < 50:
        base = MultiPoly(("x", "y"), {
            (rng.randint(0, 3), rng.randint(0, 3)): F(rng.randint(-5, 5))
            for _ in range(4)})
        if base.is_zero:
            continue
        from implitrig.gcdtools import squarefree_part
        sf = squarefree_part(base).normalized()
        if sf.is_constant:
            continue
        assert rth_root(sf * sf, 2) in (sf, -sf)
        done += 1
    # content · primitive part reconstruction
    for _ in range(25):
        p = MultiPoly(("x", "y"), {
            (rng.randint(0, 3), rng.randint(0, 3)):
            F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(5)})
        if p.is_zero:
            continue
        c, pp = content_and_primitive(p, "x")
        assert c * pp == p
    # Chebyshev values at the Gaussian point i
    i = GaussianRational.of(0, 1)
    for n in range(1, 9):
        assert cheb_C(n).evaluate({"t": i}) \
            == GaussianRational.of(2**(2 * n - 1))
    assert time.monotonic() - t0 < 60.0
    _report(10, "kernel properties", t0)

"""Planar pipeline: support function → rational parametrization → implicit
defining polynomial.

A convex curve with trigonometric-polynomial support function p of degree N
admits the rational parametrization (P1/Q, P2/Q) with Q = (1+t²)^(N+1) under
t = tan(θ/2).  Eliminating t from x·Q − P1 and y·Q − P2 by a resultant gives
f(x,y)^r, where the tracing index r is 1 or 2 according to the parity of the
spectrum, and f is the defining polynomial of the curve.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .poly import MultiPoly
from .rationals import GaussianRational
from .resultants import ResultantError, resultant, rth_root
from .trig import (Classification, TrigPoly, cheb_C, cheb_S, classify,
                   one_plus_t2, parity_class)


class CurveError(ValueError):
    pass


#: Deterministic parameter values used for exact vanishing checks.
SAMPLE_POINTS: Tuple[Fraction, ...] = tuple(
    Fraction(n, d) for n, d in [
        (0, 1), (1, 1), (-1, 1), (2, 1), (-3, 1), (7, 5), (-7, 5), (1, 2),
        (-1, 2), (3, 4), (-5, 3), (11, 7), (-13, 9), (5, 1), (-8, 3),
        (17, 11), (-2, 7), (9, 4), (-21, 13), (101, 100),
    ]
)


@dataclass(frozen=True)
class RationalCurveParam:
    """(x, y) = (P1(t)/Q(t), P2(t)/Q(t)) with Q = (1+t²)^(N+1)."""

    P1: MultiPoly
    P2: MultiPoly
    Q: MultiPoly
    N: int

    def point(self, t: Fraction) -> Tuple[Fraction, Fraction]:
        t = Fraction(t)
        q = Fraction(self.Q.evaluate({"t": t}))
        return (Fraction(self.P1.evaluate({"t": t})) / q,
                Fraction(self.P2.evaluate({"t": t})) / q)

    def point_at_pi(self) -> Tuple[Fraction, Fraction]:
        """The limit t → ∞, i.e. the boundary point at θ = π."""
        d = 2 * self.N + 2
        num1 = self.P1.coeff_list_in("t")
        num2 = self.P2.coeff_list_in("t")

        def top(coeffs) -> Fraction:
            if len(coeffs) > d:
                c = coeffs[d]
                return Fraction(c.constant_value() if isinstance(c, MultiPoly) else c)
            return Fraction(0)

        return top(num1), top(num2)


def rational_parametrization(p: TrigPoly) -> RationalCurveParam:
    """Build the reduced rational parametrization from the support function."""
    if p.is_zero():
        raise CurveError("empty support function")
    n = p.degree
    vt = ("t",)
    one = MultiPoly.const(vt, 1)
    t = MultiPoly.var("t", vt)
    w = one_plus_t2()          # 1 + t²
    m = one - t * t            # 1 - t²
    two_t = MultiPoly.const(vt, 2) * t

    p1 = MultiPoly.const(vt, p.a0) * m * w**n
    p2 = MultiPoly.const(vt, 2 * p.a0) * t * w**n
    for k in range(1, n + 1):
        ak, bk = p.coeff_a(k), p.coeff_b(k)
        if ak == 0 and bk == 0:
            continue
        ck, sk = cheb_C(k), cheb_S(k)
        even = MultiPoly.const(vt, ak) * ck + MultiPoly.const(vt, bk) * sk
        odd = MultiPoly.const(vt, k * ak) * sk - MultiPoly.const(vt, k * bk) * ck
        p1 = p1 + (m * even + two_t * odd) * w ** (n - k)
        p2 = p2 + (two_t * even - m * odd) * w ** (n - k)
    q = w ** (n + 1)

    param = RationalCurveParam(p1, p2, q, n)
    if n >= 2:
        _check_reduced(param, p)
    return param


def _check_reduced(param: RationalCurveParam, p: TrigPoly) -> None:
    """gcd(P_i, Q) = 1 via exact evaluation at t = ±i.

    P1(±i) = 2^(2N) (a_N ± i b_N)(1 ∓ N), nonzero whenever the top harmonic
    is present, so (1+t²) divides neither numerator.
    """
    n = param.N
    i = GaussianRational.of(0, 1)
    v1 = param.P1.evaluate({"t": i})
    expected = (GaussianRational.of(p.coeff_a(n), 0)
                + i * GaussianRational.of(p.coeff_b(n), 0))
    expected = expected * GaussianRational.of(Fraction(2**(2 * n) * (1 - n)), 0)
    if v1 != expected:
        raise CurveError("parametrization failed its Gaussian-point reduction check")
    if v1 == GaussianRational.of(0, 0) or param.P2.evaluate({"t": i}) == GaussianRational.of(0, 0):
        raise CurveError("parametrization not reduced: (1+t^2) divides a numerator")


def tracing_index(p: TrigPoly) -> int:
    """1 if some even harmonic (including a0) is present, else 2."""
    if p.degree <= 1:
        raise CurveError("circle case: use classify")
    return 1 if parity_class(p) == "has_even_harmonic" else 2


def predicted_total_degree(p: TrigPoly) -> Tuple[int, bool]:
    """Expected total degree of f; the flag marks the N ≤ 1 circle case."""
    n = p.degree
    if n <= 1:
        return 2, True
    if p.coeff_a(n) == 0 and p.coeff_b(n) == 0:
        raise CurveError("support function must have its top harmonic nonzero")
    value = n + 1 if parity_class(p) == "odd_only" else 2 * n + 2
    cls = classify(p)
    if cls.kind == "constant_width" and value == 2 * n + 2:
        # top harmonic 2M+1: value = 4M+4
        assert value == 2 * (n - 1) + 4
    elif cls.kind == "rotor" and (n - 1) % cls.n == 0:
        # top harmonic nm+1 for the reported order: value = 2nm+4
        assert value == 2 * (n - 1) + 4
    return value, False


@dataclass(frozen=True)
class ImplicitReport:
    f: MultiPoly
    tracing_index: int
    total_degree: int
    deg_x: int
    deg_y: int
    predicted_total_degree: int
    classification: Classification
    support: TrigPoly
    is_circle_case: bool = False

    def to_json_dict(self) -> dict:
        cls = self.classification
        return {
            "support": self.support.to_dict(),
            "classification": {
                "kind": cls.kind,
                "alpha": None if cls.alpha is None else str(cls.alpha),
                "n": cls.n,
                "rho": None if cls.rho is None else str(cls.rho),
                "witness": cls.witness,
            },
            "tracing_index": self.tracing_index,
            "predicted_total_degree": self.predicted_total_degree,
            "total_degree": self.total_degree,
            "deg_x": self.deg_x,
            "deg_y": self.deg_y,
            "polynomial": self.f.canonical_text(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def implicitize(p: TrigPoly) -> ImplicitReport:
    """Defining polynomial of the curve with support function p."""
    if p.is_zero():
        raise CurveError("empty support function")
    cls = classify(p)
    n = p.degree
    if n <= 1:
        f = _circle_polynomial(p)
        return ImplicitReport(f, 1, 2, f.partial_degree("x"), f.partial_degree("y"),
                              2, cls, p, is_circle_case=True)

    param = rational_parametrization(p)
    r = tracing_index(p)
    predicted, _ = predicted_total_degree(p)

    x = MultiPoly.var("x", ("t", "x"))
    y = MultiPoly.var("y", ("t", "y"))
    h1 = x * param.Q.restrict(("t", "x")) - param.P1.restrict(("t", "x"))
    h2 = y * param.Q.restrict(("t", "y")) - param.P2.restrict(("t", "y"))
    big = resultant(h1, h2, "t", method="fast")
    if big.is_zero:
        raise CurveError("degenerate parametrization")
    if r == 1:
        f = big.normalized()
    else:
        try:
            f = rth_root(big, 2)
        except ResultantError:
            raise CurveError("tracing-index contradiction: resultant is "
                             "not a perfect square") from None
    f = f.restrict(("x", "y")).normalized()

    bad = verify_vanishing(f, p, list(SAMPLE_POINTS))
    if bad is not None:
        raise CurveError(f"produced polynomial fails to vanish at t = {bad}")
    return ImplicitReport(f, r, f.total_degree(), f.partial_degree("x"),
                          f.partial_degree("y"), predicted, cls, p)


def _circle_polynomial(p: TrigPoly) -> MultiPoly:
    """(x − a1)² + (y − b1)² − a0² for the degree ≤ 1 circle case."""
    vs = ("x", "y")
    x = MultiPoly.var("x", vs)
    y = MultiPoly.var("y", vs)
    dx = x - MultiPoly.const(vs, p.coeff_a(1))
    dy = y - MultiPoly.const(vs, p.coeff_b(1))
    return (dx * dx + dy * dy - MultiPoly.const(vs, p.a0**2)).normalized()


def verify_vanishing(f: MultiPoly, p: TrigPoly, samples: List[Fraction]):
    """Exact check that f vanishes on the curve.

    Returns None when every sample (and the θ = π point, t → ∞, always
    appended) lies on f; otherwise the offending rational parameter, or the
    string "infinity" for the π point.
    """
    if not samples:
        raise CurveError("need at least one sample")
    param = rational_parametrization(p)
    for t in samples:
        xv, yv = param.point(Fraction(t))
        if f.evaluate({"x": xv, "y": yv}) != 0:
            return Fraction(t)
    xv, yv = param.point_at_pi()
    if f.evaluate({"x": xv, "y": yv}) != 0:
        return "infinity"
    return None

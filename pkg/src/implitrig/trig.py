"""Trigonometric support functions and their exact transforms.

A planar convex body with smooth boundary is described by a support function
p(θ) = a0 + sum_k (a_k cos kθ + b_k sin kθ).  This module provides the exact
representation, the tangent half-angle numerator polynomials C_n and S_n,
the curvature-radius map p → p + p'', a decision procedure for convexity,
shape classification (circle / constant width / rotor), and the associated
Legendre functions that play the same role for surfaces.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .poly import MultiPoly
from .rationals import parse_rational
from . import realroots


class SupportParseError(ValueError):
    """Raised for malformed support-function input text."""


# ---------------------------------------------------------------------------
# tangent half-angle numerators


def cheb_C(n: int) -> MultiPoly:
    """Numerator of cos nθ under t = tan(θ/2): cos nθ = C_n(t)/(1+t²)^n."""
    if n < 0:
        raise ValueError("harmonic index must be nonnegative")
    return _binom_expand(n, even=True)


def cheb_S(n: int) -> MultiPoly:
    """Numerator of sin nθ under t = tan(θ/2): sin nθ = S_n(t)/(1+t²)^n."""
    if n < 0:
        raise ValueError("harmonic index must be nonnegative")
    return _binom_expand(n, even=False)


def _binom_expand(n: int, even: bool) -> MultiPoly:
    t = MultiPoly.var("t", ("t",))
    one_minus = MultiPoly.const(("t",), 1) - t * t
    total = MultiPoly.zero(("t",))
    if even:
        # C_n = sum_k binom(n,2k) (-1)^k 2^{2k} t^{2k} (1-t²)^{n-2k}
        for k in range(n // 2 + 1):
            c = math.comb(n, 2 * k) * (-1) ** k * 4**k
            total = total + MultiPoly.const(("t",), c) * t ** (2 * k) * one_minus ** (n - 2 * k)
    else:
        # S_n = sum_k binom(n,2k+1) (-1)^k 2^{2k+1} t^{2k+1} (1-t²)^{n-1-2k}
        for k in range((n - 1) // 2 + 1):
            c = math.comb(n, 2 * k + 1) * (-1) ** k * 2 ** (2 * k + 1)
            total = total + MultiPoly.const(("t",), c) * t ** (2 * k + 1) * one_minus ** (n - 1 - 2 * k)
    return total


def one_plus_t2(variables: Tuple[str, ...] = ("t",), var: str = "t") -> MultiPoly:
    t = MultiPoly.var(var, (var,))
    return MultiPoly.const((var,), 1) + t * t


# ---------------------------------------------------------------------------
# planar support functions


@dataclass(frozen=True)
class TrigPoly:
    """p(θ) = a0 + sum_{k=1}^{N} (a_k cos kθ + b_k sin kθ), exact coefficients."""

    a0: Fraction
    a: Dict[int, Fraction]
    b: Dict[int, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "a0", Fraction(self.a0))
        object.__setattr__(self, "a", {k: Fraction(v) for k, v in self.a.items() if v != 0})
        object.__setattr__(self, "b", {k: Fraction(v) for k, v in self.b.items() if v != 0})
        for k in list(self.a) + list(self.b):
            if k < 1:
                raise ValueError("harmonic indices start at 1")

    @property
    def degree(self) -> int:
        """Largest harmonic index with a nonzero coefficient (0 if constant)."""
        return max(list(self.a) + list(self.b), default=0)

    @property
    def spectrum(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.a) | set(self.b)))

    def coeff_a(self, k: int) -> Fraction:
        return self.a0 if k == 0 else self.a.get(k, Fraction(0))

    def coeff_b(self, k: int) -> Fraction:
        return self.b.get(k, Fraction(0)) if k >= 1 else Fraction(0)

    def is_zero(self) -> bool:
        return self.a0 == 0 and not self.a and not self.b

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        a = dict(self.a)
        b = dict(self.b)
        for k, v in other.a.items():
            a[k] = a.get(k, Fraction(0)) + v
        for k, v in other.b.items():
            b[k] = b.get(k, Fraction(0)) + v
        return TrigPoly(self.a0 + other.a0, a, b)

    def scale(self, c: Fraction) -> "TrigPoly":
        c = Fraction(c)
        return TrigPoly(self.a0 * c, {k: v * c for k, v in self.a.items()},
                        {k: v * c for k, v in self.b.items()})

    def shift_pi(self) -> "TrigPoly":
        """p(θ + π): flips the sign of the odd harmonics."""
        return TrigPoly(self.a0,
                        {k: v if k % 2 == 0 else -v for k, v in self.a.items()},
                        {k: v if k % 2 == 0 else -v for k, v in self.b.items()})

    def eval_float(self, theta: float) -> float:
        total = float(self.a0)
        for k, v in self.a.items():
            total += float(v) * math.cos(k * theta)
        for k, v in self.b.items():
            total += float(v) * math.sin(k * theta)
        return total

    def half_angle_numerator(self) -> MultiPoly:
        """p(θ)·(1+t²)^N as a polynomial in t = tan(θ/2)."""
        n = self.degree
        total = MultiPoly.const(("t",), self.a0) * one_plus_t2() ** n
        for k in range(1, n + 1):
            ak, bk = self.coeff_a(k), self.coeff_b(k)
            if ak == 0 and bk == 0:
                continue
            part = MultiPoly.const(("t",), ak) * cheb_C(k) + MultiPoly.const(("t",), bk) * cheb_S(k)
            total = total + part * one_plus_t2() ** (n - k)
        return total

    def eval_half_angle(self, t: Fraction) -> Fraction:
        """Exact value p(θ) at θ = 2·arctan(t)."""
        num = self.half_angle_numerator().evaluate({"t": Fraction(t)})
        return Fraction(num) / (1 + Fraction(t) ** 2) ** self.degree

    def value_at_pi(self) -> Fraction:
        """Exact p(π) (the t → ∞ limit of the half-angle form)."""
        total = self.a0
        for k, v in self.a.items():
            total += v * (-1) ** k
        return total

    def to_dict(self) -> dict:
        return {
            "a0": str(self.a0),
            "cos": {str(k): str(v) for k, v in sorted(self.a.items())},
            "sin": {str(k): str(v) for k, v in sorted(self.b.items())},
        }


def curvature_radius(p: TrigPoly) -> TrigPoly:
    """ρ = p + p'': coefficient-wise a_k → (1−k²)a_k, b_k → (1−k²)b_k."""
    return TrigPoly(p.a0,
                    {k: (1 - k * k) * v for k, v in p.a.items()},
                    {k: (1 - k * k) * v for k, v in p.b.items()})


@dataclass(frozen=True)
class ConvexityResult:
    convex: bool
    # for non-convex inputs: tan(θ/2) of a point with ρ < 0, or None when the
    # violation is at θ = π itself
    witness_t: Optional[Fraction] = None
    witness_at_pi: bool = False
    rho_value: Optional[Fraction] = None
    # for convex inputs: count of real parameters where ρ touches zero
    boundary_root_count: int = 0

    @property
    def witness_theta(self) -> Optional[float]:
        if self.witness_at_pi:
            return math.pi
        if self.witness_t is None:
            return None
        return 2.0 * math.atan(float(self.witness_t))


def is_convex(p: TrigPoly) -> ConvexityResult:
    """Decide ρ(θ) = p(θ)+p''(θ) ≥ 0 for all θ, exactly.

    The half-angle substitution turns the condition into nonnegativity of a
    univariate polynomial over the reals, settled by real-root isolation;
    θ = π (the point at infinity of the substitution) is checked separately.
    """
    rho = curvature_radius(p)
    at_pi = rho.value_at_pi()
    if at_pi < 0:
        return ConvexityResult(False, witness_at_pi=True, rho_value=at_pi)
    numer = rho.half_angle_numerator() if rho.degree > 0 else MultiPoly.const(("t",), rho.a0)
    coeffs = _dense_fraction_coeffs(numer)
    # prefer simple witnesses when the violation is easy to exhibit
    for cand in (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2),
                 Fraction(-1, 2), Fraction(2), Fraction(-2)):
        if realroots.poly_eval(coeffs, cand) < 0:
            value = realroots.poly_eval(coeffs, cand) / (1 + cand**2) ** rho.degree
            return ConvexityResult(False, witness_t=cand, rho_value=value)
    ok, witness = realroots.nonnegative_on_reals(coeffs)
    if not ok:
        value = realroots.poly_eval(coeffs, witness) / (1 + witness**2) ** rho.degree
        return ConvexityResult(False, witness_t=witness, rho_value=value)
    sf = realroots.squarefree_part_uni(coeffs)
    zeros = realroots.count_real_roots(sf) if realroots.degree(sf) > 0 else 0
    return ConvexityResult(True, boundary_root_count=zeros)


def _dense_fraction_coeffs(p: MultiPoly) -> List[Fraction]:
    if p.is_zero:
        return []
    if p.is_constant:
        return [Fraction(p.constant_value())]
    out = [Fraction(0)] * (p.partial_degree("t") + 1)
    for c, k in ((c, e) for e, c in p.terms.items()):
        out[k[p.variables.index("t")]] = Fraction(c)
    return out


@dataclass(frozen=True)
class Classification:
    kind: str  # "circle" | "constant_width" | "rotor" | "generic"
    alpha: Optional[Fraction] = None  # the constant width, when applicable
    n: Optional[int] = None  # rotor order
    rho: Optional[Fraction] = None  # rotor radius a0
    witness: dict = field(default_factory=dict)
    width_identity_holds: Optional[bool] = None  # p(θ)+p(θ+π) = α, checked

    def describe(self) -> str:
        if self.kind == "constant_width":
            return f"constant_width(alpha={self.alpha})"
        if self.kind == "rotor":
            return f"rotor(n={self.n}, rho={self.rho})"
        return self.kind


def classify(p: TrigPoly) -> Classification:
    """Circle, constant-width body, rotor, or generic, from the spectrum."""
    spec = p.spectrum
    if p.degree <= 1:
        return Classification("circle", witness={"spectrum": list(spec)})
    if all(k % 2 == 1 for k in spec):
        alpha = 2 * p.a0
        total = p + p.shift_pi()
        holds = total.degree == 0 and total.a0 == alpha
        return Classification("constant_width", alpha=alpha,
                              witness={"spectrum": list(spec)},
                              width_identity_holds=holds)
    admissible = rotor_orders(spec)
    if admissible:
        n = max(admissible)
        return Classification("rotor", n=n, rho=p.a0,
                              witness={"spectrum": list(spec),
                                       "admissible_orders": admissible})
    return Classification("generic", witness={"spectrum": list(spec)})


def rotor_orders(spectrum: Iterable[int]) -> List[int]:
    """All n ≥ 3 with every spectral index of the form kn ± 1 (k ≥ 0)."""
    spec = sorted(set(spectrum))
    if not spec:
        return []
    out = []
    for n in range(3, max(spec) + 2):
        if all(k % n in (1, n - 1) for k in spec):
            out.append(n)
    return out


def parity_class(p: TrigPoly) -> str:
    """"odd_only" iff a0 = 0 and every even-index coefficient vanishes."""
    if p.a0 == 0 and all(k % 2 == 1 for k in p.spectrum):
        return "odd_only"
    return "has_even_harmonic"


# ---------------------------------------------------------------------------
# associated Legendre functions


def legendre_assoc(l: int, m: int) -> Tuple[int, MultiPoly]:
    """P_l^m(u) = s^parity · W(u) with s = √(1−u²); returns (parity, W).

    Uses the Rodrigues form
    P_l^m(u) = (−1)^(m+l) / (2^l l!) · (1−u²)^(m/2) · d^(l+m)/du^(l+m) (1−u²)^l,
    so the full square-root-free factor (1−u²)^⌊m/2⌋ is expanded into W.
    """
    if m < 0 or l < 0 or m > l:
        raise ValueError("need 0 <= m <= l")
    u = MultiPoly.var("u", ("u",))
    base = (MultiPoly.const(("u",), 1) - u * u) ** l
    d = base
    for _ in range(l + m):
        d = d.derivative("u")
    scale = Fraction((-1) ** (m + l), 2**l * math.factorial(l))
    w = MultiPoly.const(("u",), scale) * d
    if m >= 2:
        w = w * (MultiPoly.const(("u",), 1) - u * u) ** (m // 2)
    return (m % 2, w)


@dataclass(frozen=True)
class SphericalSupport:
    """h(θ,φ) = sum over (l,m) of P_l^m(cosθ)(a_{l,m} cos mφ + b_{l,m} sin mφ)."""

    coeffs: Dict[Tuple[int, int], Tuple[Fraction, Fraction]]

    def __post_init__(self):
        clean: Dict[Tuple[int, int], Tuple[Fraction, Fraction]] = {}
        for (l, m), (av, bv) in self.coeffs.items():
            if m < 0 or l < 0 or m > l:
                raise ValueError(f"invalid harmonic (l={l}, m={m})")
            av, bv = Fraction(av), Fraction(bv)
            if m == 0 and bv != 0:
                raise ValueError(f"sin(0·φ) coefficient must vanish at (l={l}, m=0)")
            if av != 0 or bv != 0:
                clean[(l, m)] = (av, bv)
        object.__setattr__(self, "coeffs", clean)

    @property
    def degree(self) -> int:
        return max((l for (l, _m) in self.coeffs), default=0)

    def eval_float(self, theta: float, phi: float) -> float:
        total = 0.0
        u = math.cos(theta)
        s = math.sin(theta)
        for (l, m), (av, bv) in self.coeffs.items():
            parity, w = legendre_assoc(l, m)
            plm = _eval_float_uni(w, u) * (s**parity)
            total += plm * (float(av) * math.cos(m * phi) + float(bv) * math.sin(m * phi))
        return total

    def to_dict(self) -> dict:
        return {
            f"{l},{m}": [str(av), str(bv)]
            for (l, m), (av, bv) in sorted(self.coeffs.items())
        }


def _eval_float_uni(p: MultiPoly, x: float) -> float:
    if p.is_zero:
        return 0.0
    if p.is_constant:
        return float(p.constant_value())
    var = p.variables[0]
    coeffs = p.coeff_list_in(var)
    total = 0.0
    for c in reversed(coeffs):
        total = total * x + float(c.constant_value() if isinstance(c, MultiPoly) else c)
    return total


# ---------------------------------------------------------------------------
# input parsing

_LINE_A0 = re.compile(r"^a0$")
_LINE_TRIG = re.compile(r"^(cos|sin)\s+(\d+)$")
_LINE_Y = re.compile(r"^Y\s+(\d+)\s+(\d+)\s+([ab])$")


def _split_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SupportParseError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        yield lineno, key.strip(), value.strip()


def parse_support_text(text: str) -> TrigPoly:
    """Parse planar support-function text: `a0 = 1/2`, `cos 3 = 1/16`, ..."""
    a0 = Fraction(0)
    a: Dict[int, Fraction] = {}
    b: Dict[int, Fraction] = {}
    seen = set()
    for lineno, key, value in _split_lines(text):
        key = " ".join(key.split())
        try:
            v = parse_rational(value)
        except ValueError as exc:
            raise SupportParseError(f"line {lineno}: bad rational {value!r}: {exc}") from None
        if key in seen:
            raise SupportParseError(f"line {lineno}: duplicate key {key!r}")
        seen.add(key)
        if _LINE_A0.match(key):
            a0 = v
            continue
        m = _LINE_TRIG.match(key)
        if not m:
            raise SupportParseError(f"line {lineno}: unknown key {key!r}")
        k = int(m.group(2))
        if k < 1:
            raise SupportParseError(f"line {lineno}: harmonic index must be >= 1")
        (a if m.group(1) == "cos" else b)[k] = v
    return TrigPoly(a0, a, b)


def parse_spherical_text(text: str) -> SphericalSupport:
    """Parse spherical support text: `Y 3 1 a = 1/10`, `Y 3 1 b = 0`, ..."""
    coeffs: Dict[Tuple[int, int], List[Fraction]] = {}
    seen = set()
    for lineno, key, value in _split_lines(text):
        key = " ".join(key.split())
        m = _LINE_Y.match(key)
        if not m:
            raise SupportParseError(f"line {lineno}: unknown key {key!r}")
        try:
            v = parse_rational(value)
        except ValueError as exc:
            raise SupportParseError(f"line {lineno}: bad rational {value!r}: {exc}") from None
        if key in seen:
            raise SupportParseError(f"line {lineno}: duplicate key {key!r}")
        seen.add(key)
        l, mm, which = int(m.group(1)), int(m.group(2)), m.group(3)
        if mm > l:
            raise SupportParseError(f"line {lineno}: need m <= l in {key!r}")
        if mm == 0 and which == "b" and v != 0:
            raise SupportParseError(f"line {lineno}: sin(0·φ) coefficient must be zero")
        pair = coeffs.setdefault((l, mm), [Fraction(0), Fraction(0)])
        pair[0 if which == "a" else 1] = v
    return SphericalSupport({k: (p[0], p[1]) for k, p in coeffs.items()})

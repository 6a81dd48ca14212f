"""Surface pipeline: rational parametrizations of revolution and
spherical-harmonic surfaces, validity checks, and degree extraction for the
implicit defining polynomial.

A parametrized surface (p1/q1, p2/q2, p3/q3) in (t1, t2) is analyzed through
resultants: with G_i = p_i − x_i·q_i, the auxiliary polynomial
S = pp_x(Content_Z(Res_t2(G_1, G_2 + Z·G_3))) has t1-degree equal to the
degree of the parametrization map, and the pairwise resultants
S_{i,j} = pp_x(Res_t2(G_i, G_j)) carry the partial degrees of the defining
polynomial: deg_{x_k}(F) = deg_t1(S_{i,j}) / deg_t1(S) for {i,j,k} = {1,2,3}.

Degrees are computed by exact integer specialization of the free coordinate
variables (several deterministic points, cross-checked), which keeps the
arithmetic in fast univariate resultants; the full nested construction of F
itself is only run for very small inputs.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from . import realroots
from .gcdtools import gcd_many, gcd_modular, multivar_gcd
from .poly import MultiPoly
from .resultants import ResultantError, resultant, resultant_measured, rth_root
from .trig import SphericalSupport, TrigPoly, cheb_C, cheb_S, legendre_assoc
from .curves import rational_parametrization


class SurfaceError(ValueError):
    pass


TVARS = ("t1", "t2")


def _tpoly(terms: Dict[Tuple[int, int], Fraction]) -> MultiPoly:
    return MultiPoly(TVARS, terms)


def _const(c) -> MultiPoly:
    return MultiPoly.const(TVARS, c)


def _tvar(name: str) -> MultiPoly:
    return MultiPoly.var(name, TVARS)


def _one_plus_sq(name: str) -> MultiPoly:
    v = _tvar(name)
    return _const(1) + v * v


def _univar_in(p: MultiPoly, target: str) -> MultiPoly:
    """Re-house a univariate polynomial over the (t1, t2) variable pair."""
    src = p.variables[0] if p.variables else target
    idx = 0 if target == "t1" else 1
    terms = {}
    for e, c in p.terms.items():
        ne = [0, 0]
        ne[idx] = e[0] if p.variables else 0
        terms[tuple(ne)] = c
    return _tpoly(terms)


# ---------------------------------------------------------------------------
# rational functions over Q[t1, t2] with structured denominators


@dataclass(frozen=True)
class Rat:
    """num/den with den a product of t2 and (1+t_i²) factors (and constants)."""

    num: MultiPoly
    den: MultiPoly

    @staticmethod
    def of(num: MultiPoly, den: Optional[MultiPoly] = None) -> "Rat":
        if den is None:
            den = _const(1)
        return Rat(num, den).reduced()

    def reduced(self) -> "Rat":
        num, den = self.num, self.den
        if den.is_zero:
            raise SurfaceError("zero denominator")
        if num.is_zero:
            return Rat(num, _const(1))
        for factor in (_one_plus_sq("t1"), _one_plus_sq("t2"), _tvar("t2"),
                       _tvar("t1")):
            while factor.divides(den) and factor.divides(num):
                den = den.exact_div(factor)
                num = num.exact_div(factor)
        # scale so the denominator is integral, content-1, positive lc
        dnorm = den.normalized()
        scale = None
        # den = s * dnorm for a rational s; divide num by s as well
        lead = den.leading_exponents()
        s = Fraction(den.terms[lead]) / Fraction(dnorm.terms[lead])
        num = MultiPoly(num.variables, {e: Fraction(c) / s for e, c in num.terms.items()})
        return Rat(num, dnorm)

    def __add__(self, other: "Rat") -> "Rat":
        return Rat(self.num * other.den + other.num * self.den,
                   self.den * other.den).reduced()

    def __sub__(self, other: "Rat") -> "Rat":
        return Rat(self.num * other.den - other.num * self.den,
                   self.den * other.den).reduced()

    def __mul__(self, other: "Rat") -> "Rat":
        return Rat(self.num * other.num, self.den * other.den).reduced()

    def scale(self, c: Fraction) -> "Rat":
        return Rat(self.num * _const(c), self.den).reduced()

    def derivative(self, var: str) -> "Rat":
        return Rat(self.num.derivative(var) * self.den
                   - self.num * self.den.derivative(var),
                   self.den * self.den).reduced()

    def div_sin_theta(self) -> "Rat":
        """Divide by sinθ = 2t2/(1+t2²)."""
        return Rat(self.num * _one_plus_sq("t2"),
                   self.den * _const(2) * _tvar("t2")).reduced()

    def is_constant(self) -> bool:
        # components are kept reduced, so a constant ratio means both parts
        # are themselves constants
        return self.num.is_zero or (self.num.is_constant and self.den.is_constant)

    def evaluate(self, t1: Fraction, t2: Fraction) -> Fraction:
        point = {"t1": Fraction(t1), "t2": Fraction(t2)}
        d = Fraction(self.den.evaluate(point))
        if d == 0:
            raise SurfaceError("sample point hits a pole")
        return Fraction(self.num.evaluate(point)) / d

    def depends_on(self, var: str) -> bool:
        return self.num.partial_degree(var) > 0 or self.den.partial_degree(var) > 0


@dataclass(frozen=True)
class SurfaceParam:
    """Three reduced rational components in (t1, t2); axes labeled x, y, z."""

    components: Tuple[Rat, Rat, Rat]

    def point(self, t1: Fraction, t2: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
        return tuple(c.evaluate(t1, t2) for c in self.components)


# ---------------------------------------------------------------------------
# construction of the two surface families


def revolution_surface(p: TrigPoly) -> SurfaceParam:
    """Rotate the curve of support function p around the x axis:
    (x(θ), y(θ)·sinφ, y(θ)·cosφ) with θ ↔ t2, φ ↔ t1."""
    par = rational_parametrization(p)
    p1 = _univar_in(par.P1, "t2")
    p2 = _univar_in(par.P2, "t2")
    q = _univar_in(par.Q, "t2")
    if p2.is_zero:
        raise SurfaceError("degenerate revolution")
    w1 = _one_plus_sq("t1")
    x = Rat.of(p1, q)
    y = Rat.of(p2 * _const(2) * _tvar("t1"), q * w1)
    z = Rat.of(p2 * (_const(1) - _tvar("t1") * _tvar("t1")), q * w1)
    return SurfaceParam((x, y, z))


def _cos_sin_phi(m: int) -> Tuple[Rat, Rat]:
    """cos mφ and sin mφ with φ ↔ t1."""
    den = _one_plus_sq("t1") ** m
    return (Rat.of(_univar_in(cheb_C(m), "t1"), den),
            Rat.of(_univar_in(cheb_S(m), "t1"), den))


def _cos_sin_theta() -> Tuple[Rat, Rat]:
    w = _one_plus_sq("t2")
    return (Rat.of(_const(1) - _tvar("t2") * _tvar("t2"), w),
            Rat.of(_const(2) * _tvar("t2"), w))


def _poly_in_u(w: MultiPoly, u: Rat) -> Rat:
    """Evaluate a univariate polynomial (in u) at a rational function."""
    total = Rat.of(_const(0))
    coeffs = w.coeff_list_in(w.variables[0]) if not w.is_constant else []
    if w.is_zero:
        return total
    if w.is_constant:
        return Rat.of(_const(w.constant_value()))
    power = Rat.of(_const(1))
    for c in coeffs:
        cv = c.constant_value() if isinstance(c, MultiPoly) else c
        if cv != 0:
            total = total + power.scale(Fraction(cv))
        power = power * u
    return total


def harmonic_surface(h: SphericalSupport) -> SurfaceParam:
    """Support-function surface Υ = h·u + h_θ·v + (1/sinθ)·h_φ·w."""
    cth, sth = _cos_sin_theta()
    hfun = Rat.of(_const(0))
    for (l, m), (av, bv) in sorted(h.coeffs.items()):
        parity, w = legendre_assoc(l, m)
        plm = _poly_in_u(w, cth)
        if parity:
            plm = plm * sth
        cphi, sphi = _cos_sin_phi(m)
        angular = cphi.scale(av) + sphi.scale(bv)
        hfun = hfun + plm * angular
    # θ ↔ t2 and φ ↔ t1: d/dθ = (1+t2²)/2 · d/dt2, likewise for φ
    half2 = Rat.of(_one_plus_sq("t2"), _const(2))
    half1 = Rat.of(_one_plus_sq("t1"), _const(2))
    h_theta = hfun.derivative("t2") * half2
    h_phi = hfun.derivative("t1") * half1
    h_phi_over_sin = h_phi.div_sin_theta()
    if _tvar("t2").divides(h_phi_over_sin.den):
        raise AssertionError("sin theta failed to cancel from the w-component")

    cphi1, sphi1 = _cos_sin_phi(1)
    u = (sth * cphi1, sth * sphi1, cth)
    v = (cth * cphi1, cth * sphi1, Rat.of(_const(0)) - sth)
    wb = (Rat.of(_const(0)) - sphi1, cphi1, Rat.of(_const(0)))
    comps = tuple(hfun * u[i] + h_theta * v[i] + h_phi_over_sin * wb[i]
                  for i in range(3))
    return SurfaceParam(comps)


# ---------------------------------------------------------------------------
# general assumptions (validity of the elimination machinery)


@dataclass(frozen=True)
class AssumptionResult:
    ok: bool
    reason: Optional[str] = None
    permutation: Tuple[int, int, int] = (0, 1, 2)
    shear: int = 0  # constant c of the repair t1 → t1 + c·t2


def _jacobian_ok(a: Rat, b: Rat) -> bool:
    j = (a.derivative("t1") * b.derivative("t2")
         - a.derivative("t2") * b.derivative("t1"))
    return not j.num.is_zero


def _nonconstant(c: Rat) -> bool:
    return not c.is_constant()


def _infinity_ok(components: Sequence[Rat]) -> bool:
    """Each p_i and q_i must attain its total degree on the pure t2 power."""
    for comp in components:
        for poly in (comp.num, comp.den):
            d = poly.total_degree()
            if d <= 0:
                continue
            if poly.terms.get((0, d), 0) == 0:
                return False
    return True


def _shear(poly: MultiPoly, c: int) -> MultiPoly:
    """t1 → t1 + c·t2."""
    if c == 0:
        return poly
    repl = _tvar("t1") + _const(c) * _tvar("t2")
    out = MultiPoly.zero(TVARS)
    for e, coeff in poly.terms.items():
        out = out + MultiPoly.const(TVARS, coeff) * repl ** e[0] * _tvar("t2") ** e[1]
    return out


def _shear_param(p: SurfaceParam, c: int) -> SurfaceParam:
    return SurfaceParam(tuple(Rat.of(_shear(r.num, c), _shear(r.den, c))
                              for r in p.components))


def general_assumptions_check(p: SurfaceParam) -> AssumptionResult:
    """Find a component ordering and shear making the machinery applicable.

    Orderings are tried in a fixed sequence; within each, the smallest
    shear constant c ∈ {0..4} restoring the point-at-infinity condition is
    used.  The first two components must also genuinely involve t1, so both
    elimination directions stay meaningful.
    """
    reasons = []
    for perm in _ORDERINGS:
        comps = [p.components[i] for i in perm]
        if not _jacobian_ok(comps[0], comps[1]):
            reasons.append(f"{perm}: dependent gradients")
            continue
        if not _nonconstant(comps[2]):
            reasons.append(f"{perm}: third component constant")
            continue
        if not (comps[0].depends_on("t1") and comps[1].depends_on("t1")
                and comps[0].depends_on("t2") and comps[1].depends_on("t2")):
            reasons.append(f"{perm}: leading pair does not involve both parameters")
            continue
        for c in range(0, 5):
            sheared = _shear_param(p, c) if c else p
            scomps = [sheared.components[i] for i in perm]
            if _infinity_ok(scomps):
                return AssumptionResult(True, None, perm, c)
        reasons.append(f"{perm}: point at infinity not avoidable by shear")
    return AssumptionResult(False, "; ".join(reasons) or "no valid ordering")


_ORDERINGS: Tuple[Tuple[int, int, int], ...] = tuple(permutations((0, 1, 2)))


# ---------------------------------------------------------------------------
# degree machinery


@dataclass(frozen=True)
class DegreeReport:
    map_degree: int
    deg_x: int
    deg_y: int
    deg_z: int
    table_ratio_x: Fraction
    table_ratio_y: Fraction
    table_ratio_z: Fraction
    raw: Dict[str, Optional[int]]
    permutation: Tuple[int, int, int]
    shear: int
    wall_time: float

    def to_json_dict(self) -> dict:
        return {
            "map_degree": self.map_degree,
            "deg_x": self.deg_x, "deg_y": self.deg_y, "deg_z": self.deg_z,
            "table_ratio_x": str(self.table_ratio_x),
            "table_ratio_y": str(self.table_ratio_y),
            "table_ratio_z": str(self.table_ratio_z),
            "raw": self.raw,
            "permutation": list(self.permutation),
            "shear": self.shear,
            "wall_time_seconds": round(self.wall_time, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


#: Deterministic integer specialization points for the coordinate variables.
_XPOINTS: Tuple[Tuple[int, int, int], ...] = (
    (3, 5, 7), (11, 13, 17), (23, 29, 31), (41, 43, 47), (59, 61, 67),
)


def _clear_denominators(r: Rat) -> Tuple[MultiPoly, MultiPoly]:
    d = r.num.denominator_lcm()
    num = (r.num * MultiPoly.const(r.num.variables, d)).restrict(TVARS)
    den = (r.den * MultiPoly.const(r.den.variables, d)).restrict(TVARS)
    return num, den


def _build_g(comp: Rat, axis: str) -> MultiPoly:
    """G = p − x·q over (t1, t2, axis), with integer coefficients."""
    num, den = _clear_denominators(comp)
    variables = ("t1", "t2", axis)
    x = MultiPoly.var(axis, variables)
    g = num.restrict(variables) - x * den.restrict(variables)
    return g.normalized()


def _specialize(g: MultiPoly, assign: Dict[str, Fraction]) -> MultiPoly:
    out = g
    for var, val in assign.items():
        if var in out.variables:
            out = out.eval_partial(var, val)
    keep = tuple(v for v in out.variables if v not in assign)
    return out.restrict(keep)


def _res_degree(a: MultiPoly, b: MultiPoly, elim: str, keep: str) -> int:
    """deg_keep of Res_elim(a, b); −1 signals a vanishing resultant."""
    r = resultant(a, b, elim, method="fast")
    if r.is_zero:
        return -1
    return max(r.partial_degree(keep), 0)


def _stable(values: List[int], pick) -> int:
    """Consensus over specialization points: the picked value must recur."""
    v = pick(values)
    if values.count(v) < 2:
        raise SurfaceError(f"unstable degree across specializations: {values}")
    return v


def _pair_degree(gi: MultiPoly, gj: MultiPoly, elim: str, keep: str,
                 axes: Sequence[str]) -> Tuple[int, int]:
    """(raw, primitive) deg_keep of Res_elim(G_i, G_j).

    The coordinate variables stay symbolic; the keep-variable content of
    the resultant (the gcd of its coefficients over the coordinate
    monomials) is extraneous and stripped for the primitive degree.
    """
    if gi.partial_degree(elim) < 1 or gj.partial_degree(elim) < 1:
        return (-1, -1)
    keepvars = (keep,) + tuple(axes)
    r = resultant(gi.restrict(keepvars + (elim,)),
                  gj.restrict(keepvars + (elim,)), elim, method="fast")
    if r.is_zero:
        return (-1, -1)
    raw = r.partial_degree(keep)
    if raw <= 0:
        return (max(raw, 0), max(raw, 0))
    iv = r.variables.index(keep)
    buckets: Dict[Tuple[int, ...], List[Fraction]] = {}
    for e, c in r.terms.items():
        key = tuple(x for k, x in enumerate(e) if k != iv)
        buckets.setdefault(key, [Fraction(0)] * (raw + 1))[e[iv]] += c
    content: List[Fraction] = []
    for lst in buckets.values():
        content = realroots.poly_gcd_uni(content, lst) if content else lst
        if realroots.degree(content) == 0:
            break
    return (raw, raw - realroots.degree(content))


#: Deterministic parameter samples giving generic points on the surface.
_SPOINTS: Tuple[Tuple[Fraction, Fraction], ...] = (
    (Fraction(2, 3), Fraction(3, 5)), (Fraction(1, 2), Fraction(5, 7)),
    (Fraction(-3, 4), Fraction(2, 9)), (Fraction(7, 5), Fraction(-4, 3)),
)


def _content_degree(g: Sequence[MultiPoly], elim: str, keep: str,
                    assign: Dict[str, Fraction]) -> int:
    """deg_keep of Content_Z(Res_elim(G_1, G_2 + Z·G_3)) at fixed coordinates."""
    zvar = "_Z"
    a = _specialize(g[0], assign)
    b2 = _specialize(g[1], assign)
    b3 = _specialize(g[2], assign)
    variables = (keep, elim, zvar)
    b = (b2.restrict(variables)
         + MultiPoly.var(zvar, variables) * b3.restrict(variables))
    if a.partial_degree(elim) < 1 or b.partial_degree(elim) < 1:
        raise SurfaceError("degenerate elimination input")
    r = resultant(a.restrict((keep, elim)), b, elim, method="fast")
    if r.is_zero:
        raise SurfaceError("components not independent")
    coeffs = r.coeff_list_in(zvar)
    lists = [_fraction_list(c, keep) for c in coeffs if not c.is_zero]
    gg: List[Fraction] = []
    for lst in lists:
        gg = realroots.poly_gcd_uni(gg, lst) if gg else lst
    return realroots.degree(gg)


#: Generic off-surface coordinate points used to measure the parasitic
#: Z-content that does not come from the fiber.
_OFFPOINTS: Tuple[Tuple[Fraction, ...], ...] = (
    (Fraction(3), Fraction(5), Fraction(7)),
    (Fraction(11, 2), Fraction(13, 3), Fraction(17, 5)),
    (Fraction(-19, 4), Fraction(23, 7), Fraction(-29, 3)),
)


def _map_degree_oneway(work: SurfaceParam, g: Sequence[MultiPoly],
                       elim: str, keep: str) -> int:
    """deg_keep of S = Content_Z(Res_elim(G_1, G_2 + Z·G_3)).

    At coordinates on the surface the Z-content picks up one keep-root per
    fiber parameter, on top of a parasitic factor that is present at any
    coordinates.  The parasitic degree is measured at generic off-surface
    points and subtracted, leaving the fiber size — the map degree.
    """
    values: List[int] = []
    for s1, s2 in _SPOINTS:
        if len(values) == 3:
            break
        try:
            pt = work.point(s1, s2)
        except ZeroDivisionError:
            continue
        values.append(_content_degree(g, elim, keep,
                                      dict(zip(("x", "y", "z"), pt))))
    on_degree = _stable(values, min)
    off_values = [_content_degree(g, elim, keep,
                                  dict(zip(("x", "y", "z"), pt)))
                  for pt in _OFFPOINTS[:2]]
    off_degree = _stable(off_values, min)
    return on_degree - off_degree


def _fraction_list(p: MultiPoly, var: str) -> List[Fraction]:
    if p.is_zero:
        return []
    if var not in p.variables or p.partial_degree(var) <= 0:
        return [Fraction(p.constant_value())]
    out = [Fraction(0)] * (p.partial_degree(var) + 1)
    idx = p.variables.index(var)
    for e, c in p.terms.items():
        out[e[idx]] = Fraction(c)
    return out


def sendra_degrees(p: SurfaceParam) -> DegreeReport:
    """Map degree and partial degrees of the defining polynomial."""
    start = time.monotonic()
    check = general_assumptions_check(p)
    if not check.ok:
        raise SurfaceError(f"general assumptions violated: {check.reason}")
    work = _shear_param(p, check.shear) if check.shear else p
    perm = check.permutation
    axes = ("x", "y", "z")
    ordered_axes = [axes[i] for i in perm]
    g = [_build_g(work.components[i], axes[i]) for i in perm]

    map_s = _map_degree_oneway(work, g, "t2", "t1")
    map_t = _map_degree_oneway(work, g, "t1", "t2")
    if map_s != map_t or map_s < 1:
        raise SurfaceError(
            f"assumption failure: S/T map degrees disagree ({map_s} vs {map_t})")
    map_degree = map_s

    raw: Dict[str, Optional[int]] = {
        "deg_t1_S": map_s, "deg_t2_T": map_t,
    }
    axis_degree: Dict[str, int] = {}
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        k = 3 - i - j
        pair_axes = (ordered_axes[i], ordered_axes[j])
        ds_raw, ds = _pair_degree(g[i], g[j], "t2", "t1", pair_axes)
        if ds < 0:
            raise SurfaceError("components not independent")
        raw[f"deg_t1_S_{pair_axes[0]}{pair_axes[1]}"] = ds_raw
        raw[f"pp_deg_t1_S_{pair_axes[0]}{pair_axes[1]}"] = ds
        if g[i].partial_degree("t1") >= 1 and g[j].partial_degree("t1") >= 1:
            dt_raw, dt = _pair_degree(g[i], g[j], "t1", "t2", pair_axes)
            raw[f"deg_t2_T_{pair_axes[0]}{pair_axes[1]}"] = dt_raw
            raw[f"pp_deg_t2_T_{pair_axes[0]}{pair_axes[1]}"] = dt
        else:
            raw[f"deg_t2_T_{pair_axes[0]}{pair_axes[1]}"] = None
            raw[f"pp_deg_t2_T_{pair_axes[0]}{pair_axes[1]}"] = None
        if ds % map_degree != 0:
            raise SurfaceError(
                f"assumption failure: primitive degree {ds} not divisible "
                f"by map degree {map_degree}")
        axis_degree[ordered_axes[k]] = ds

    ratios = {ax: Fraction(axis_degree[ax], map_degree) for ax in axes}
    return DegreeReport(
        map_degree=map_degree,
        deg_x=axis_degree["x"], deg_y=axis_degree["y"], deg_z=axis_degree["z"],
        table_ratio_x=ratios["x"], table_ratio_y=ratios["y"],
        table_ratio_z=ratios["z"],
        raw=raw, permutation=perm, shear=check.shear,
        wall_time=time.monotonic() - start,
    )


# ---------------------------------------------------------------------------
# full implicitization for tiny instances


#: Deterministic surface sample parameters used for vanishing checks.
SURFACE_SAMPLES: Tuple[Tuple[Fraction, Fraction], ...] = tuple(
    (Fraction(a, b), Fraction(c, d)) for a, b, c, d in [
        (1, 2, 1, 3), (1, 1, 2, 1), (-1, 2, 1, 1), (2, 3, -1, 2), (3, 1, 1, 5),
        (-2, 1, -1, 3), (1, 4, 3, 2), (-3, 4, 2, 5), (5, 2, -2, 3), (0, 1, 1, 2),
    ]
)


def surface_implicitize_small(p: SurfaceParam) -> MultiPoly:
    """Full defining polynomial via the nested-resultant construction.

    Guarded to components of total degree ≤ 4 (numerators and denominators):
    the construction stacks three resultants and is only meant for sphere-
    sized inputs.
    """
    for comp in p.components:
        num, den = _clear_denominators(comp)
        if num.total_degree() > 4 or den.total_degree() > 4:
            raise SurfaceError("instance too large; use sendra_degrees")
    check = general_assumptions_check(p)
    if not check.ok:
        raise SurfaceError(f"general assumptions violated: {check.reason}")
    perm = check.permutation
    try:
        # The unsheared components keep the intermediate degrees smallest;
        # the final vanishing check decides whether the shortcut was sound.
        return _small_construct(p, perm)
    except SurfaceError:
        if not check.shear:
            raise
        work = _shear_param(p, check.shear)
        return _small_construct(work, perm, samples_from=p)


def _small_construct(param: SurfaceParam, perm: Tuple[int, int, int],
                     samples_from: Optional[SurfaceParam] = None) -> MultiPoly:
    axes = ("x", "y", "z")
    g = [_build_g(param.components[i], axes[i]) for i in perm]
    x3 = axes[perm[2]]
    if g[0].partial_degree("t2") < 1 or g[1].partial_degree("t2") < 1 \
            or g[0].partial_degree("t1") < 1 or g[1].partial_degree("t1") < 1:
        raise SurfaceError("degenerate component pair")

    s12 = _pp_axes(_pp_wrt_t(resultant(g[0], g[1], "t2", method="fast"), "t1"))
    t12 = _pp_axes(_pp_wrt_t(resultant(g[0], g[1], "t1", method="fast"), "t2"))
    if s12.is_zero or t12.is_zero or s12.partial_degree("t1") < 1 \
            or t12.partial_degree("t2") < 1:
        raise SurfaceError("components not independent")

    # The (Z, W)-content of the nested resultant h(Z, W, x̄) is recovered as
    # the gcd of h at fixed integer (Z, W) pairs: each specialization is an
    # integer combination of the Z^aW^b coefficients, so the gcd always
    # contains the content and the final vanishing check guards equality.
    allv = ("t1", "t2", "x", "y", "z")
    specials: List[MultiPoly] = []
    k_bounds: Optional[Dict[str, int]] = None
    h_bounds: Optional[Dict[str, int]] = None
    for zv, wv in ((2, 3), (5, 7), (11, 13)):
        big = (g[2].restrict(allv)
               + MultiPoly.const(allv, Fraction(zv)) * g[0].restrict(allv)
               + MultiPoly.const(allv, Fraction(wv)) * g[1].restrict(allv))
        k = resultant_measured(s12.restrict(allv), big, "t1",
                               degree_bounds=k_bounds)
        if k_bounds is None:
            k_bounds = {v: k.partial_degree(v) for v in k.variables
                        if v != "t1"}
        k = _pp_axes(k)
        if k.partial_degree("t2") < 1:
            raise SurfaceError("degenerate nested resultant")
        h = resultant_measured(t12.restrict(allv), k.restrict(allv), "t2",
                               degree_bounds=h_bounds)
        if h.is_zero:
            raise SurfaceError("degenerate nested resultant")
        if h_bounds is None:
            h_bounds = {v: h.partial_degree(v) for v in h.variables
                        if v != "t2"}
        specials.append(h.restrict(("x", "y", "z")).normalized())
        if len(specials) >= 2:
            content = gcd_modular(specials[0], specials[1])
            for extra in specials[2:]:
                content = gcd_modular(content, extra)
            if not content.is_constant:
                break
    if content.is_constant:
        raise SurfaceError("degenerate nested resultant")

    # The content carries the defining polynomial raised to the covering
    # multiplicity of the construction; extract the largest perfect root.
    body = _pp_in_var(content, x3)
    f = body.normalized()
    td = body.total_degree()
    for r in range(td, 1, -1):
        if td % r:
            continue
        try:
            f = rth_root(body, r)
            break
        except ResultantError:
            continue
    f = f.restrict(("x", "y", "z")) if set(
        v for v in f.variables if f.uses_variable(v)) <= {"x", "y", "z"} else f
    f = f.normalized()

    source = samples_from if samples_from is not None else param
    for t1, t2 in SURFACE_SAMPLES:
        try:
            x, y, z = source.point(t1, t2)
        except ZeroDivisionError:
            continue
        if f.evaluate({"x": x, "y": y, "z": z}) != 0:
            raise SurfaceError(
                f"implicit polynomial fails to vanish at (t1,t2)=({t1},{t2})")
    return f


def _pp_axes(poly: MultiPoly) -> MultiPoly:
    """Strip the coordinate-free content: the gcd, over the coordinate
    monomials, of the (t1, t2)-polynomial coefficients."""
    if poly.is_zero:
        return poly
    cvars = [v for v in ("x", "y", "z") if v in poly.variables
             and poly.partial_degree(v) > 0]
    if not cvars:
        return poly.normalized()
    cidx = [poly.variables.index(v) for v in cvars]
    restv = tuple(v for i, v in enumerate(poly.variables)
                  if i not in cidx)
    by: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = {}
    for e, c in poly.terms.items():
        key = tuple(e[i] for i in cidx)
        rest = tuple(v for i, v in enumerate(e) if i not in cidx)
        by.setdefault(key, {})[rest] = c
    coeffs = [MultiPoly(restv, t) for t in by.values()]
    content = gcd_many(coeffs)
    if content.is_constant:
        return poly.normalized()
    content = content.restrict(poly.variables)
    return poly.exact_div(content).normalized()


def _pp_wrt_t(poly: MultiPoly, tvar: Optional[str]) -> MultiPoly:
    """Primitive part over the coordinate ring: strip factors free of t̄."""
    if poly.is_zero:
        return poly
    tvars = [v for v in ("t1", "t2") if v in poly.variables
             and poly.partial_degree(v) > 0]
    if not tvars:
        return poly.normalized()
    by: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = {}
    tidx = [poly.variables.index(v) for v in tvars]
    restv = tuple(v for i, v in enumerate(poly.variables) if i not in tidx)
    for e, c in poly.terms.items():
        key = tuple(e[i] for i in tidx)
        rest = tuple(v for i, v in enumerate(e) if i not in tidx)
        by.setdefault(key, {})[rest] = c
    coeffs = [MultiPoly(restv, t) for t in by.values()]
    content = gcd_many(coeffs)
    if content.is_constant:
        return poly.normalized()
    content = content.restrict(poly.variables)
    return poly.exact_div(content).normalized()


def _pp_in_var(poly: MultiPoly, var: str) -> MultiPoly:
    """Primitive part with respect to powers of ``var``."""
    if poly.is_zero or var not in poly.variables:
        return poly.normalized()
    by = poly.coeffs_in(var)
    content = gcd_many(list(by.values()))
    if content.is_constant:
        return poly.normalized()
    content = content.restrict(poly.variables)
    return poly.exact_div(content).normalized()

"""Resultants and perfect-power extraction.

Three engines compute Res_var(p, q):

* ``sylvester`` — fraction-free Bareiss elimination on the Sylvester matrix
  (rows ordered p-block then q-block).  This determinant is the reference
  value; every other engine must reproduce it exactly (``bezout`` up to sign).
* ``bezout`` — Bareiss on the Bezout (Cayley) matrix.
* ``fast`` — exact evaluation/interpolation: the remaining variables are
  specialized on an integer grid, each specialized resultant is computed over
  Z (subresultant remainder sequence, falling back to an integer Bareiss
  determinant when a leading coefficient vanishes at the grid point), and the
  polynomial is recovered by Newton interpolation.  The result is
  bit-identical to the Sylvester determinant.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .gcdtools import multivar_gcd
from .poly import Coeff, MultiPoly, unify


class ResultantError(ValueError):
    pass


# ---------------------------------------------------------------------------
# matrices and Bareiss determinants
# ---------------------------------------------------------------------------


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> List[List[MultiPoly]]:
    p, q = unify(p, q)
    m = p.partial_degree(var)
    n = q.partial_degree(var)
    pc = p.coeff_list_in(var)
    qc = q.coeff_list_in(var)
    zero = MultiPoly.zero(p.variables)
    size = m + n
    rows: List[List[MultiPoly]] = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(pc)):  # p_m ... p_0
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(qc)):
            row[i + j] = c
        rows.append(row)
    return rows


def bezout_matrix(p: MultiPoly, q: MultiPoly, var: str) -> List[List[MultiPoly]]:
    """Cayley/Bezout matrix of size max(deg p, deg q) in ``var``."""
    p, q = unify(p, q)
    n = max(p.partial_degree(var), q.partial_degree(var))
    u, v = "_bz_u", "_bz_v"
    pu = _rename_var(p, var, u)
    pv = _rename_var(p, var, v)
    qu = _rename_var(q, var, u)
    qv = _rename_var(q, var, v)
    numer = pu * qv - pv * qu
    uvar = MultiPoly.var(u, numer.variables)
    vvar = MultiPoly.var(v, numer.variables)
    cayley = numer.exact_div(uvar - vvar)
    by_u = cayley.coeffs_in(u)
    zero = MultiPoly.zero(p.variables)
    rows = []
    for i in range(n):
        row_poly = by_u.get(i)
        by_v = row_poly.coeffs_in(v) if row_poly is not None else {}
        row = []
        for j in range(n):
            entry = by_v.get(j, None)
            row.append(entry.restrict(p.variables) if entry is not None else zero)
        rows.append(row)
    return rows


def _rename_var(p: MultiPoly, old: str, new: str) -> MultiPoly:
    variables = tuple(new if v == old else v for v in p.variables)
    return MultiPoly(variables, dict(p.terms))


def bareiss_determinant(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free (division-exact) determinant over the polynomial ring."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    variables = matrix[0][0].variables
    m = [list(row) for row in matrix]
    sign = 1
    prev = MultiPoly.const(variables, 1)
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot_row = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if pivot_row is None:
                return MultiPoly.zero(variables)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = MultiPoly.zero(variables)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def int_bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# integer univariate resultants (specialized grid points)
# ---------------------------------------------------------------------------


def _int_prem(a: List[int], b: List[int]) -> List[int]:
    """Exact pseudo-remainder lc(b)^(da-db+1) * a mod b over Z.

    Dense low-to-high coefficient lists; b must have a nonzero leading
    coefficient.
    """
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return list(a)
    lc = b[-1]
    e = da - db + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lead = r[-1]
        r = [lc * c for c in r[:-1]]
        for j in range(db):
            r[dr - db + j] -= lead * b[j]
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        f = lc**e
        r = [f * c for c in r]
    return r


def int_resultant_prs(a: List[int], b: List[int]) -> int:
    """Resultant over Z via the subresultant PRS (Cohen, Alg. 3.3.7).

    Inputs are dense low-to-high coefficient lists with nonzero leading
    coefficients and degree >= 1 each.  Matches the Sylvester determinant
    with rows ordered a-block then b-block, including sign.
    """
    s = 1
    if len(a) < len(b):
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            s = -s
        a, b = b, a
    g = 1
    h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _int_prem(a, b)
        if not r:
            return 0
        divisor = g * h**delta
        a = b
        b = [c // divisor for c in r]
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1)
        if len(b) - 1 == 0:
            da = len(a) - 1
            return s * (b[-1] ** da // h ** (da - 1))


def int_sylvester_det(a: List[int], b: List[int], m: int, n: int) -> int:
    """Sylvester determinant with FORMAL degrees m, n (lists may have
    trailing zeros removed or vanished leading coefficients)."""
    a = list(a) + [0] * (m + 1 - len(a))
    b = list(b) + [0] * (n + 1 - len(b))
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j in range(m + 1):
            row[i + j] = a[m - j]
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j in range(n + 1):
            row[i + j] = b[n - j]
        rows.append(row)
    return int_bareiss_determinant(rows)


def _specialized_resultant(a: List[int], b: List[int], m: int, n: int) -> int:
    """det of the formal-degree Sylvester matrix at one grid point."""
    at = list(a)
    while at and at[-1] == 0:
        at.pop()
    bt = list(b)
    while bt and bt[-1] == 0:
        bt.pop()
    if len(at) - 1 == m and len(bt) - 1 == n and m >= 1 and n >= 1:
        return int_resultant_prs(at, bt)
    return int_sylvester_det(a, b, m, n)


# ---------------------------------------------------------------------------
# evaluation / interpolation engine
# ---------------------------------------------------------------------------


def _interp_nodes(count: int) -> List[int]:
    nodes: List[int] = []
    k = 0
    while len(nodes) < count:
        if k == 0:
            nodes.append(0)
        else:
            nodes.append(k)
            if len(nodes) < count:
                nodes.append(-k)
        k += 1
    return nodes


def _newton_interpolate(nodes: List[int], values: List[MultiPoly], var: str,
                        variables) -> MultiPoly:
    """Newton interpolation with polynomial values; exact over Q."""
    coeffs = list(values)
    n = len(nodes)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            num = coeffs[i] - coeffs[i - 1]
            coeffs[i] = num.scale(Fraction(1, nodes[i] - nodes[i - level]))
    v = MultiPoly.var(var, variables)
    result = coeffs[-1]
    for i in range(n - 2, -1, -1):
        result = result * (v - nodes[i]) + coeffs[i]
    return result


def resultant_fast(p: MultiPoly, q: MultiPoly, var: str,
                   degree_bounds: Optional[dict] = None) -> MultiPoly:
    """Evaluation/interpolation resultant; equals the Sylvester determinant.

    ``degree_bounds`` optionally caps the interpolation degree per remaining
    variable; the caller is responsible for the caps being true bounds
    (see ``resultant_measured`` for the self-verifying wrapper).
    """
    p, q = unify(p, q)
    variables = p.variables
    m = p.partial_degree(var)
    n = q.partial_degree(var)
    dp = p.denominator_lcm()
    dq = q.denominator_lcm()
    pi = p.scale(dp)
    qi = q.scale(dq)
    others = [v for v in variables if v != var and (pi.uses_variable(v) or qi.uses_variable(v))]
    bounds = {
        v: n * max(pi.partial_degree(v), 0) + m * max(qi.partial_degree(v), 0)
        for v in others
    }
    if degree_bounds:
        for v in others:
            if v in degree_bounds:
                bounds[v] = min(bounds[v], degree_bounds[v])
    # Dense flat-array pipeline: the coefficient polynomials are laid out as
    # flat integer arrays over ``others`` (row-major), specialized one axis
    # at a time by Horner collapse, and the grid values are re-assembled by
    # Newton interpolation with elementwise list arithmetic.  This avoids
    # all intermediate MultiPoly dictionary churn.
    in_dims = [max(pi.partial_degree(v), qi.partial_degree(v), 0) + 1
               for v in others]

    def to_flat(c: MultiPoly) -> List[int]:
        strides = [0] * len(others)
        acc = 1
        for i in range(len(others) - 1, -1, -1):
            strides[i] = acc
            acc *= in_dims[i]
        flat = [0] * acc
        idx = {v: c.variables.index(v) for v in others if v in c.variables}
        for e, coeff in c.terms.items():
            pos = 0
            for i, v in enumerate(others):
                k = e[idx[v]] if v in idx else 0
                pos += k * strides[i]
            flat[pos] += int(coeff)
        return flat

    def collapse(flat: List[object], dims: List[int], x: int) -> List[object]:
        """Horner evaluation along axis 0 of a row-major flat array."""
        chunk = 1
        for d in dims[1:]:
            chunk *= d
        acc = flat[(dims[0] - 1) * chunk:dims[0] * chunk]
        for i in range(dims[0] - 2, -1, -1):
            base = i * chunk
            acc = [a * x + flat[base + j] for j, a in enumerate(acc)]
        return acc

    ac = [to_flat(c) for c in pi.coeff_list_in(var)]
    bc = [to_flat(c) for c in qi.coeff_list_in(var)]
    out_dims = [bounds[v] + 1 for v in others]

    def rec(acoeffs: List[List[object]], bcoeffs: List[List[object]],
            level: int) -> List[object]:
        if level == len(others):
            a = [c[0] for c in acoeffs]
            b = [c[0] for c in bcoeffs]
            return [_specialized_resultant(a, b, m, n)]
        dims = in_dims[level:]
        cnt = out_dims[level]
        values = []
        for x in range(cnt):
            av = [collapse(c, dims, x) for c in acoeffs]
            bv = [collapse(c, dims, x) for c in bcoeffs]
            values.append(rec(av, bv, level + 1))
        # Forward differences at the consecutive nodes 0..cnt-1: after the
        # loop, values[k] holds the k-th forward difference at 0, so the
        # Newton coefficient is values[k] / k!.  Staying in integers, we
        # expand F * p(x) with F = (cnt-1)! and divide out F at the end;
        # the division is exact because the resultant of integer
        # polynomials has integer coefficients.
        for lev in range(1, cnt):
            for i in range(cnt - 1, lev - 1, -1):
                values[i] = [a - b
                             for a, b in zip(values[i], values[i - 1])]
        fact = [1] * cnt
        for k in range(1, cnt):
            fact[k] = fact[k - 1] * k
        big = fact[cnt - 1]
        chunk = len(values[0])
        poly = [values[-1]]
        for i in range(cnt - 2, -1, -1):
            new = [[0] * chunk for _ in range(len(poly) + 1)]
            for k, c in enumerate(poly):
                row_up = new[k + 1]
                row = new[k]
                for j, val in enumerate(c):
                    row_up[j] += val
                    row[j] -= i * val
            mult = big // fact[i]
            for j, val in enumerate(values[i]):
                new[0][j] += mult * val
            poly = new
        flat = [0] * (cnt * chunk)
        for k, c in enumerate(poly):
            base = k * chunk
            for j, val in enumerate(c):
                flat[base + j] = val
        if big > 1:
            flat = [val // big for val in flat]
        return flat

    flat = rec(ac, bc, 0)
    scale = Fraction(1, dp**n * dq**m)
    strides = [0] * len(others)
    acc = 1
    for i in range(len(others) - 1, -1, -1):
        strides[i] = acc
        acc *= out_dims[i]
    terms = {}
    vindex = [variables.index(v) for v in others]
    for pos, val in enumerate(flat):
        if val == 0:
            continue
        e = [0] * len(variables)
        rem = pos
        for i, s in enumerate(strides):
            e[vindex[i]], rem = divmod(rem, s)
        c = Fraction(val) * scale
        if c != 0:
            terms[tuple(e)] = c
    if not terms:
        return MultiPoly.zero(variables)
    return MultiPoly(variables, terms)


#: Fixed specialization tuples used to measure true output degrees, and a
#: disjoint set used afterwards to verify the interpolated result.
_MEASURE_BASES: Tuple[Tuple[int, ...], ...] = (
    (2, 3, 5, 7, 11, 13, 17), (19, 23, 29, 31, 37, 41, 43),
    (47, 53, 59, 61, 67, 71, 73),
)
_VERIFY_BASES: Tuple[Tuple[int, ...], ...] = (
    (101, 103, 107, 109, 113, 127, 131), (211, 223, 227, 229, 233, 239, 241),
)


def _probe_degree(a: MultiPoly, b: MultiPoly, var: str, v: str,
                  bound: int, m: int, n: int) -> Optional[int]:
    """Degree in ``v`` of Res_var(a, b) for bivariate (var, v) inputs.

    Newton divided differences of specialized integer resultants; stops
    once four consecutive differences vanish (confirmed degree), capped by
    the rigorous bound.
    """
    da = a.denominator_lcm()
    db = b.denominator_lcm()
    ai = a.scale(da)
    bi = b.scale(db)
    nodes: List[int] = []
    coeffs: List[Fraction] = []
    zeros = 0
    for x in _interp_nodes(bound + 1):
        av = [int(c.constant_value()) for c in ai.eval_partial(v, x).coeff_list_in(var)]
        bv = [int(c.constant_value()) for c in bi.eval_partial(v, x).coeff_list_in(var)]
        val = Fraction(_specialized_resultant(av, bv, m, n))
        # incremental Newton coefficient
        acc = val
        prod = 1
        for node, c in zip(nodes, coeffs):
            acc -= c * prod
            prod *= x - node
        coeff = acc / prod if nodes else acc
        nodes.append(x)
        coeffs.append(coeff)
        if coeff == 0:
            zeros += 1
            if zeros >= 4 and len(coeffs) >= 5:
                break
        else:
            zeros = 0
    deg = max((i for i, c in enumerate(coeffs) if c != 0), default=0)
    return deg


def _measured_degree(p: MultiPoly, q: MultiPoly, var: str, v: str,
                     others: Sequence[str], m: int, n: int) -> Optional[int]:
    """True degree of Res_var(p, q) in ``v``, probed at fixed points."""
    rest = [u for u in others if u != v]
    bound = (n * max(p.partial_degree(v), 0) + m * max(q.partial_degree(v), 0))
    degs = []
    for base in _MEASURE_BASES:
        a, b = p, q
        for u, val in zip(rest, base):
            a = a.eval_partial(u, val)
            b = b.eval_partial(u, val)
        if a.partial_degree(var) != m or b.partial_degree(var) != n:
            continue
        d = _probe_degree(a.restrict((var, v)), b.restrict((var, v)),
                          var, v, bound, m, n)
        if d is None:
            return None
        degs.append(d)
        if len(degs) == 2:
            break
    if len(degs) < 2 or degs[0] != degs[1]:
        return None
    return max(degs)


def resultant_measured(p: MultiPoly, q: MultiPoly, var: str,
                       degree_bounds: Optional[dict] = None) -> MultiPoly:
    """Interpolation resultant with measured (not worst-case) degree caps.

    The per-variable degree of the output is probed on fixed specialization
    points; the interpolated result is then re-verified against direct
    specialized resultants on a disjoint point set, and the computation
    falls back to the rigorous worst-case bounds on any disagreement.
    Output is identical to ``resultant_fast``.
    """
    p, q = unify(p, q)
    m = p.partial_degree(var)
    n = q.partial_degree(var)
    others = [u for u in p.variables
              if u != var and (p.uses_variable(u) or q.uses_variable(u))]
    if len(others) < 2:
        return resultant_fast(p, q, var)
    bounds = {}
    for v in others:
        if degree_bounds and v in degree_bounds:
            bounds[v] = degree_bounds[v]
            continue
        d = _measured_degree(p, q, var, v, others, m, n)
        if d is None:
            return resultant_fast(p, q, var)
        bounds[v] = d
    result = resultant_fast(p, q, var, degree_bounds=bounds)
    for base in _VERIFY_BASES:
        assign = dict(zip(others, (Fraction(x) for x in base)))
        a, b = p, q
        for u, val in assign.items():
            a = a.eval_partial(u, val)
            b = b.eval_partial(u, val)
        if a.partial_degree(var) != m or b.partial_degree(var) != n:
            continue
        direct = resultant_fast(a.restrict((var,)), b.restrict((var,)), var)
        full = dict(assign)
        for u in result.variables:
            full.setdefault(u, Fraction(0))
        if result.evaluate(full) != direct.constant_value():
            return resultant_fast(p, q, var)
    return result


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def resultant(p: MultiPoly, q: MultiPoly, var: str, method: str = "sylvester") -> MultiPoly:
    """Resultant eliminating ``var``.

    ``sylvester`` is the sign reference; ``fast`` agrees with it exactly and
    ``bezout`` up to sign (the Bezout determinant is divided by the spurious
    leading-coefficient power when the degrees differ).
    """
    if p.is_zero or q.is_zero:
        raise ResultantError("resultant of the zero polynomial")
    p, q = unify(p, q)
    m = p.partial_degree(var)
    n = q.partial_degree(var)
    if m <= 0 or n <= 0:
        raise ResultantError(f"nothing to eliminate: degree-0 input in {var!r}")
    if method == "sylvester":
        det = bareiss_determinant(sylvester_matrix(p, q, var))
    elif method == "bezout":
        det = bareiss_determinant(bezout_matrix(p, q, var))
        if m != n:
            big, small = (p, n) if m > n else (q, m)
            lc = big.coeffs_in(var)[max(m, n)]
            det = det.exact_div(lc ** abs(m - n))
    elif method == "fast":
        det = resultant_fast(p, q, var)
    elif method == "measured":
        det = resultant_measured(p, q, var)
    else:
        raise ValueError(f"unknown resultant method {method!r}")
    return _drop_var(det, var)


def _drop_var(p: MultiPoly, var: str) -> MultiPoly:
    """Remove an eliminated variable from the declared set (it cannot occur)."""
    if var not in p.variables:
        return p
    if p.uses_variable(var):
        raise ValueError(f"variable {var!r} still present after elimination")
    remaining = tuple(v for v in p.variables if v != var)
    if not remaining:
        remaining = (var,)
        return p
    return p.restrict(remaining)


def rth_root(p: MultiPoly, r: int) -> MultiPoly:
    """Extract g with g^r = c*p (c a nonzero rational), g square-free.

    Uses gcds with the partial derivatives: for p = c*f^r with f square-free,
    gcd(p, all first partials) is f^(r-1) up to constant.  The final check
    g^r | p (up to constant) rejects non-perfect-powers.
    """
    if p.is_zero:
        raise ResultantError("zero polynomial has no rth root")
    if r < 1:
        raise ValueError("r must be a positive integer")
    if r == 1:
        return p.normalized()
    if p.is_constant:
        return MultiPoly.const(p.variables, 1)
    g: Optional[MultiPoly] = None
    for v in p.variables:
        if not p.uses_variable(v):
            continue
        d = p.derivative(v)
        g = d if g is None else multivar_gcd(g, d)
    g = multivar_gcd(p, g)
    try:
        f = p.exact_div(g).normalized()
    except ValueError as exc:
        raise ResultantError("not a perfect power") from exc
    fr = f**r
    c = Fraction(p.leading_coeff()) / Fraction(fr.leading_coeff())
    if fr.scale(c) != p:
        raise ResultantError("not a perfect power")
    return f

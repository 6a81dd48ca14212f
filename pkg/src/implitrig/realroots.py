"""Exact real-root machinery for univariate polynomials over Q.

Used to decide nonnegativity of the curvature-radius numerator: Sturm chains
isolate the real roots of the odd-multiplicity part, and sample points
between roots certify the sign table.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple


def _trim(p: List[Fraction]) -> List[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: List[Fraction]) -> int:
    return len(_trim(p)) - 1


def poly_eval(p: List[Fraction], x: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(p):
        total = total * x + c
    return total


def poly_derivative(p: List[Fraction]) -> List[Fraction]:
    return [c * k for k, c in enumerate(p)][1:]


def _poly_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = [Fraction(c) for c in _trim(a)]
    b = [Fraction(c) for c in _trim(b)]
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a
    while r and len(r) >= len(b):
        k = len(r) - len(b)
        c = r[-1] / b[-1]
        q[k] = c
        r = [rc - c * b[j - k] if 0 <= j - k < len(b) else rc for j, rc in enumerate(r)]
        r = _trim(r[:-1])
    return q, r


def poly_gcd_uni(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lc = a[-1]
    return [c / lc for c in a]


def squarefree_part_uni(p: List[Fraction]) -> List[Fraction]:
    p = _trim(p)
    if len(p) <= 1:
        return p
    g = poly_gcd_uni(p, poly_derivative(p))
    if len(g) <= 1:
        return p
    q, _ = _poly_divmod(p, g)
    return q


def odd_multiplicity_part(p: List[Fraction]) -> List[Fraction]:
    """Product of the irreducible factors of odd multiplicity.

    For p = c * prod f_i^{e_i}, this is prod over odd e_i of f_i: the locus
    where p changes sign.  Computed as p / gcd(p, d^2) with d = gcd(p, p')
    iterated; equivalently squarefree(p / squarefree-even part).  We use the
    identity: odd part = squarefree(p) / gcd(squarefree(p), p / squarefree-
    power...); the simple correct route is via repeated gcd:
    odd = p reduced by gcds so that factors of even multiplicity vanish.
    """
    p = _trim(p)
    if len(p) <= 1:
        return p
    # w = squarefree part, then whether each factor has odd multiplicity is
    # decided by dividing out squares: p / w^2 iterated.
    result = [Fraction(1)]
    current = p
    mult = 1
    while degree(current) > 0:
        g = poly_gcd_uni(current, poly_derivative(current))
        w, _ = _poly_divmod(current, g)  # product of distinct factors of current
        nxt = g
        # factors appearing in current but not in nxt have multiplicity
        # exactly `mult` in p
        gg = poly_gcd_uni(w, nxt if degree(nxt) > 0 else [Fraction(1)])
        exact, _ = _poly_divmod(w, gg)
        if mult % 2 == 1 and degree(exact) > 0:
            result = _poly_mul(result, exact)
        current = nxt
        mult += 1
    return result


def _poly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def sturm_chain(p: List[Fraction]) -> List[List[Fraction]]:
    chain = [_trim(p), _trim(poly_derivative(p))]
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes(chain: List[List[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_changes_at_inf(chain: List[List[Fraction]], positive: bool) -> int:
    signs = []
    for p in chain:
        lc = p[-1]
        s = 1 if lc > 0 else -1
        if not positive and (len(p) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: List[Fraction], lo: Optional[Fraction] = None,
                     hi: Optional[Fraction] = None) -> int:
    """Distinct real roots of square-free p in (lo, hi); None means infinity."""
    p = _trim(p)
    if degree(p) <= 0:
        return 0
    chain = sturm_chain(p)
    a = _sign_changes_at_inf(chain, False) if lo is None else _sign_changes(chain, lo)
    b = _sign_changes_at_inf(chain, True) if hi is None else _sign_changes(chain, hi)
    return a - b


def root_bound(p: List[Fraction]) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    p = _trim(p)
    lc = abs(p[-1])
    if len(p) == 1:
        return Fraction(1)
    return 1 + max(abs(c) / lc for c in p[:-1])


def isolate_real_roots(p: List[Fraction]) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint open isolating intervals for the real roots of square-free p."""
    p = _trim(p)
    if degree(p) <= 0:
        return []
    chain = sturm_chain(p)
    bound = root_bound(p)
    out: List[Tuple[Fraction, Fraction]] = []

    def go(lo: Fraction, hi: Fraction, n: int):
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        while poly_eval(p, mid) == 0:
            # nudge the split point off a root
            mid = (lo + mid) / 2
        left = _sign_changes(chain, lo) - _sign_changes(chain, mid)
        go(lo, mid, left)
        go(mid, hi, n - left)

    total = _sign_changes(chain, -bound) - _sign_changes(chain, bound)
    go(-bound, bound, total)
    return out


def nonnegative_on_reals(p: List[Fraction]) -> Tuple[bool, Optional[Fraction]]:
    """Decide p(t) >= 0 for all real t, exactly.

    Returns (True, None) or (False, witness) with p(witness) < 0.
    """
    p = _trim(p)
    if not p:
        return True, None
    if degree(p) == 0:
        return (True, None) if p[0] >= 0 else (False, Fraction(0))
    if degree(p) % 2 == 1 or p[-1] < 0:
        # sign change at infinity: walk outward until negative
        x = root_bound(p)
        for cand in (x, -x):
            if poly_eval(p, cand) < 0:
                return False, cand
        # cannot happen: beyond the root bound the sign is that of the
        # leading behavior
        raise AssertionError("leading behavior violated")
    odd = odd_multiplicity_part(p)
    if degree(odd) <= 0:
        return True, None
    roots = isolate_real_roots(odd)
    if not roots:
        return True, None
    # p changes sign exactly at the roots of the odd part; each isolating
    # interval straddles one of them and its endpoints are non-roots of p,
    # so one endpoint must be strictly negative
    chain = sturm_chain(odd)
    for lo, hi in roots:
        # shrink toward the sign-change root until an endpoint lands in the
        # strictly negative region beside it
        while True:
            for x in (lo, hi):
                if poly_eval(p, x) < 0:
                    return False, x
            mid = (lo + hi) / 2
            while poly_eval(odd, mid) == 0:
                mid = (lo + mid) / 2
            if _sign_changes(chain, lo) - _sign_changes(chain, mid) == 1:
                hi = mid
            else:
                lo = mid


def int_coeffs(p: List[Fraction]) -> List[int]:
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in p]

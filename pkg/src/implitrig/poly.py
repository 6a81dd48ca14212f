"""Sparse multivariate polynomials with exact rational coefficients.

``MultiPoly`` maps exponent vectors to coefficients over a named, ordered
variable set.  Coefficients are ``int`` when integral and ``Fraction``
otherwise; construction canonicalizes (no stored zeros, integral Fractions
demoted to int).  The canonical term order everywhere is graded lexicographic
over the declared variable order.

The degree of the zero polynomial is reported as -1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .rationals import GaussianRational

Exponents = Tuple[int, ...]
Coeff = Union[int, Fraction]


def _canon_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(exps: Exponents) -> Tuple[int, Exponents]:
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial over Q in named variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, Coeff]):
        variables = tuple(variables)
        canon: Dict[Exponents, Coeff] = {}
        nvars = len(variables)
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise ValueError(
                    f"exponent vector {exps} does not match variables {variables}"
                )
            c = _canon_coeff(c)
            if c != 0:
                canon[tuple(exps)] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, *args):
        raise AttributeError("MultiPoly is immutable")

    # ---- constructors -------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str]) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def const(variables: Sequence[str], value: Coeff) -> "MultiPoly":
        variables = tuple(variables)
        if value == 0:
            return MultiPoly(variables, {})
        return MultiPoly(variables, {(0,) * len(variables): value})

    @staticmethod
    def var(name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        idx = variables.index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return MultiPoly(variables, {exps: 1})

    @staticmethod
    def univariate(name: str, coeffs: Sequence[Coeff]) -> "MultiPoly":
        """Build a univariate polynomial from coefficients, index = power."""
        return MultiPoly((name,), {(i,): c for i, c in enumerate(coeffs)})

    # ---- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Coeff:
        if self.is_zero:
            return 0
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms)

    def partial_degree(self, var: str) -> int:
        if self.is_zero:
            return -1
        i = self.variables.index(var)
        return max(e[i] for e in self.terms)

    def leading_exponents(self) -> Exponents:
        """Leading monomial under graded lex over the declared order."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grlex_key)

    def leading_coeff(self) -> Coeff:
        return self.terms[self.leading_exponents()]

    def uses_variable(self, var: str) -> bool:
        i = self.variables.index(var)
        return any(e[i] for e in self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = unify(self, other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return not self.is_zero

    # ---- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = unify(self, other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            nc = terms.get(e, 0) + c
            if nc == 0:
                terms.pop(e, None)
            else:
                terms[e] = nc
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = unify(self, other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms: Dict[Exponents, Coeff] = {}
        get = terms.get
        for e2, c2 in b.terms.items():
            for e1, c1 in a.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                nc = get(key, 0) + c1 * c2
                if nc == 0:
                    terms.pop(key, None)
                else:
                    terms[key] = nc
        return MultiPoly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: Coeff) -> "MultiPoly":
        c = Fraction(c)
        if c == 0:
            return MultiPoly.zero(self.variables)
        return MultiPoly(self.variables, {e: v * c for e, v in self.terms.items()})

    # ---- calculus / evaluation ---------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = self.variables.index(var)
        terms: Dict[Exponents, Coeff] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
            terms[ne] = terms.get(ne, 0) + c * e[i]
        return MultiPoly(self.variables, terms)

    def evaluate(self, point: Mapping[str, object]):
        """Exact evaluation; values may be int/Fraction or GaussianRational.

        Every variable must be assigned.  Returns a Fraction unless a
        GaussianRational value was supplied (then a GaussianRational).
        """
        values = []
        for v in self.variables:
            if v not in point:
                raise ValueError(f"missing assignment for variable {v!r}")
            values.append(point[v])
        gaussian = any(isinstance(x, GaussianRational) for x in values)
        total = GaussianRational.of(0) if gaussian else Fraction(0)
        for e, c in self.terms.items():
            term = c if not gaussian else GaussianRational.of(Fraction(c)) * 1
            for x, k in zip(values, e):
                if k:
                    term = term * x**k
            total = total + term
        if not gaussian and not isinstance(total, Fraction):
            total = Fraction(total)
        return total

    def eval_partial(self, var: str, value: Coeff) -> "MultiPoly":
        """Substitute a rational value for one variable (variable is kept)."""
        i = self.variables.index(var)
        terms: Dict[Exponents, Coeff] = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1 :]
            nc = terms.get(ne, 0) + (c * value**k if k else c)
            if nc == 0:
                terms.pop(ne, None)
            else:
                terms[ne] = nc
        return MultiPoly(self.variables, terms)

    def subs(self, var: str, replacement: "MultiPoly") -> "MultiPoly":
        """Substitute a polynomial for one variable (Horner in that variable)."""
        i = self.variables.index(var)
        by_power: Dict[int, Dict[Exponents, Coeff]] = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1 :]
            by_power.setdefault(e[i], {})[ne] = c
        if not by_power:
            return self
        result = MultiPoly.zero(self.variables)
        for k in sorted(by_power, reverse=True):
            layer = MultiPoly(self.variables, by_power[k])
            if result.is_zero:
                result = layer
                prev = k
                continue
            result = result * replacement ** (prev - k) + layer
            prev = k
        if prev:
            result = result * replacement**prev
        return result

    # ---- structure ----------------------------------------------------

    def coeffs_in(self, var: str) -> Dict[int, "MultiPoly"]:
        """Collect as a polynomial in ``var``: power -> coefficient poly.

        Coefficient polynomials keep the full variable tuple (exponent of
        ``var`` forced to zero).
        """
        i = self.variables.index(var)
        out: Dict[int, Dict[Exponents, Coeff]] = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1 :]
            out.setdefault(e[i], {})[ne] = c
        return {k: MultiPoly(self.variables, t) for k, t in out.items()}

    def coeff_list_in(self, var: str) -> list:
        """Dense coefficient list in ``var`` (index = power), low to high."""
        d = self.partial_degree(var)
        if d < 0:
            return []
        by = self.coeffs_in(var)
        zero = MultiPoly.zero(self.variables)
        return [by.get(k, zero) for k in range(d + 1)]

    def restrict(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over a different variable tuple (must cover support)."""
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        terms: Dict[Exponents, Coeff] = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for v, k in zip(self.variables, e):
                if k:
                    if v not in index:
                        raise ValueError(f"variable {v!r} in support, not in target")
                    ne[index[v]] = k
            terms[tuple(ne)] = terms.get(tuple(ne), 0) + c
        return MultiPoly(variables, terms)

    # ---- division -----------------------------------------------------

    def divmod_exact(self, divisor: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by one divisor under graded lex.

        Returns (quotient, remainder) with the usual property that no
        remainder term is divisible by the divisor's leading monomial.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        a, b = unify(self, divisor)
        lead_b = b.leading_exponents()
        lc_b = Fraction(b.terms[lead_b])
        quo: Dict[Exponents, Coeff] = {}
        rem: Dict[Exponents, Coeff] = {}
        work = dict(a.terms)
        while work:
            e = max(work, key=grlex_key)
            c = work[e]
            diff = tuple(x - y for x, y in zip(e, lead_b))
            if any(d < 0 for d in diff):
                rem[e] = c
                del work[e]
                continue
            q = Fraction(c) / lc_b
            quo[diff] = quo.get(diff, 0) + q
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(diff, eb))
                nc = work.get(key, 0) - q * cb
                if nc == 0:
                    work.pop(key, None)
                else:
                    work[key] = nc
        return MultiPoly(a.variables, quo), MultiPoly(a.variables, rem)

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        quo, rem = self.divmod_exact(divisor)
        if not rem.is_zero:
            raise ValueError("division is not exact")
        return quo

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    # ---- normalization ------------------------------------------------

    def denominator_lcm(self) -> int:
        result = 1
        for c in self.terms.values():
            d = c.denominator if isinstance(c, Fraction) else 1
            result = result * d // gcd(result, d)
        return result

    def integer_content(self) -> Fraction:
        """Content as a rational: gcd of numerators / lcm of denominators."""
        if self.is_zero:
            return Fraction(0)
        den = self.denominator_lcm()
        num = reduce(gcd, (abs((c * den).numerator if isinstance(c, Fraction) else c * den) for c in self.terms.values()))
        return Fraction(num, den)

    def normalized(self) -> "MultiPoly":
        """Canonical scalar normalization.

        Integer coefficients, content 1, positive leading coefficient under
        graded lex over the declared variable order.
        """
        if self.is_zero:
            return self
        scale = 1 / self.integer_content()
        p = self.scale(scale)
        if p.leading_coeff() < 0:
            p = -p
        return p

    # ---- text form -----------------------------------------------------

    def canonical_text(self) -> str:
        """Canonical text: graded-lex descending terms, explicit ``^`` powers."""
        if self.is_zero:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for v, k in zip(self.variables, e):
                if k == 1:
                    factors.append(v)
                elif k > 1:
                    factors.append(f"{v}^{k}")
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([str(mag)] + factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.variables}, {self.canonical_text()})"


def unify(a: MultiPoly, b: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    """Bring two polynomials over a common variable tuple.

    If the variable tuples already match, this is free.  Otherwise the merged
    order is a's variables followed by b's new ones.
    """
    if a.variables == b.variables:
        return a, b
    merged = list(a.variables)
    for v in b.variables:
        if v not in merged:
            merged.append(v)
    return a.restrict(merged), b.restrict(merged)


def poly_sum(polys: Iterable[MultiPoly], variables: Sequence[str]) -> MultiPoly:
    total = MultiPoly.zero(variables)
    for p in polys:
        total = total + p
    return total

"""Exact scalar and series arithmetic.

Scalars are :class:`fractions.Fraction` throughout.  The module provides

* :class:`Poly` -- dense-free univariate polynomials over Q,
* :class:`RationalFunction` -- reduced quotients of polys, monic denominator,
* :class:`LaurentExpansion` -- truncated Laurent series at a rational point,
* :class:`TruncatedSeries` -- polynomials in ``s, t, p_1..p_M`` with degree caps.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational",
    "Poly",
    "RationalFunction",
    "LaurentExpansion",
    "TruncatedSeries",
    "poly_eval_shift",
    "laurent_of_rational",
    "series_log",
    "series_exp",
    "series_apply_cut_join",
]


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Univariate polynomial with rational coefficients.

    Stored sparsely as ``{degree: coefficient}`` with no zero entries.  The
    zero polynomial has degree ``-1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[int, Number], Iterable[Number], None] = None):
        c: Dict[int, Fraction] = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, Mapping):
            for k, v in coeffs.items():
                if k < 0:
                    raise ValueError("negative degree in Poly")
                v = Fraction(v)
                if v:
                    c[k] = c.get(k, Fraction(0)) + v
        else:
            for k, v in enumerate(coeffs):
                v = Fraction(v)
                if v:
                    c[k] = v
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def x(cls) -> "Poly":
        return cls({1: 1})

    @classmethod
    def const(cls, a: Number) -> "Poly":
        return cls({0: a})

    @property
    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def coeff(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def coeffs(self) -> List[Fraction]:
        """Dense coefficient list, constant term first."""
        return [self.coeff(k) for k in range(self.degree + 1)]

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    def leading(self) -> Fraction:
        return self._c[self.degree] if self._c else Fraction(0)

    def valuation(self) -> int:
        """Multiplicity of the root 0; -1 for the zero polynomial."""
        return min(self._c) if self._c else -1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def __repr__(self) -> str:
        if not self._c:
            return "Poly(0)"
        terms = []
        for k, v in sorted(self._c.items(), reverse=True):
            if k == 0:
                terms.append(str(v))
            elif k == 1:
                terms.append(f"{v}*x")
            else:
                terms.append(f"{v}*x^{k}")
        return "Poly(" + " + ".join(terms) + ")"

    def __neg__(self) -> "Poly":
        return Poly({k: -v for k, v in self._c.items()})

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, Fraction(0)) + v
        return Poly(c)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Poly({k: v * other for k, v in self._c.items()})
        c: Dict[int, Fraction] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, Fraction(0)) + a * b
        return Poly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of Poly")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, a):
        """Evaluate by Horner's rule; ``a`` may be a scalar or a Poly."""
        result = Fraction(0) if isinstance(a, (int, Fraction)) else Poly()
        for k in range(self.degree, -1, -1):
            result = result * a + self.coeff(k)
        return result

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self._c)
        q: Dict[int, Fraction] = {}
        dd, lc = other.degree, other.leading()
        while rem:
            top = max(rem)
            if top < dd:
                break
            f = rem[top] / lc
            q[top - dd] = f
            for k, v in other._c.items():
                kk = k + top - dd
                nv = rem.get(kk, Fraction(0)) - f * v
                if nv:
                    rem[kk] = nv
                else:
                    rem.pop(kk, None)
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.leading())

    def derivative(self) -> "Poly":
        return Poly({k - 1: k * v for k, v in self._c.items() if k})

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by ``x**k`` (``k`` may be negative if divisible)."""
        if self._c and min(self._c) + k < 0:
            raise ValueError("shift would produce negative degree")
        return Poly({d + k: v for d, v in self._c.items()})


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_eval_shift(p: Poly, a: Number) -> Poly:
    """Return ``q`` with ``q(x) = p(x + a)``."""
    a = Fraction(a)
    out: Dict[int, Fraction] = {}
    for k, v in p.items():
        # (x + a)^k = sum_j C(k, j) a^(k-j) x^j
        apow = Fraction(1)
        for j in range(k, -1, -1):
            out[j] = out.get(j, Fraction(0)) + v * comb(k, j) * apow
            apow *= a
    return Poly(out)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

class RationalFunction:
    """Reduced quotient ``num / den`` of polynomials with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, Number], den: Union[Poly, Number, None] = None):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.leading()
        self.num, self.den = num * (1 / lc), den * (1 / lc)

    @classmethod
    def z(cls) -> "RationalFunction":
        return cls(Poly.x())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r} / {self.den!r})"

    @staticmethod
    def _lift(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = self._lift(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._lift(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._lift(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._lift(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._lift(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n >= 0:
            return RationalFunction(self.num ** n, self.den ** n)
        return RationalFunction(self.den ** (-n), self.num ** (-n))

    def __call__(self, a: Number) -> Fraction:
        d = self.den(Fraction(a))
        if d == 0:
            raise ZeroDivisionError(f"pole at {a}")
        return self.num(Fraction(a)) / d

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """Return ``self(inner(z))``."""
        n = max(self.num.degree, self.den.degree, 0)
        g, h = inner.num, inner.den
        gpow = [Poly.const(1)]
        hpow = [Poly.const(1)]
        for _ in range(n):
            gpow.append(gpow[-1] * g)
            hpow.append(hpow[-1] * h)

        def homog(p: Poly) -> Poly:
            out = Poly()
            for k, v in p.items():
                out = out + gpow[k] * hpow[n - k] * v
            return out

        return RationalFunction(homog(self.num), homog(self.den))

    def order_at(self, a: Number) -> int:
        """Zero order (positive) or minus pole order (negative) at ``z = a``."""
        if self.num.is_zero():
            raise ValueError("order of the zero function is undefined")
        return _root_multiplicity(self.num, a) - _root_multiplicity(self.den, a)


def _root_multiplicity(p: Poly, a: Number) -> int:
    return poly_eval_shift(p, a).valuation()


# ---------------------------------------------------------------------------
# Laurent expansions
# ---------------------------------------------------------------------------

class LaurentExpansion:
    """Truncated Laurent series ``sum_k c_k u^k`` with ``u = z - center``.

    ``coefficients[i]`` is the coefficient of ``u**(lowest_order + i)``;
    the series is known exactly through ``u**truncation_order`` and is
    ``O(u**(truncation_order + 1))`` beyond.  The stored list always covers
    ``lowest_order..truncation_order``.
    """

    __slots__ = ("center", "lowest_order", "coefficients", "truncation_order")

    def __init__(self, center: Number, lowest_order: int, coefficients: Iterable[Number],
                 truncation_order: int):
        coeffs = [Fraction(c) for c in coefficients]
        n = truncation_order - lowest_order + 1
        if n <= 0:
            coeffs, lowest_order = [], truncation_order + 1
        else:
            coeffs = (coeffs + [Fraction(0)] * n)[:n]
            # normalize so that the leading stored coefficient is nonzero
            i = 0
            while i < len(coeffs) and coeffs[i] == 0:
                i += 1
            if i == len(coeffs):
                coeffs, lowest_order = [], truncation_order + 1
            else:
                coeffs, lowest_order = coeffs[i:], lowest_order + i
        self.center = Fraction(center)
        self.lowest_order = lowest_order
        self.coefficients = coeffs
        self.truncation_order = truncation_order

    @classmethod
    def monomial(cls, k: int, truncation_order: int, coeff: Number = 1, center: Number = 2):
        return cls(center, k, [coeff], truncation_order)

    @classmethod
    def from_poly(cls, p: Poly, truncation_order: int, center: Number = 2, shift: int = 0):
        """``u**shift * p(u)`` truncated."""
        return cls(center, shift, p.coeffs() or [0], truncation_order)

    def is_zero(self) -> bool:
        """True when identically zero through the truncation order."""
        return not self.coefficients

    def coefficient(self, k: int) -> Fraction:
        if k > self.truncation_order:
            raise ValueError(f"coefficient u^{k} lies beyond truncation order {self.truncation_order}")
        i = k - self.lowest_order
        if i < 0:
            return Fraction(0)
        return self.coefficients[i]

    def residue(self) -> Fraction:
        return self.coefficient(-1)

    def principal_part(self) -> Dict[int, Fraction]:
        return {k: c for k, c in self.terms() if k < 0}

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        for i, c in enumerate(self.coefficients):
            if c:
                yield self.lowest_order + i, c

    def __repr__(self) -> str:
        body = " + ".join(f"({c})u^{k}" for k, c in self.terms()) or "0"
        return f"Laurent[{self.center}]({body} + O(u^{self.truncation_order + 1}))"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentExpansion):
            return NotImplemented
        return (self.center == other.center and self.truncation_order == other.truncation_order
                and self.lowest_order == other.lowest_order
                and self.coefficients == other.coefficients)

    def truncate(self, order: int) -> "LaurentExpansion":
        return LaurentExpansion(self.center, self.lowest_order, self.coefficients,
                                min(order, self.truncation_order))

    def agrees_with(self, other: "LaurentExpansion") -> bool:
        """Equality on the common valid range."""
        t = min(self.truncation_order, other.truncation_order)
        return self.truncate(t) == other.truncate(t)

    def _check(self, other: "LaurentExpansion") -> None:
        if self.center != other.center:
            raise ValueError("Laurent expansions at different centers")

    def __neg__(self) -> "LaurentExpansion":
        return LaurentExpansion(self.center, self.lowest_order, [-c for c in self.coefficients],
                                self.truncation_order)

    def __add__(self, other) -> "LaurentExpansion":
        if isinstance(other, (int, Fraction)):
            other = LaurentExpansion(self.center, 0, [other], self.truncation_order)
        self._check(other)
        t = min(self.truncation_order, other.truncation_order)
        lo = min(self.lowest_order, other.lowest_order)
        out = [Fraction(0)] * max(t - lo + 1, 0)
        for src in (self, other):
            for i, c in enumerate(src.coefficients):
                k = src.lowest_order + i - lo
                if k < len(out):
                    out[k] += c
        return LaurentExpansion(self.center, lo, out, t)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentExpansion":
        return self + (-other)

    def __mul__(self, other) -> "LaurentExpansion":
        if isinstance(other, (int, Fraction)):
            return LaurentExpansion(self.center, self.lowest_order,
                                    [c * other for c in self.coefficients], self.truncation_order)
        self._check(other)
        # an identically-zero factor still carries its own O(u^(t+1)) error
        a_lo = self.lowest_order if self.coefficients else self.truncation_order + 1
        b_lo = other.lowest_order if other.coefficients else other.truncation_order + 1
        t = min(self.truncation_order + b_lo, other.truncation_order + a_lo)
        lo = a_lo + b_lo
        n = t - lo + 1
        if n <= 0 or not self.coefficients or not other.coefficients:
            return LaurentExpansion(self.center, 0, [], t)
        out = [Fraction(0)] * n
        bc = other.coefficients
        for i, a in enumerate(self.coefficients):
            if not a or i >= n:
                continue
            for j in range(min(len(bc), n - i)):
                b = bc[j]
                if b:
                    out[i + j] += a * b
        return LaurentExpansion(self.center, lo, out, t)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentExpansion":
        if not self.coefficients:
            raise ZeroDivisionError("cannot invert a Laurent expansion with zero leading coefficient")
        lead = self.coefficients[0]
        v = self.lowest_order
        # relative precision of the input is (truncation - v)
        n = self.truncation_order - v + 1
        a = self.coefficients
        b = [Fraction(0)] * n
        inv_lead = 1 / lead
        b[0] = inv_lead
        for m in range(1, n):
            s = Fraction(0)
            for k in range(1, min(m, len(a) - 1) + 1):
                if a[k]:
                    s += a[k] * b[m - k]
            b[m] = -s * inv_lead
        return LaurentExpansion(self.center, -v, b, -v + n - 1)

    def __truediv__(self, other) -> "LaurentExpansion":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, n: int) -> "LaurentExpansion":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return LaurentExpansion(self.center, 0, [1], self.truncation_order - self.lowest_order)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result


def laurent_of_rational(f: RationalFunction, center: Number, order: int) -> LaurentExpansion:
    """Laurent expansion of ``f`` at ``z = center`` through ``u**order``."""
    num = poly_eval_shift(f.num, center)
    den = poly_eval_shift(f.den, center)
    if den.is_zero():
        raise ZeroDivisionError("denominator vanishes identically")
    if num.is_zero():
        return LaurentExpansion(center, 0, [], order)
    a, b = num.valuation(), den.valuation()
    low = a - b
    n = order - low + 1
    if n <= 0:
        return LaurentExpansion(center, 0, [], order)
    ncoef = num.shift_degree(-a).coeffs()
    dcoef = den.shift_degree(-b).coeffs()
    # power-series division ncoef / dcoef through n terms
    out = [Fraction(0)] * n
    inv0 = 1 / dcoef[0]
    for m in range(n):
        s = ncoef[m] if m < len(ncoef) else Fraction(0)
        for k in range(1, min(m, len(dcoef) - 1) + 1):
            s -= dcoef[k] * out[m - k]
        out[m] = s * inv0
    return LaurentExpansion(center, low, out, order)


# ---------------------------------------------------------------------------
# Truncated series in s, t, p_1..p_M
# ---------------------------------------------------------------------------

Monomial = Tuple[int, ...]  # (s_exp, t_exp, e_1, ..., e_M)


class TruncatedSeries:
    """Polynomial in ``s, t, p_1..p_M`` truncated to degree caps.

    Monomials are tuples ``(s, t, e_1, ..., e_M)``.  Every stored monomial
    satisfies ``s <= d_max``, ``t <= b_max`` and ``sum i*e_i <= d_max``.  An
    optional ``support`` vector further bounds each ``e_i`` componentwise; it
    is used to compute single coefficients of ``log Z`` without expanding the
    full series (coefficients of divisors of a monomial are closed under
    products, so the restriction commutes with ``log``).
    """

    __slots__ = ("M", "d_max", "b_max", "support", "terms")

    def __init__(self, M: int, d_max: int, b_max: int,
                 terms: Optional[Mapping[Monomial, Number]] = None,
                 support: Optional[Tuple[int, ...]] = None):
        if M < 1:
            raise ValueError("variable budget M must be positive")
        if support is not None and len(support) != M:
            raise ValueError("support vector length must equal M")
        self.M, self.d_max, self.b_max, self.support = M, d_max, b_max, support
        self.terms: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                self._accumulate(tuple(mono), Fraction(c))

    def _admissible(self, mono: Monomial) -> bool:
        s, t, e = mono[0], mono[1], mono[2:]
        if len(e) != self.M:
            raise ValueError(f"monomial {mono} does not match variable budget {self.M}")
        if s > self.d_max or t > self.b_max:
            return False
        if sum((i + 1) * x for i, x in enumerate(e)) > self.d_max:
            return False
        if self.support is not None and any(x > m for x, m in zip(e, self.support)):
            return False
        return True

    def _accumulate(self, mono: Monomial, c: Fraction) -> None:
        if not c or not self._admissible(mono):
            return
        v = self.terms.get(mono, Fraction(0)) + c
        if v:
            self.terms[mono] = v
        else:
            del self.terms[mono]

    def empty_like(self) -> "TruncatedSeries":
        return TruncatedSeries(self.M, self.d_max, self.b_max, support=self.support)

    @classmethod
    def one(cls, M: int, d_max: int, b_max: int, support=None) -> "TruncatedSeries":
        return cls(M, d_max, b_max, {(0, 0) + (0,) * M: 1}, support=support)

    def monomial(self, s: int = 0, t: int = 0, p: Mapping[int, int] | None = None) -> Monomial:
        e = [0] * self.M
        for i, k in (p or {}).items():
            e[i - 1] += k
        return (s, t) + tuple(e)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0, 0) + (0,) * self.M)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order on (s, t, p-exponents)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"TruncatedSeries(M={self.M}, caps=({self.d_max},{self.b_max}), {len(self.terms)} terms)"

    def _compatible(self, other: "TruncatedSeries") -> None:
        if (self.M, self.d_max, self.b_max, self.support) != (other.M, other.d_max, other.b_max, other.support):
            raise ValueError("truncated series with different budgets")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._compatible(other)
        out = TruncatedSeries(self.M, self.d_max, self.b_max, self.terms, self.support)
        for m, c in other.terms.items():
            out._accumulate(m, c)
        return out

    def __neg__(self) -> "TruncatedSeries":
        return self * Fraction(-1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        out = self.empty_like()
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other:
                out.terms = {m: c * other for m, c in self.terms.items()}
            return out
        self._compatible(other)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out._accumulate(tuple(a + b for a, b in zip(m1, m2)), c1 * c2)
        return out

    __rmul__ = __mul__

    def map_monomials(self, fn) -> "TruncatedSeries":
        """Apply ``fn(mono, coeff) -> iterable of (mono, coeff)`` termwise."""
        out = self.empty_like()
        for m, c in self.terms.items():
            for m2, c2 in fn(m, c):
                out._accumulate(m2, c2)
        return out

    def s_euler(self) -> "TruncatedSeries":
        """``s * d/ds``."""
        return self.map_monomials(lambda m, c: [(m, c * m[0])])

    def times_s_p1(self) -> "TruncatedSeries":
        return self.map_monomials(lambda m, c: [((m[0] + 1, m[1], m[2] + 1) + m[3:], c)])

    def times_t(self) -> "TruncatedSeries":
        return self.map_monomials(lambda m, c: [((m[0], m[1] + 1) + m[2:], c)])

    def restrict(self, s_max: int, t_max: int) -> "TruncatedSeries":
        out = self.empty_like()
        out.terms = {m: c for m, c in self.terms.items() if m[0] <= s_max and m[1] <= t_max}
        return out

    def with_caps(self, d_max: int, b_max: int) -> "TruncatedSeries":
        return TruncatedSeries(self.M, d_max, b_max, self.terms, self.support)


def series_log(Z: TruncatedSeries) -> TruncatedSeries:
    """``log Z`` for ``Z`` with constant term 1, truncated to Z's caps."""
    if Z.constant_term() != 1:
        raise ValueError("series_log requires constant term 1")
    one = TruncatedSeries.one(Z.M, Z.d_max, Z.b_max, Z.support)
    w = Z - one
    out = Z.empty_like()
    power = w
    k = 1
    while not power.is_zero():
        out = out + power * Fraction((-1) ** (k + 1), k)
        power = power * w
        k += 1
    return out


def series_exp(F: TruncatedSeries) -> TruncatedSeries:
    """``exp F`` for ``F`` with zero constant term."""
    if F.constant_term() != 0:
        raise ValueError("series_exp requires zero constant term")
    out = TruncatedSeries.one(F.M, F.d_max, F.b_max, F.support)
    term = out
    k = 1
    while True:
        term = term * F * Fraction(1, k)
        if term.is_zero():
            return out
        out = out + term
        k += 1


def series_apply_cut_join(F: TruncatedSeries) -> TruncatedSeries:
    """Apply ``1/2 sum_{i,j} [(i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j]``."""
    M = F.M

    def op(mono: Monomial, c: Fraction):
        s, t, e = mono[0], mono[1], list(mono[2:])
        # cut: p_{k} -> p_i p_j with i + j = k
        for k in range(2, M + 1):
            ek = e[k - 1]
            if not ek:
                continue
            for i in range(1, k):
                j = k - i
                e2 = list(e)
                e2[k - 1] -= 1
                e2[i - 1] += 1
                e2[j - 1] += 1
                yield (s, t) + tuple(e2), c * Fraction(k * ek, 2)
        # join: p_i p_j -> p_{i+j}
        for i in range(1, M + 1):
            ei = e[i - 1]
            if not ei:
                continue
            for j in range(1, M + 1):
                ej = e[j - 1]
                if not ej:
                    continue
                if i + j > M:
                    # weight i + j exceeds the budget; dropped by truncation
                    continue
                mult = ei * (ej - 1) if i == j else ei * ej
                if not mult:
                    continue
                e2 = list(e)
                e2[i - 1] -= 1
                e2[j - 1] -= 1
                e2[i + j - 1] += 1
                yield (s, t) + tuple(e2), c * Fraction(i * j * mult, 2)

    return F.map_monomials(op)

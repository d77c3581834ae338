"""Residue recursion for omega_{g,n} on the monotone curve.

Every stable omega_{g,n} is stored in the pole basis.  One recursion step
expands the recursion variable as ``z = 2 + u`` and its deck image as
``sigma(z) = 2 + v(u)``, keeps spectator variables as pole-basis indices,
and expands the kernel in ``z_0`` as

    1/(z_0 - sigma(z)) - 1/(z_0 - z) = sum_{m>=1} (v^m - u^m) / (z_0 - 2)^{m+1},

so the residue lands directly on the pole basis in ``z_0``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, MutableMapping, Optional, Tuple

from ..algebra import LaurentExpansion, RationalFunction, laurent_of_rational
from .curve import monotone_curve
from .forms import PoleBasisForm, pole_bound

__all__ = [
    "TruncationError",
    "KERNEL_PREFACTOR",
    "working_order",
    "kernel_denominator",
    "KernelExpansion",
    "recursion_kernel",
    "tr_step",
    "compute_omega",
    "is_stable",
]

# Fixes the orientation and normalization of the kernel
#   K = c * [1/(z0 - sigma(z)) - 1/(z0 - z)] dz0 / ((y(sigma z) - y(z)) dx(z));
# c = -1/2 is the value for which the loop equation holds and the
# x-expansion reproduces the Hurwitz numbers.
KERNEL_PREFACTOR = Fraction(-1, 2)

Key = Tuple[int, ...]


class TruncationError(ArithmeticError):
    """The Laurent working order is too small for an exact residue."""


def is_stable(g: int, n: int) -> bool:
    return 2 * g - 2 + n > 0


def working_order(g: int, n: int) -> int:
    return 6 * g + 2 * n + 8


def kernel_denominator() -> RationalFunction:
    """dz-coefficient of ``(y(sigma z) - y(z)) dx(z)``."""
    c = monotone_curve()
    return (c.y.compose(c.deck) - c.y) * c.dx


class _Local:
    """Cached Laurent data at z = 2 for one working order."""

    def __init__(self, order: int):
        c = monotone_curve()
        self.order = order
        self.z = RationalFunction.z()
        self.sigma = c.deck
        self.dsigma = c.deck.derivative()
        self.denominator = kernel_denominator()
        self._cache: Dict[Tuple[str, int], LaurentExpansion] = {}

    def expand(self, f: RationalFunction) -> LaurentExpansion:
        return laurent_of_rational(f, 2, self.order)

    def sigma_pole(self, k: int) -> LaurentExpansion:
        """``sigma'(z) (sigma(z) - 2)^(-k)``; ``k`` may be negative."""
        key = ("sp", k)
        if key not in self._cache:
            self._cache[key] = self.expand(self.dsigma * (self.sigma - 2) ** (-k))
        return self._cache[key]

    def kernel_coefficient(self, m: int) -> LaurentExpansion:
        """u-expansion multiplying ``dz0/(z0 - 2)^(m+1)``, prefactor included."""
        key = ("K", m)
        if key not in self._cache:
            num = (self.sigma - 2) ** m - (self.z - 2) ** m
            self._cache[key] = self.expand(num / self.denominator * KERNEL_PREFACTOR)
        return self._cache[key]

    def bergman_diagonal(self) -> LaurentExpansion:
        """``sigma'(z) / (z - sigma(z))^2``, i.e. omega_{0,2}(z, sigma z)/dz^2."""
        key = ("B", 0)
        if key not in self._cache:
            self._cache[key] = self.expand(self.dsigma / (self.z - self.sigma) ** 2)
        return self._cache[key]

    def monomial(self, k: int, c: Fraction = Fraction(1)) -> LaurentExpansion:
        return LaurentExpansion(2, k, [c], self.order)


class _Family:
    """Laurent expansions in u indexed by spectator pole indices.

    Keys are n-tuples; 0 marks a spectator slot not yet occupied.  All
    entries are valid through ``trunc``, and keys absent from ``terms``
    are O(u^(trunc+1)).
    """

    __slots__ = ("terms", "trunc")

    def __init__(self, terms: Dict[Key, LaurentExpansion], trunc: int):
        self.terms = terms
        self.trunc = trunc

    @property
    def low(self) -> int:
        lows = [s.lowest_order for s in self.terms.values() if not s.is_zero()]
        return min(lows) if lows else self.trunc + 1

    def __mul__(self, other: "_Family") -> "_Family":
        trunc = min(self.trunc + other.low, other.trunc + self.low)
        out: Dict[Key, LaurentExpansion] = {}
        for ka, sa in self.terms.items():
            for kb, sb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                prod = sa * sb
                out[key] = out[key] + prod if key in out else prod
        return _Family(out, trunc)

    def __add__(self, other: "_Family") -> "_Family":
        out = dict(self.terms)
        for k, s in other.terms.items():
            out[k] = out[k] + s if k in out else s
        return _Family(out, min(self.trunc, other.trunc))


def _place(n: int, positions: Iterable[int], values: Iterable[int]) -> Key:
    key = [0] * n
    for p, v in zip(positions, values):
        key[p] = v
    return tuple(key)


def _stable_at_z(form: PoleBasisForm, positions: Tuple[int, ...], n: int, loc: _Local) -> _Family:
    terms: Dict[Key, LaurentExpansion] = {}
    for k, c in form.coefficients.items():
        key = _place(n, positions, k[1:])
        s = loc.monomial(-k[0], c)
        terms[key] = terms[key] + s if key in terms else s
    return _Family(terms, loc.order)


def _stable_at_sigma(form: PoleBasisForm, positions: Tuple[int, ...], n: int, loc: _Local) -> _Family:
    terms: Dict[Key, LaurentExpansion] = {}
    for k, c in form.coefficients.items():
        key = _place(n, positions, k[1:])
        s = loc.sigma_pole(k[0]) * c
        terms[key] = terms[key] + s if key in terms else s
    return _Family(terms, loc.order)


def _bergman_at_z(pos: int, n: int, loc: _Local) -> _Family:
    # dz dz_j / (z - z_j)^2 = sum_m (m+1) u^m dz_j / (z_j - 2)^(m+2)
    terms = {_place(n, (pos,), (m + 2,)): loc.monomial(m, Fraction(m + 1))
             for m in range(loc.order + 1)}
    return _Family(terms, loc.order)


def _bergman_at_sigma(pos: int, n: int, loc: _Local) -> _Family:
    terms = {_place(n, (pos,), (m + 2,)): loc.sigma_pole(-m) * (m + 1)
             for m in range(loc.order + 1)}
    return _Family(terms, loc.order)


def _factor(h: int, subset: Tuple[int, ...], n: int, store, loc: _Local, at_sigma: bool) -> _Family:
    if (h, len(subset) + 1) == (0, 2):
        return (_bergman_at_sigma if at_sigma else _bergman_at_z)(subset[0], n, loc)
    form = store[(h, len(subset) + 1)]
    return (_stable_at_sigma if at_sigma else _stable_at_z)(form, subset, n, loc)


def _bracket(g: int, n: int, store, loc: _Local) -> _Family:
    """omega_{g-1,n+2}(z, sigma z, z_S) + sum' omega(z, z_I) omega(sigma z, z_J), per dz^2."""
    total: Optional[_Family] = None
    if g >= 1:
        if (g - 1, n + 2) == (0, 2):
            fam = _Family({(): loc.bergman_diagonal()}, loc.order)
        else:
            form = store[(g - 1, n + 2)]
            terms: Dict[Key, LaurentExpansion] = {}
            for k, c in form.coefficients.items():
                s = loc.monomial(-k[0], c) * loc.sigma_pole(k[1])
                key = tuple(k[2:])
                terms[key] = terms[key] + s if key in terms else s
            fam = _Family(terms, loc.order)
        total = fam
    spectators = tuple(range(n))
    for h in range(g + 1):
        for size in range(n + 1):
            for I in itertools.combinations(spectators, size):
                J = tuple(j for j in spectators if j not in I)
                if (h, len(I)) == (0, 0) or (g - h, len(J)) == (0, 0):
                    continue
                left = _factor(h, I, n, store, loc, at_sigma=False)
                right = _factor(g - h, J, n, store, loc, at_sigma=True)
                prod = left * right
                total = prod if total is None else total + prod
    if total is None:
        raise ValueError(f"empty recursion bracket for ({g}, {n + 1})")
    return total


class KernelExpansion:
    """Recursion kernel with z expanded at 2 and z0 in the pole basis.

    ``coefficients[m]`` multiplies ``dz0 / (z0 - 2)^(m+1)`` and is a Laurent
    series in ``u = z - 2`` for the 1/dz part of the kernel.
    """

    def __init__(self, order: int, m_max: int):
        loc = _Local(order)
        self.order = order
        self.coefficients = {m: loc.kernel_coefficient(m) for m in range(1, m_max + 1)}

    @property
    def leading_order(self) -> int:
        return min(s.lowest_order for s in self.coefficients.values() if not s.is_zero())


def recursion_kernel(order: int, m_max: int = 4) -> KernelExpansion:
    if order < 0:
        raise TruncationError("kernel order must resolve the double zero of the denominator")
    return KernelExpansion(order, m_max)


def tr_step(g: int, n: int, store: MutableMapping[Tuple[int, int], PoleBasisForm],
            order: Optional[int] = None) -> PoleBasisForm:
    """omega_{g,n+1}(z_0, z_1..z_n) from the lower forms in ``store``."""
    if not is_stable(g, n + 1):
        raise ValueError(f"(g, n) = ({g}, {n + 1}) is unstable; it is input data, not output")
    order = working_order(g, n + 1) if order is None else order
    loc = _Local(order)
    bracket = _bracket(g, n, store, loc)
    if bracket.trunc < 0:
        raise TruncationError(f"working order {order} too small for omega_({g},{n + 1})")
    pole = -bracket.low
    coeffs: Dict[Key, Fraction] = {}
    for key, series in bracket.terms.items():
        if series.is_zero():
            continue
        for m in range(1, pole + 2):
            prod = loc.kernel_coefficient(m) * series
            if prod.truncation_order < -1:
                raise TruncationError(
                    f"residue for omega_({g},{n + 1}) touches truncation order {order}; raise it")
            r = prod.residue()
            if r:
                k = (m + 1,) + key
                coeffs[k] = coeffs.get(k, Fraction(0)) + r
    form = PoleBasisForm(g, n + 1, coeffs, pole_bound(g, n + 1))
    if not form.is_symmetric():
        raise ArithmeticError(f"omega_({g},{n + 1}) came out non-symmetric")
    if not form.within_bound():
        raise ArithmeticError(f"omega_({g},{n + 1}) exceeds the pole bound {form.bound}")
    return form


def _dependencies(g: int, n: int) -> List[Tuple[int, int]]:
    deps = []
    if g >= 1 and is_stable(g - 1, n + 1):
        deps.append((g - 1, n + 1))
    for h in range(g + 1):
        for size in range(n):
            if is_stable(h, size + 1) and (h, size + 1) != (g, n):
                deps.append((h, size + 1))
    return deps


def compute_omega(g: int, n: int, order_shift: int = 0,
                  store: Optional[MutableMapping[Tuple[int, int], PoleBasisForm]] = None) -> PoleBasisForm:
    """Stable omega_{g,n}, computing lower forms as needed.

    ``order_shift`` raises the working order of every step; results must
    not depend on it.
    """
    if not is_stable(g, n):
        raise ValueError(f"(g, n) = ({g}, {n}) is unstable")
    if store is None:
        if order_shift == 0:
            return _cached_omega(g, n)
        store = {}
    if (g, n) in store:
        return store[(g, n)]
    for dep in _dependencies(g, n):
        if dep not in store:
            compute_omega(*dep, order_shift=order_shift, store=store)
    store[(g, n)] = tr_step(g, n - 1, store, working_order(g, n) + order_shift)
    return store[(g, n)]


_DEFAULT_STORE: Dict[Tuple[int, int], PoleBasisForm] = {}


@lru_cache(maxsize=None)
def _cached_omega(g: int, n: int) -> PoleBasisForm:
    return compute_omega(g, n, 0, _DEFAULT_STORE)

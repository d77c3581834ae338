"""Expansion of omega_{g,n} in the variable x near z = 1 and the Hurwitz bridge."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, List, Optional, Tuple, Union

from ..hurwitz import BudgetError, HurwitzIndex, connected_hurwitz
from ..identities import VerificationReport, frac_json
from .forms import PoleBasisForm
from .recursion import compute_omega, is_stable

__all__ = [
    "XSeries",
    "invert_x_series",
    "expand_omega_at_zero",
    "hurwitz_side",
    "compare_with_hurwitz",
]

Series = List[Fraction]


def _mul(a: Series, b: Series, N: int) -> Series:
    out = [Fraction(0)] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j, y in enumerate(b[: N + 1 - i]):
                if y:
                    out[i + j] += x * y
    return out


def _inv(a: Series, N: int) -> Series:
    if not a or a[0] == 0:
        raise ZeroDivisionError("power series with zero constant term")
    out = [Fraction(0)] * (N + 1)
    out[0] = 1 / a[0]
    for m in range(1, N + 1):
        s = sum((a[k] * out[m - k] for k in range(1, min(m, len(a) - 1) + 1)), Fraction(0))
        out[m] = -s * out[0]
    return out


@dataclass(frozen=True)
class XSeries:
    """z(x) = sum_k coefficients[k] x^k through x^order, inverse of x = (z-1)/z^2."""

    coefficients: Tuple[Fraction, ...]
    order: int

    def recomposes(self) -> bool:
        """x(z(x)) == x through the truncation order."""
        N = self.order
        z = list(self.coefficients)
        num = list(z)
        num[0] -= 1
        xz = _mul(num, _inv(_mul(z, z, N), N), N)
        return xz == [Fraction(0), Fraction(1)] + [Fraction(0)] * (N - 1)

    def derivative(self) -> Series:
        return [k * c for k, c in enumerate(self.coefficients)][1:] + [Fraction(0)]


@lru_cache(maxsize=None)
def invert_x_series(order: int) -> XSeries:
    """Solve w = x (1 + w)^2 for w = z - 1 by fixed-point iteration."""
    if order < 1:
        raise ValueError("order must be positive")
    w = [Fraction(0)] * (order + 1)
    for _ in range(order):
        one_w = list(w)
        one_w[0] += 1
        sq = _mul(one_w, one_w, order)
        w = [Fraction(0)] + sq[:order]
    z = list(w)
    z[0] += 1
    return XSeries(tuple(z), order)


@lru_cache(maxsize=None)
def _pole_factor(k: int, N: int) -> Tuple[Fraction, ...]:
    """x-series of z'(x) (z(x) - 2)^(-k), i.e. dz/(z-2)^k = (...) dx."""
    xs = invert_x_series(N + 1)
    shifted = list(xs.coefficients)
    shifted[0] -= 2
    base = _inv(shifted, N)
    powk = [Fraction(1)] + [Fraction(0)] * N
    for _ in range(k):
        powk = _mul(powk, base, N)
    return tuple(_mul(xs.derivative(), powk, N))


def _w01(a_max: int) -> Dict[Tuple[int, ...], Fraction]:
    # omega_{0,1} = -y dx = z dx
    xs = invert_x_series(max(a_max, 1))
    return {(a,): xs.coefficients[a - 1] for a in range(1, a_max + 1)}


def _w02(a_max: int) -> Dict[Tuple[int, ...], Fraction]:
    # omega_{0,2} - dx1 dx2/(x1-x2)^2 = d1 d2 log[(z(x1) - z(x2)) / (x1 - x2)]
    N = 2 * a_max
    c = invert_x_series(N + 1).coefficients
    Q = {(i, j): c[i + j + 1] for i in range(N + 1) for j in range(N + 1 - i)}

    def mul(A, B):
        out: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), x in A.items():
            for (k, l), y in B.items():
                if i + k <= a_max and j + l <= a_max:
                    out[(i + k, j + l)] = out.get((i + k, j + l), Fraction(0)) + x * y
        return {k: v for k, v in out.items() if v}

    w = {k: v for k, v in Q.items() if k != (0, 0) and k[0] <= a_max and k[1] <= a_max}
    log: Dict[Tuple[int, int], Fraction] = {}
    power, k = w, 1
    while power:
        for key, v in power.items():
            log[key] = log.get(key, Fraction(0)) + v * Fraction((-1) ** (k + 1), k)
        power, k = mul(power, w), k + 1
    return {(a, b): a * b * log.get((a, b), Fraction(0))
            for a in range(1, a_max + 1) for b in range(1, a_max + 1)}


def expand_omega_at_zero(form: Union[PoleBasisForm, Tuple[int, int]], a_max: int
                         ) -> Dict[Tuple[int, ...], Fraction]:
    """Coefficients W(a) of prod x_i^(a_i - 1) dx_i, all a_i <= a_max.

    ``form`` is a stable pole-basis form or one of the unstable labels
    ``(0, 1)`` and ``(0, 2)``; for ``(0, 2)`` the double pole
    dx1 dx2/(x1 - x2)^2 is subtracted.
    """
    if isinstance(form, tuple):
        if form == (0, 1):
            return _w01(a_max)
        if form == (0, 2):
            return _w02(a_max)
        raise ValueError(f"unstable label must be (0, 1) or (0, 2), got {form}")
    N = a_max - 1
    out: Dict[Tuple[int, ...], Fraction] = {}
    for a in itertools.product(range(1, a_max + 1), repeat=form.n):
        total = Fraction(0)
        for k, c in form.coefficients.items():
            term = c
            for ki, ai in zip(k, a):
                term *= _pole_factor(ki, N)[ai - 1]
                if not term:
                    break
            total += term
        out[a] = total
    return out


def hurwitz_side(g: int, a: Tuple[int, ...]) -> Fraction:
    """(prod a_i) * H_{g, sort(a)} with the connected numbers from log Z."""
    mu = tuple(sorted(a, reverse=True))
    idx = HurwitzIndex(g, mu)
    return prod(a) * connected_hurwitz(idx)


def compare_with_hurwitz(g: int, n: int, a_max: int, caps: Optional[Tuple[int, int]] = None,
                         form: Optional[PoleBasisForm] = None) -> VerificationReport:
    """Check W_g(a) = (prod a_i) H_{g,sort(a)} for every a with a_i <= a_max."""
    report = VerificationReport("tr-bridge", {"g": g, "n": n, "a_max": a_max})
    need_d = n * a_max
    need_b = 2 * g - 2 + need_d + n
    if caps is not None and (caps[0] < need_d or caps[1] < need_b):
        raise BudgetError(f"caps {caps} too small; need (d_max, b_max) >= ({need_d}, {need_b})")
    if form is None:
        form = compute_omega(g, n) if is_stable(g, n) else (g, n)
    W = expand_omega_at_zero(form, a_max)
    for a in sorted(W):
        lhs, rhs = W[a], hurwitz_side(g, a)
        report.checked += 1
        if lhs != rhs:
            return report.fail({"a": list(a), "W": frac_json(lhs), "hurwitz": frac_json(rhs)})
    return report

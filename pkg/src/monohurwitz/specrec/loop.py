"""Quadratic loop equation at the branch point, with spectators at sample points.

Each correlator ``DF = omega / prod dx_i`` is assembled as an exact rational
function of the recursion variable ``z`` (spectators substituted), so the
holomorphy check is independent of the Laurent bookkeeping used by the
recursion itself.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Tuple

from ..algebra import Poly, RationalFunction, laurent_of_rational
from ..identities import VerificationReport
from .curve import monotone_curve
from .forms import PoleBasisForm
from .recursion import compute_omega, is_stable, working_order

__all__ = ["DEFAULT_SAMPLES", "correlator", "loop_combination", "check_quadratic_loop"]

DEFAULT_SAMPLES = (Fraction(3), Fraction(5), Fraction(7), Fraction(11))

Store = Mapping[Tuple[int, int], PoleBasisForm]


def _dx_at(p: Fraction) -> Fraction:
    return monotone_curve().dx(p)


def correlator(g: int, m: int, spectators: Sequence[Fraction], store: Store) -> RationalFunction:
    """DF_{g,m}(z, s_1..s_{m-1}) as a rational function of z."""
    curve = monotone_curve()
    z = RationalFunction.z()
    dx = curve.dx
    if (g, m) == (0, 1):
        return -curve.y
    if (g, m) == (0, 2):
        (s,) = spectators
        return 1 / ((z - s) ** 2 * dx * _dx_at(s))
    form = store[(g, m)]
    # group by the pole order in the first slot
    by_k = {}
    for k, c in form.coefficients.items():
        w = c
        for kj, s in zip(k[1:], spectators):
            w /= (s - 2) ** kj * _dx_at(s)
        by_k[k[0]] = by_k.get(k[0], Fraction(0)) + w
    u = Poly({0: -2, 1: 1})
    top = max(by_k, default=0)
    num = Poly()
    for k, w in by_k.items():
        num = num + u ** (top - k) * w
    return RationalFunction(num, u ** top) / dx


def _diagonal(g: int, n: int, spectators: Sequence[Fraction], store: Store) -> RationalFunction:
    """DF_{g,n+2}(z, sigma(z), s_1..s_n)."""
    curve = monotone_curve()
    z, sigma, dx = RationalFunction.z(), curve.deck, curve.dx
    if (g, n) == (0, 0):
        return 1 / ((z - sigma) ** 2 * dx * dx.compose(sigma))
    form = store[(g, n + 2)]
    total = RationalFunction(0)
    for k, c in form.coefficients.items():
        w = c
        for kj, s in zip(k[2:], spectators):
            w /= (s - 2) ** kj * _dx_at(s)
        total = total + (z - 2) ** (-k[0]) * (sigma - 2) ** (-k[1]) * w
    return total / (dx * dx.compose(sigma))


def loop_combination(g: int, n: int, store: Store,
                     samples: Sequence[Fraction] = DEFAULT_SAMPLES) -> RationalFunction:
    """DF_{g-1,n+2}(z, sigma z, S) + sum_{h+k=g, I+J=S} DF_{h}(z, I) DF_{k}(sigma z, J)."""
    if len(samples) < n:
        raise ValueError(f"need {n} spectator samples, got {len(samples)}")
    sigma = monotone_curve().deck
    spec = tuple(Fraction(s) for s in samples[:n])
    total = RationalFunction(0)
    if g >= 1:
        total = total + _diagonal(g - 1, n, spec, store)
    idx = tuple(range(n))
    for h in range(g + 1):
        for size in range(n + 1):
            for I in itertools.combinations(idx, size):
                J = tuple(j for j in idx if j not in I)
                left = correlator(h, len(I) + 1, [spec[i] for i in I], store)
                right = correlator(g - h, len(J) + 1, [spec[j] for j in J], store)
                total = total + left * right.compose(sigma)
    return total


def _needed(g: int, n: int):
    out = set()
    if g >= 1 and is_stable(g - 1, n + 2):
        out.add((g - 1, n + 2))
    for h in range(g + 1):
        for size in range(n + 1):
            if is_stable(h, size + 1):
                out.add((h, size + 1))
    return out


def check_quadratic_loop(g: int, n: int, order: Optional[int] = None,
                         store: Optional[Store] = None,
                         samples: Sequence[Fraction] = DEFAULT_SAMPLES) -> VerificationReport:
    """No negative powers of u = z - 2 in the loop combination of level (g, n).

    Level (g, n) is the one whose recursion step produces omega_{g,n+1};
    the unstable levels (0, 0) and (0, 1) involve only omega_{0,1}, omega_{0,2}.
    """
    if g < 0 or n < 0:
        raise ValueError(f"level ({g}, {n}) must have g, n >= 0")
    order = working_order(g, n + 1) if order is None else order
    report = VerificationReport("quadratic-loop", {"g": g, "n": n, "order": order,
                                                   "samples": [str(s) for s in samples[:n]]})
    if store is None:
        store = {gn: compute_omega(*gn) for gn in _needed(g, n)}
    Q = loop_combination(g, n, store, samples)
    report.checked = 1
    if Q.num.is_zero():
        return report
    expansion = laurent_of_rational(Q, 2, order)
    if expansion.lowest_order < 0:
        principal = {str(k): f"{c.numerator}/{c.denominator}"
                     for k, c in expansion.principal_part().items()}
        return report.fail({"lowest_order": expansion.lowest_order, "principal_part": principal})
    return report

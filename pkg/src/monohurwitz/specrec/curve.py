"""The monotone spectral curve x = (z-1)/z^2, y = -z on the Riemann sphere."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict

from ..algebra import Poly, RationalFunction

__all__ = ["SpectralCurve", "deck_transformation", "monotone_curve", "omega01", "curve_checks"]


@dataclass(frozen=True)
class SpectralCurve:
    x: RationalFunction
    y: RationalFunction
    branch_point: Fraction
    deck: RationalFunction

    @property
    def dx(self) -> RationalFunction:
        """dz-coefficient of dx."""
        return self.x.derivative()


def deck_transformation(x: RationalFunction) -> RationalFunction:
    """The non-identity sheet exchange of a degree-2 map ``x``.

    ``num(w) den(z) - num(z) den(w)`` is quadratic in ``w`` with root
    ``w = z``; the other root follows from the sum of roots.
    """
    P, Q = x.num, x.den
    if max(P.degree, Q.degree) != 2:
        raise ValueError("deck transformation is implemented for degree-2 maps only")
    # coefficient of w^k, as a polynomial in z
    A = Q * P.coeff(2) - P * Q.coeff(2)
    B = Q * P.coeff(1) - P * Q.coeff(1)
    z = RationalFunction.z()
    return RationalFunction(-B, A) - z


@lru_cache(maxsize=None)
def monotone_curve() -> SpectralCurve:
    z = Poly.x()
    x = RationalFunction(z - 1, z * z)
    y = RationalFunction(-z)
    return SpectralCurve(x=x, y=y, branch_point=Fraction(2), deck=deck_transformation(x))


def omega01(curve: SpectralCurve | None = None) -> RationalFunction:
    """dz-coefficient of ``-y dx``."""
    curve = curve or monotone_curve()
    return -curve.y * curve.dx


def curve_checks(curve: SpectralCurve | None = None) -> Dict[str, bool]:
    """Exact sanity identities of the curve data."""
    curve = curve or monotone_curve()
    z = RationalFunction.z()
    sigma, a = curve.deck, curve.branch_point
    dx = curve.dx
    return {
        "x o sigma == x": curve.x.compose(sigma) == curve.x,
        "sigma o sigma == id": sigma.compose(sigma) == z,
        "sigma(a) == a": sigma(a) == a,
        "sigma != id": sigma != z,
        "x' == (2-z)/z^3": dx == RationalFunction(Poly({0: 2, 1: -1}), Poly({3: 1})),
        "x' simple zero at a": dx.order_at(a) == 1,
    }

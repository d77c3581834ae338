from __future__ import annotations

import itertools
import json
from fractions import Fraction
from math import comb, prod

import pytest

from monohurwitz.algebra import Poly, RationalFunction, laurent_of_rational
from monohurwitz.hurwitz import BudgetError
from monohurwitz.specrec import (KERNEL_PREFACTOR, PoleBasisForm, TruncationError, check_quadratic_loop,
                                 compare_with_hurwitz, compute_omega, curve_checks, deck_transformation,
                                 expand_omega_at_zero, invert_x_series, monotone_curve, omega01,
                                 pole_bound, recursion_kernel, tr_step)
from monohurwitz.specrec.recursion import kernel_denominator

BRIDGE_CASES = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 1), (1, 2), (2, 1)]
STABLE = [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]

z = RationalFunction.z()


# -- curve -------------------------------------------------------------------------

def test_curve_checks():
    assert all(curve_checks().values())


def test_deck_examples():
    c = monotone_curve()
    assert c.deck == z / (z - 1)
    assert deck_transformation(c.x) == c.deck
    # sigma(2 + u) - 2 = -u/(1 + u)
    u = RationalFunction.z()
    shifted = (c.deck.compose(u + 2) - 2)
    assert shifted == -u / (u + 1)


def test_x_factorization():
    # x(z) - x(w) = (w - z)(zw - z - w)/(z^2 w^2), checked at sample w
    c = monotone_curve()
    for w in (Fraction(3), Fraction(-5, 7)):
        lhs = c.x - c.x(w)
        rhs = (w - z) * (z * w - z - w) / (z ** 2 * w ** 2)
        assert lhs == rhs


def test_omega01_examples():
    w = omega01()
    assert w == RationalFunction(Poly([2, -1]), Poly({2: 1}))
    assert w(1) == 1 and w(2) == 0
    assert w.order_at(0) == -2 and w.order_at(2) == 1


def test_kernel_denominator_example():
    assert kernel_denominator() == -(z - 2) ** 2 / (z ** 2 * (z - 1))


def test_bergman_primitive():
    # d/dw of 1/(z0 - w) is 1/(z0 - w)^2, so the primitive from z to sigma(z) is the difference
    z0 = Fraction(7, 3)
    w = RationalFunction.z()
    assert (1 / (z0 - w)).derivative() == 1 / (z0 - w) ** 2


@pytest.mark.parametrize("m", range(1, 5))
def test_kernel_coefficients_match_rational_expansion(m):
    c = monotone_curve()
    order = 10
    K = recursion_kernel(order, m_max=4)
    exact = KERNEL_PREFACTOR * ((c.deck - 2) ** m - (z - 2) ** m) / kernel_denominator()
    assert K.coefficients[m].agrees_with(laurent_of_rational(exact, 2, order - 2))


def test_kernel_leading_order():
    # numerator vanishes to first order, the denominator to second
    assert recursion_kernel(8).leading_order == -1
    with pytest.raises(TruncationError):
        recursion_kernel(-1)


# -- x-series -------------------------------------------------------------------------

def test_invert_x_series_is_catalan():
    xs = invert_x_series(10)
    assert list(xs.coefficients[1:5]) == [1, 2, 5, 14]
    assert all(xs.coefficients[k] == comb(2 * k, k) // (k + 1) for k in range(11))
    assert xs.recomposes()


# -- recursion -------------------------------------------------------------------------

def test_omega03_and_omega11():
    w03 = compute_omega(0, 3)
    assert w03.is_symmetric() and w03.coefficients == {(2, 2, 2): 8}
    w11 = compute_omega(1, 1)
    assert w11.max_pole() <= 4 and w11.coefficients == {(3,): 1, (4,): 1}


def test_unstable_rejected():
    for g, n in [(0, 1), (0, 2)]:
        with pytest.raises(ValueError):
            compute_omega(g, n)
    with pytest.raises(ValueError):
        tr_step(0, 1, {})


def test_insufficient_order_raises():
    with pytest.raises(TruncationError):
        tr_step(1, 1, {(1, 1): compute_omega(1, 1), (0, 3): compute_omega(0, 3)}, order=2)


@pytest.mark.parametrize("gn", STABLE)
def test_forms_symmetric_and_bounded(gn):
    form = compute_omega(*gn)
    assert form.is_symmetric() and form.within_bound()
    assert form.bound == pole_bound(*gn)


@pytest.mark.parametrize("gn", STABLE)
def test_truncation_stability(gn):
    assert compute_omega(*gn, order_shift=4) == compute_omega(*gn)


def _first_slot(form, spectators):
    """dz-coefficient of the form in its first variable, others substituted."""
    total = RationalFunction(0)
    for k, c in form.coefficients.items():
        w = c
        for kj, s in zip(k[1:], spectators):
            w /= (s - 2) ** kj
        total = total + w / (z - 2) ** k[0]
    return total


def _residue_oracle(g, n, z0, spectators):
    """omega_{g,n+1}(z0, S) from the residue of exact rational functions of z."""
    c = monotone_curve()
    sigma = c.deck
    dsigma = sigma.derivative()
    S = list(spectators)

    def w(h, m, at, spec):
        if (h, m) == (0, 2):
            (s,) = spec
            return 1 / (at - s) ** 2
        return _first_slot(compute_omega(h, m), spec).compose(at)

    bracket = RationalFunction(0)
    if g >= 1:
        if (g - 1, n + 2) == (0, 2):
            bracket = bracket + 1 / (z - sigma) ** 2
        else:
            form = compute_omega(g - 1, n + 2)
            for k, coef in form.coefficients.items():
                t = coef
                for kj, s in zip(k[2:], S):
                    t /= (s - 2) ** kj
                bracket = bracket + t / ((z - 2) ** k[0] * (sigma - 2) ** k[1])
    for h in range(g + 1):
        for size in range(n + 1):
            for I in itertools.combinations(range(n), size):
                J = [j for j in range(n) if j not in I]
                if (h, size + 1) == (0, 1) or (g - h, len(J) + 1) == (0, 1):
                    continue
                bracket = bracket + (w(h, size + 1, z, [S[i] for i in I])
                                     * w(g - h, len(J) + 1, sigma, [S[j] for j in J]))
    kernel = KERNEL_PREFACTOR * (1 / (z0 - sigma) - 1 / (z0 - z)) / kernel_denominator()
    integrand = kernel * bracket * dsigma
    return laurent_of_rational(integrand, 2, 0).residue()


@pytest.mark.parametrize("gn", [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1), (1, 3)])
def test_recursion_matches_direct_residue(gn):
    g, m = gn
    form = compute_omega(g, m)
    spectators = [Fraction(5), Fraction(-3, 2), Fraction(11, 4)][: m - 1]
    for z0 in (Fraction(3), Fraction(-7), Fraction(1, 3)):
        assert form.evaluate([z0] + spectators) == _residue_oracle(g, m - 1, z0, spectators)


def test_form_vanishes_at_infinity():
    # pole-basis terms with k >= 1 decay; the oracle residue decays the same way
    for gn in [(0, 3), (1, 1), (1, 2)]:
        form = compute_omega(*gn)
        spectators = [Fraction(5), Fraction(-3, 2)][: gn[1] - 1]
        big = Fraction(10 ** 6)
        assert abs(form.evaluate([big] + spectators)) < Fraction(1, 10 ** 5)


def test_json_roundtrip():
    form = compute_omega(1, 2)
    doc = json.loads(json.dumps(form.to_json()))
    assert PoleBasisForm.from_json(doc) == form
    assert doc["terms"] == sorted(doc["terms"], key=lambda t: t["k"])


# -- bridge -------------------------------------------------------------------------

@pytest.mark.parametrize("gn", BRIDGE_CASES)
def test_bridge(gn):
    report = compare_with_hurwitz(*gn, a_max=5)
    assert report.ok, report.witness
    assert report.checked == 5 ** gn[1]


def test_bridge_anchors():
    W01 = expand_omega_at_zero((0, 1), 4)
    assert [W01[(a,)] for a in range(1, 5)] == [1, 1, 2, 5]
    assert expand_omega_at_zero((0, 2), 1)[(1, 1)] == 1
    assert expand_omega_at_zero(compute_omega(1, 1), 1)[(1,)] == 0


def test_bridge_symmetric_in_a():
    W = expand_omega_at_zero(compute_omega(0, 4), 3)
    for a, v in W.items():
        for perm in itertools.permutations(a):
            assert W[perm] == v


def test_bridge_detects_perturbation():
    form = compute_omega(0, 3).perturbed((2, 2, 2), 1)
    assert not compare_with_hurwitz(0, 3, 2, form=form).ok


def test_bridge_caps():
    with pytest.raises(BudgetError):
        compare_with_hurwitz(0, 3, 3, caps=(5, 20))


def test_bridge_against_direct_series():
    # W_0(a) for (0,1) equals a * H_{0,(a)} with H from the character formula directly
    from monohurwitz.hurwitz import HurwitzIndex, disconnected_hurwitz
    W = expand_omega_at_zero((0, 1), 6)
    for a in range(1, 7):
        assert W[(a,)] == a * disconnected_hurwitz(HurwitzIndex(0, (a,)))


# -- loop equation ------------------------------------------------------------------------

LOOP_LEVELS = [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0)]


@pytest.mark.parametrize("gn", LOOP_LEVELS)
def test_quadratic_loop(gn):
    assert check_quadratic_loop(*gn).ok


@pytest.mark.parametrize("level,target,key", [
    ((0, 2), (0, 3), (2, 2, 2)),
    ((1, 0), (1, 1), (4,)),
    ((1, 1), (1, 2), (2, 2)),
])
def test_quadratic_loop_negative_control(level, target, key):
    from monohurwitz.specrec.loop import _needed
    store = {gn: compute_omega(*gn) for gn in _needed(*level)}
    store[target] = store[target].perturbed(key, 1)
    report = check_quadratic_loop(*level, store=store)
    assert report.status == "counterexample"
    assert report.witness["lowest_order"] < 0


def test_quadratic_loop_higher_order_stable():
    assert check_quadratic_loop(1, 0, order=20).ok

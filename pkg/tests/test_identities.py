from __future__ import annotations

import json
from fractions import Fraction

import pytest

from monohurwitz import identities
from monohurwitz.algebra import Poly
from monohurwitz.hurwitz import build_partition_function
from monohurwitz.identities import (content_lemma_sides, han_g_function, is_column, verify_content_lemma,
                                    verify_cut_and_join, verify_han_identity, verify_w3_reduction,
                                    w3_coefficients)
from monohurwitz.partitions import hook_product, partitions_of, remove_corners


@pytest.mark.parametrize("caps", [(1, 1), (3, 3), (6, 6)])
def test_cut_and_join(caps):
    report = verify_cut_and_join(*caps)
    assert report.ok
    # the degree-1 sector has no cut or join terms: both sides vanish there
    assert report.checked > 0 or caps == (1, 1)


def test_cut_and_join_detects_corruption(monkeypatch):
    def corrupted(d_max, b_max, **kw):
        Z = build_partition_function(d_max, b_max, **kw)
        Z._accumulate((3, 2) + (0, 0, 1) + (0,) * (Z.M - 3), Fraction(1))
        return Z
    monkeypatch.setattr(identities, "build_partition_function", corrupted)
    report = verify_cut_and_join(4, 4)
    assert report.status == "counterexample"
    assert set(report.witness) == {"monomial", "lhs", "rhs"}


def test_cut_and_join_rejects_factorial_weighting(monkeypatch):
    # weighting H by 1/d! instead of 1/|Aut mu| breaks the equation
    from math import factorial
    from monohurwitz.hurwitz import automorphism_count
    from monohurwitz.partitions import partitions_of as parts

    def factorial_weighted(d_max, b_max, **kw):
        Z = build_partition_function(d_max, b_max, **kw)
        out = Z.empty_like()
        for mono, c in Z.terms.items():
            mu = tuple(i + 1 for i in reversed(range(Z.M)) for _ in range(mono[2 + i]))
            d = mono[0]
            out._accumulate(mono, c * automorphism_count(mu) / factorial(d) if d else c)
        return out
    monkeypatch.setattr(identities, "build_partition_function", factorial_weighted)
    assert not verify_cut_and_join(4, 4).ok


def test_lemma_examples():
    assert content_lemma_sides((2,)) == (1, 1)
    assert content_lemma_sides((2, 1)) == (0, 0)
    assert content_lemma_sides((1,)) == (0, 0)


def test_lemma_sweep():
    report = verify_content_lemma(15)
    assert report.ok
    assert report.checked == sum(len(partitions_of(n)) for n in range(1, 16))


def test_han_g_examples():
    x = Poly.x()
    assert han_g_function((1,)) == x
    assert han_g_function((2,)) == Poly([-2, -1, 1])
    assert han_g_function((1, 1)) == Poly([0, -1, 1])


def test_han_sweep_and_examples():
    assert verify_han_identity(10).ok
    lhs, rhs = identities._han_sides((2,))
    assert lhs == rhs == Poly.x()
    lhs, rhs = identities._han_sides((1,))
    assert lhs == rhs == Poly.const(1)


def test_w3_examples():
    assert w3_coefficients((2,)) == (2, 2)
    left, right = w3_coefficients((3,))
    assert left == right
    assert is_column((1,)) and is_column((1, 1, 1)) and not is_column((2,))


def test_w3_sweep():
    report = verify_w3_reduction(10)
    assert report.ok
    assert any("column" in n for n in report.notes)


@pytest.mark.parametrize("fn", [verify_content_lemma, verify_han_identity, verify_w3_reduction])
def test_empty_range(fn):
    report = fn(0)
    assert report.ok and report.checked == 0 and "empty range" in report.notes


def test_split_sweeps_merge_to_whole():
    whole = verify_content_lemma(9)
    parts = [verify_content_lemma(n, n_min=n) for n in range(1, 10)]
    assert sum(p.checked for p in parts) == whole.checked


@pytest.mark.parametrize("n", range(1, 16))
def test_inverse_hook_sum(n):
    for nu in partitions_of(n):
        total = sum(Fraction(1, hook_product(lam)) for lam, _ in remove_corners(nu))
        assert total == Fraction(n, hook_product(nu))


@pytest.mark.parametrize("n", range(2, 11))
def test_w3_residual_consistency(n):
    for nu in partitions_of(n):
        if is_column(nu):
            continue
        left, right = w3_coefficients(nu)
        lemma_l, lemma_r = content_lemma_sides(nu)
        assert left - right == lemma_l - lemma_r


def test_report_json_shape():
    report = verify_content_lemma(3)
    doc = report.to_json()
    assert doc["identity"] == "content-lemma" and doc["status"] == "verified"
    json.dumps(doc)
    report.fail({"nu": "2", "lhs": {"num": "1", "den": "1"}, "rhs": {"num": "0", "den": "1"}})
    assert report.to_json()["witness"]["nu"] == "2" and not report.ok

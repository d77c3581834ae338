"""Monotone Hurwitz numbers: character sums, brute-force oracles, log of Z."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import kernels
from .algebra import TruncatedSeries, series_log
from .partitions import Partition, character, contents, dimension, make_partition, partitions_of

__all__ = [
    "BudgetError",
    "HurwitzIndex",
    "HurwitzValue",
    "ORACLE_MAX_DEGREE",
    "ORACLE_MAX_B",
    "h_complete",
    "character_sum",
    "disconnected_hurwitz",
    "oracle_disconnected",
    "oracle_connected",
    "canonical_permutation",
    "build_partition_function",
    "connected_hurwitz",
    "connected_from_log",
    "exponent_vector",
    "automorphism_count",
]

ORACLE_MAX_DEGREE = 6
ORACLE_MAX_B = 6


class BudgetError(ValueError):
    """A request exceeds a documented size budget or the caps supplied."""


@dataclass(frozen=True)
class HurwitzIndex:
    g: int
    mu: Partition

    def __post_init__(self):
        object.__setattr__(self, "mu", make_partition(self.mu))
        if not self.mu:
            raise ValueError("Hurwitz numbers need a nonempty partition")
        if self.b < 0:
            raise ValueError(f"b = 2g - 2 + d + l must be nonnegative, got {self.b} for {self}")

    @classmethod
    def from_b(cls, mu: Sequence[int], b: int) -> "HurwitzIndex":
        mu = make_partition(mu)
        twice = b - sum(mu) - len(mu) + 2
        if twice % 2:
            raise ValueError(f"b = {b} has the wrong parity for mu = {mu}")
        return cls(twice // 2, mu)

    @property
    def d(self) -> int:
        return sum(self.mu)

    @property
    def length(self) -> int:
        return len(self.mu)

    @property
    def b(self) -> int:
        return 2 * self.g - 2 + self.d + self.length


@dataclass(frozen=True)
class HurwitzValue:
    index: HurwitzIndex
    disconnected: Fraction
    connected: Optional[Fraction] = None


def h_complete(values: Sequence[int], b: int) -> int:
    """Complete homogeneous symmetric polynomial ``h_b`` at integer arguments."""
    if b < 0:
        return 0
    return kernels.content_hvector(list(values), b)[b]


@lru_cache(maxsize=None)
def _content_hvector(lam: Partition, bmax: int) -> Tuple[int, ...]:
    return tuple(kernels.content_hvector(contents(lam), bmax))


_SUMS: Dict[Partition, Tuple[int, ...]] = {}


def _character_sums(mu: Partition, bmax: int) -> Tuple[int, ...]:
    # memo grows in b; concurrent writers store identical values
    cached = _SUMS.get(mu)
    if cached is not None and len(cached) > bmax:
        return cached
    bmax = max(bmax, 2 * len(cached) if cached else 0)
    d = sum(mu)
    sums = [0] * (bmax + 1)
    for lam in partitions_of(d):
        chi = character(lam, mu)
        if not chi:
            continue
        w = dimension(lam) * chi
        for b, h in enumerate(_content_hvector(lam, bmax)):
            sums[b] += w * h
    _SUMS[mu] = tuple(sums)
    return _SUMS[mu]


def character_sum(mu: Sequence[int], b: int) -> int:
    """``sum_lam dim(lam) chi_lam(mu) h_b(contents(lam))`` as an integer."""
    return _character_sums(make_partition(mu), b)[b]


def _disconnected(mu: Partition, b: int) -> Fraction:
    if b < 0:
        return Fraction(0)
    return Fraction(_character_sums(mu, b)[b], factorial(sum(mu)) * prod(mu))


def disconnected_hurwitz(idx: HurwitzIndex) -> Fraction:
    """Disconnected monotone Hurwitz number from the character formula."""
    return _disconnected(idx.mu, idx.b)


def canonical_permutation(mu: Sequence[int]) -> List[int]:
    """0-based image list of the permutation with cycles (1..mu1)(mu1+1..)..."""
    perm: List[int] = []
    start = 0
    for part in mu:
        perm.extend(start + (i + 1) % part for i in range(part))
        start += part
    return perm


def _oracle(mu: Sequence[int], b: int, connected: bool) -> Fraction:
    mu = make_partition(mu)
    d = sum(mu)
    if d > ORACLE_MAX_DEGREE or b > ORACLE_MAX_B or b < 0:
        raise BudgetError(
            f"oracle budget is d <= {ORACLE_MAX_DEGREE}, 0 <= b <= {ORACLE_MAX_B}; got d={d}, b={b}")
    count = kernels.count_monotone(d, b, canonical_permutation(mu), connected)
    return Fraction(count, prod(mu))


def oracle_disconnected(mu: Sequence[int], b: int) -> Fraction:
    """Monotone factorizations of a fixed permutation of type ``mu``, over prod(mu)."""
    return _oracle(mu, b, False)


def oracle_connected(mu: Sequence[int], b: int) -> Fraction:
    """As :func:`oracle_disconnected`, counting only transitive factorizations."""
    return _oracle(mu, b, True)


def automorphism_count(mu: Sequence[int]) -> int:
    """Product of factorials of the part multiplicities of ``mu``."""
    return prod(factorial(c) for c in Counter(mu).values())


def exponent_vector(mu: Sequence[int], M: int) -> Tuple[int, ...]:
    e = [0] * M
    for part in mu:
        if part > M:
            raise BudgetError(f"part {part} exceeds variable budget {M}")
        e[part - 1] += 1
    return tuple(e)


def _sub_partitions(mu: Partition) -> Iterator[Partition]:
    counts: Dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    keys = sorted(counts, reverse=True)
    for choice in itertools.product(*(range(counts[k] + 1) for k in keys)):
        yield tuple(k for k, c in zip(keys, choice) for _ in range(c))


def build_partition_function(d_max: int, b_max: int, support: Optional[Sequence[int]] = None,
                             M: Optional[int] = None) -> TruncatedSeries:
    """Truncated generating series Z of disconnected numbers.

    The coefficient of ``s^d t^b p_mu`` is ``H_{g,mu} / |Aut mu|``, where
    ``|Aut mu|`` is the product of factorials of part multiplicities.  This
    is the weighting under which Z is an exponential generating function of
    factorizations and satisfies the cut-and-join equation.

    With ``support`` (a partition) only monomials ``p_nu`` with ``nu`` a
    sub-multiset of ``support`` are kept.
    """
    if support is not None:
        support = make_partition(support)
        M = M or max(support)
        d_max = max(d_max, sum(support))
        diagrams = list(_sub_partitions(support))
        sup_vec = exponent_vector(support, M)
    else:
        M = M or max(d_max, 1)
        diagrams = [mu for d in range(d_max + 1) for mu in partitions_of(d)]
        sup_vec = None
    Z = TruncatedSeries(M, d_max, b_max, support=sup_vec)
    for mu in diagrams:
        if not mu:
            Z._accumulate((0, 0) + (0,) * M, Fraction(1))
            continue
        d = sum(mu)
        if d > d_max:
            continue
        e = exponent_vector(mu, M)
        for b in range((d + len(mu)) % 2, b_max + 1, 2):
            Z._accumulate((d, b) + e, _disconnected(mu, b) / automorphism_count(mu))
    return Z


@lru_cache(maxsize=8)
def _full_log(d_max: int, b_max: int) -> TruncatedSeries:
    return series_log(build_partition_function(d_max, b_max))


def connected_from_log(logZ: TruncatedSeries, mu: Sequence[int], b: int) -> Fraction:
    """``|Aut mu| * [s^d t^b p_mu] log Z``."""
    mu = make_partition(mu)
    d = sum(mu)
    return automorphism_count(mu) * logZ.coefficient((d, b) + exponent_vector(mu, logZ.M))


def connected_hurwitz(idx: HurwitzIndex, d_max: Optional[int] = None, b_max: Optional[int] = None,
                      *, full: bool = False) -> Fraction:
    """Connected monotone Hurwitz number ``|Aut mu| [s^d t^b p_mu] log Z``.

    Caps default to the index itself.  ``full=True`` takes the logarithm
    of the whole truncated Z; otherwise Z is restricted to monomials dividing
    ``p_mu``, which yields the same coefficient far more cheaply.
    """
    d_max = idx.d if d_max is None else d_max
    b_max = idx.b if b_max is None else b_max
    if idx.d > d_max or idx.b > b_max:
        raise BudgetError(f"caps (d_max={d_max}, b_max={b_max}) too small for {idx}")
    if full:
        return connected_from_log(_full_log(d_max, b_max), idx.mu, idx.b)
    return _connected_restricted(idx.mu, idx.b)


@lru_cache(maxsize=None)
def _connected_restricted(mu: Partition, b: int) -> Fraction:
    Z = build_partition_function(sum(mu), b, support=mu)
    return connected_from_log(series_log(Z), mu, b)

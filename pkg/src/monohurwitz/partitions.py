"""Young-diagram combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the unique partition of 0.  Boxes use 1-based ``(row, col)``.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import List, NamedTuple, Sequence, Tuple

Partition = Tuple[int, ...]

__all__ = [
    "Partition",
    "Box",
    "make_partition",
    "parse_partition",
    "format_partition",
    "conjugate",
    "contents",
    "hook_lengths",
    "hook_product",
    "dimension",
    "remove_corners",
    "character",
    "partitions_of",
    "partition_count",
]


class Box(NamedTuple):
    row: int
    col: int


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate and freeze ``parts``; raises ``ValueError`` if not a partition."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form, e.g. ``"3,1,1"``; ``""`` is empty."""
    text = text.strip()
    if not text:
        return ()
    return make_partition(int(x) for x in text.split(","))


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def contents(p: Partition) -> List[int]:
    """Contents ``col - row`` of every box, row-major."""
    return [c - r for r, row_len in enumerate(p, start=1) for c in range(1, row_len + 1)]


def hook_lengths(p: Partition) -> List[int]:
    pc = conjugate(p)
    return [(row_len - c) + (pc[c - 1] - r) + 1
            for r, row_len in enumerate(p, start=1) for c in range(1, row_len + 1)]


@lru_cache(maxsize=None)
def hook_product(p: Partition) -> int:
    out = 1
    for h in hook_lengths(p):
        out *= h
    return out


@lru_cache(maxsize=None)
def dimension(p: Partition) -> int:
    n = sum(p)
    q, r = divmod(factorial(n), hook_product(p))
    if r:
        raise ArithmeticError(f"hook product of {p} does not divide {n}!")
    return q


def remove_corners(p: Partition) -> List[Tuple[Partition, Box]]:
    """All diagrams obtained by deleting one corner box, with that box.

    Corners are listed top to bottom.
    """
    if not p:
        raise ValueError("the empty partition has no corners")
    out = []
    for i, part in enumerate(p):
        if i + 1 == len(p) or p[i + 1] < part:
            smaller = list(p)
            smaller[i] -= 1
            out.append((tuple(x for x in smaller if x), Box(i + 1, part)))
    return out


def _beta_set(p: Partition, length: int) -> List[int]:
    padded = list(p) + [0] * (length - len(p))
    return [padded[i] + (length - 1 - i) for i in range(length)]


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    n = len(b)
    return tuple(x for x in (b[i] - (n - 1 - i) for i in range(n)) if x > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    # Murnaghan-Nakayama: strip a rim hook of length mu[0] in every possible way.
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam, len(lam))
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        # height of the rim hook = number of beads jumped over
        height = sum(1 for x in beta if nb < x < b)
        new_beta = [nb if x == b else x for x in beta]
        sign = -1 if height % 2 else 1
        total += sign * _mn(_from_beta(new_beta), rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character ``chi_lam`` on the class of cycle type ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def partitions_of(d: int) -> List[Partition]:
    """All partitions of ``d`` in reverse-lexicographic order."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return list(_partitions(d, d))


@lru_cache(maxsize=None)
def _partitions(d: int, largest: int) -> Tuple[Partition, ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partition_count(d: int) -> int:
    """Partition numbers via Euler's pentagonal recurrence."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > d:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(d - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= d:
            total += sign * partition_count(d - g2)
        k += 1
    return total

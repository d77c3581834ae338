"""Pole-basis representation of symmetric n-differentials."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Mapping, Sequence, Tuple

__all__ = ["PoleBasisForm", "pole_bound"]

Key = Tuple[int, ...]


def pole_bound(g: int, n: int) -> int:
    """Maximal pole order in any single variable of a stable omega_{g,n}."""
    return 6 * g - 4 + 2 * n


@dataclass
class PoleBasisForm:
    """``sum_k c_k prod_i dz_i / (z_i - 2)^{k_i}`` for a stable omega_{g,n}."""

    g: int
    n: int
    coefficients: Dict[Key, Fraction] = field(default_factory=dict)
    bound: int = 0

    def __post_init__(self):
        self.coefficients = {tuple(k): Fraction(c) for k, c in self.coefficients.items() if c}
        for k in self.coefficients:
            if len(k) != self.n or min(k) < 1:
                raise ValueError(f"bad pole index {k} for n = {self.n}")
        if not self.bound:
            self.bound = pole_bound(self.g, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PoleBasisForm):
            return NotImplemented
        return (self.g, self.n, self.coefficients) == (other.g, other.n, other.coefficients)

    def max_pole(self) -> int:
        return max((max(k) for k in self.coefficients), default=0)

    def is_symmetric(self) -> bool:
        for k, c in self.coefficients.items():
            for perm in set(itertools.permutations(k)):
                if self.coefficients.get(perm, Fraction(0)) != c:
                    return False
        return True

    def within_bound(self) -> bool:
        return self.max_pole() <= self.bound

    def perturbed(self, key: Sequence[int], delta: Fraction = Fraction(1)) -> "PoleBasisForm":
        coeffs = dict(self.coefficients)
        key = tuple(key)
        coeffs[key] = coeffs.get(key, Fraction(0)) + delta
        return PoleBasisForm(self.g, self.n, coeffs, self.bound)

    def evaluate(self, points: Sequence[Fraction]) -> Fraction:
        """Value of the dz_1...dz_n coefficient at a point away from z = 2."""
        total = Fraction(0)
        shifted = [Fraction(p) - 2 for p in points]
        for k, c in self.coefficients.items():
            term = c
            for ki, w in zip(k, shifted):
                term /= w ** ki
            total += term
        return total

    def sorted_items(self):
        return sorted(self.coefficients.items())

    def to_json(self) -> Dict[str, Any]:
        return {
            "g": self.g,
            "n": self.n,
            "terms": [{"k": list(k), "num": str(c.numerator), "den": str(c.denominator)}
                      for k, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "PoleBasisForm":
        coeffs = {tuple(t["k"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]}
        return cls(int(data["g"]), int(data["n"]), coeffs)

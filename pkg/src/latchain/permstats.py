"""Descent and inversion statistics over full symmetric groups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Tuple

from .polynomial import ExactPoly, Scalar

MAX_PERMUTATION_SIZE = 10


def descents(sigma: Tuple[int, ...]) -> int:
    return sum(1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def inversions(sigma: Tuple[int, ...]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


@dataclass(frozen=True)
class PermStats:
    """The (descents, inversions) table of one symmetric group."""

    n: int
    table: Tuple[Tuple[int, int], ...]

    @classmethod
    def enumerate(cls, n: int) -> "PermStats":
        if not 1 <= n <= MAX_PERMUTATION_SIZE:
            raise ValueError(f"permutation size out of range: {n}")
        table = tuple(
            (descents(sigma), inversions(sigma))
            for sigma in permutations(range(1, n + 1))
        )
        return cls(n, table)

    def descent_polynomial(self) -> ExactPoly:
        counts = [0] * self.n
        for des, _ in self.table:
            counts[des] += 1
        return ExactPoly(counts)

    def weighted_descent_polynomial(self, q: Scalar) -> ExactPoly:
        """sum over permutations of q^inversions * t^descents."""
        coeffs: list = [0] * self.n
        for des, inv in self.table:
            coeffs[des] += Fraction(q) ** inv
        return ExactPoly(coeffs)


def eulerian(n: int) -> ExactPoly:
    """Descent-count generating polynomial of the symmetric group on n letters."""
    return PermStats.enumerate(n).descent_polynomial()


def q_eulerian(n: int, q: Scalar) -> ExactPoly:
    """Inversion-weighted descent polynomial at a fixed rational q."""
    return PermStats.enumerate(n).weighted_descent_polynomial(q)

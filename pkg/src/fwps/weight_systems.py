"""Weight systems ``Q = (q_0, ..., q_d)`` and their invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True)
class WeightSystem:
    """An ordered tuple of positive integer weights of length ``d + 1``.

    Order is preserved; it is tied to vertex order in
    :mod:`fwps.simplex`.  Use :meth:`same_up_to_permutation` to compare
    weight systems as multisets.
    """

    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        weights = tuple(int(w) for w in weights)
        if len(weights) < 2:
            raise ValueError("a weight system needs at least two weights")
        if any(w < 1 for w in weights):
            raise ValueError(f"weights must be positive, got {weights}")
        object.__setattr__(self, "weights", weights)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.weights)) + ")"

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    def total_weight(self) -> int:
        return sum(self.weights)

    def factor(self) -> int:
        return math.gcd(*self.weights)

    def reduce(self) -> "WeightSystem":
        lam = self.factor()
        return WeightSystem(w // lam for w in self.weights)

    def is_reduced(self) -> bool:
        return self.factor() == 1

    def is_well_formed(self) -> bool:
        """Every ``d`` of the ``d + 1`` weights are coprime."""
        w = self.weights
        return all(math.gcd(*(w[:i] + w[i + 1:])) == 1 for i in range(len(w)))

    def index(self) -> int:
        """Smallest ``k >= 1`` with ``q_i | k |Q|`` for every ``i``.

        ``q_i | k|Q|`` iff ``q_i / gcd(q_i, |Q|)`` divides ``k``, hence the
        lcm below.
        """
        total = self.total_weight()
        return math.lcm(*(w // math.gcd(w, total) for w in self.weights))

    def degree(self, lambda_p: int = 1) -> Fraction:
        """Anticanonical degree ``|Q_red|^d / (lambda * prod(Q_red))``.

        ``lambda`` is ``lambda_p * factor()``: an unreduced weight system is
        read as the weight system of a simplex whose factor is its gcd, and
        ``lambda_p`` scales on top of that.
        """
        if lambda_p < 1:
            raise ValueError("lambda_p must be positive")
        red = self.reduce()
        lam = lambda_p * self.factor()
        return Fraction(red.total_weight() ** self.dim, lam * math.prod(red.weights))

    def sorted(self, reverse: bool = True) -> "WeightSystem":
        return WeightSystem(sorted(self.weights, reverse=reverse))

    def same_up_to_permutation(self, other: "WeightSystem") -> bool:
        return sorted(self.weights) == sorted(WeightSystem(other).weights)


def parse_weights(text: str) -> WeightSystem:
    """Parse ``"6,4,1,1"`` into a weight system."""
    try:
        values = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise ValueError(f"malformed weight list {text!r}") from exc
    return WeightSystem(values)

"""Unit-fraction partitions of ``1/iota`` and their link to weight systems.

A uf-partition of ``iota`` is a tuple ``(a_1, ..., a_n)`` of positive
integers with ``sum(1/a_k) == 1/iota``.  Partitions are stored in
ascending order.  :func:`a_of_q` and :func:`q_of_a` implement the
correspondence with weight systems; :func:`paired_parts` gives the
unsorted form of ``a_of_q`` where ``a_i`` sits next to ``q_i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from fwps.exact_arith import det_exact
from fwps.weight_systems import WeightSystem


class NotAUfPartition(ValueError):
    pass


@dataclass(frozen=True, order=True)
class UfPartition:
    iota: int
    parts: tuple[int, ...]

    def __init__(self, iota: int, parts: Iterable[int]):
        iota = int(iota)
        parts = tuple(sorted(int(a) for a in parts))
        if iota < 1:
            raise ValueError("iota must be positive")
        if len(parts) < 2:
            raise NotAUfPartition("uf-partitions of length < 2 are not supported")
        if parts[0] < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        if sum(Fraction(1, a) for a in parts) != Fraction(1, iota):
            raise NotAUfPartition(f"not a uf-partition of 1/{iota}: {parts}")
        object.__setattr__(self, "iota", iota)
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return f"1/{self.iota} = " + " + ".join(f"1/{a}" for a in self.parts)

    def total_weight(self) -> int:
        return math.lcm(*self.parts)

    def factor(self) -> int:
        return math.gcd(self.iota, *self.parts)

    def reduce(self) -> "UfPartition":
        lam = self.factor()
        return UfPartition(self.iota // lam, (a // lam for a in self.parts))

    def is_reduced(self) -> bool:
        return self.factor() == 1

    def is_well_formed(self) -> bool:
        """Each part divides the lcm of the remaining parts."""
        a = self.parts
        return all(math.lcm(*(a[:i] + a[i + 1:])) % a[i] == 0 for i in range(len(a)))

    def product(self) -> int:
        return math.prod(self.parts)

    def leading_product(self) -> int:
        """``a_1 * ... * a_(n-1)``, all parts but the largest."""
        return math.prod(self.parts[:-1])

    def volume_value(self) -> int:
        """``a_1 * ... * a_n / lcm(a_1, ..., a_n)``; always an integer."""
        return self.product() // self.total_weight()


# Function-style aliases of the methods above.
def new_ufp(iota: int, parts: Iterable[int]) -> UfPartition:
    return UfPartition(iota, parts)


def total_weight_t(a: UfPartition) -> int:
    return a.total_weight()


def factor_lambda(a: UfPartition) -> int:
    return a.factor()


def reduce_ufp(a: UfPartition) -> UfPartition:
    return a.reduce()


def is_well_formed_ufp(a: UfPartition) -> bool:
    return a.is_well_formed()


def paired_parts(q: WeightSystem) -> tuple[int, ...]:
    """``(iota |Q| / q_0, ..., iota |Q| / q_d)`` in weight order."""
    q = WeightSystem(q)
    scaled = q.index() * q.total_weight()
    return tuple(scaled // w for w in q.weights)


def a_of_q(q: WeightSystem) -> UfPartition:
    """The reduced uf-partition of ``index(q)`` attached to a weight system."""
    q = WeightSystem(q)
    return UfPartition(q.index(), paired_parts(q))


def q_of_a(a: UfPartition | Sequence[int]) -> WeightSystem:
    """``(t_A / a_1, ..., t_A / a_n)`` taken over the ascending parts.

    A plain integer sequence is accepted as long as its reciprocals sum to
    ``1/iota`` for some positive integer ``iota``; its order is kept.
    """
    parts = a.parts if isinstance(a, UfPartition) else tuple(int(x) for x in a)
    t = math.lcm(*parts)
    return WeightSystem(t // x for x in parts)


def det_g_matrix_rows(iota: int, parts: Sequence[int]) -> list[list[int]]:
    """Rows of ``G(iota; a_1..a_n)``: ``a_k - iota`` on the diagonal, ``-iota`` elsewhere."""
    n = len(parts)
    return [[(parts[i] - iota) if i == j else -iota for j in range(n)]
            for i in range(n)]


def det_g_closed(iota: int, parts: Sequence[int]) -> int:
    """``a_1...a_n - iota * sum_i prod_{j != i} a_j``."""
    total = math.prod(parts)
    cofactors = sum(math.prod(parts[:i] + parts[i + 1:]) for i in range(len(parts)))
    return total - iota * cofactors


def det_g_matrix(iota: int, parts: Sequence[int]) -> int:
    return det_exact(det_g_matrix_rows(iota, list(parts)))


def region_violations(iota: int, parts: Sequence[int]) -> list[str]:
    """Conditions violated by the reciprocal tuple of ascending ``parts``.

    Checks, for ``x_k = 1/a_k``:

    * A1: ``x_1 >= ... >= x_n >= 0``
    * A2: ``sum(x) == 1/iota``
    * A3: ``x_1 * ... * x_k <= iota * (x_(k+1) + ... + x_n)`` for ``k < n``

    An empty list means the tuple lies in the region.
    """
    x = [Fraction(1, a) for a in parts]
    bad = []
    if any(x[k] < x[k + 1] for k in range(len(x) - 1)) or x[-1] < 0:
        bad.append("A1")
    if sum(x) != Fraction(1, iota):
        bad.append("A2")
    head = Fraction(1)
    tail = sum(x)
    for k in range(len(x) - 1):
        head *= x[k]
        tail -= x[k]
        if head > iota * tail:
            bad.append(f"A3[k={k + 1}]")
    return bad


def in_region(iota: int, parts: Sequence[int]) -> bool:
    return not region_violations(iota, parts)

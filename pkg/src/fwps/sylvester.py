"""Sylvester-type sequences, extremal weight systems and the degree bound table.

For an index ``iota`` the sequence starts at ``s_1 = iota + 1`` and
continues with ``s_(k+1) = s_k (s_k - 1) + 1``; ``t_k = s_k - 1``, which
also equals ``iota * s_1 * ... * s_(k-1)``.  The terms grow doubly
exponentially, so they are memoized per ``iota`` and extended lazily.

The extremal weight system ``Q_{iota,d}`` is written ``Q_d^iota`` in some
places; :func:`extremal_weights` is the only name used here.
"""

from __future__ import annotations

import enum
import math
import threading
from fractions import Fraction

from fwps.uf_partitions import UfPartition, q_of_a
from fwps.weight_systems import WeightSystem


class SylvesterSeq:
    """Memoized ``s_(iota,k)`` and ``t_(iota,k)`` for one ``iota`` (1-based ``k``)."""

    def __init__(self, iota: int):
        if iota < 1:
            raise ValueError("iota must be positive")
        self.iota = iota
        self._s = [iota + 1]
        self._lock = threading.Lock()

    def _extend(self, k: int) -> None:
        with self._lock:
            while len(self._s) < k:
                last = self._s[-1]
                self._s.append(last * (last - 1) + 1)

    def s(self, k: int) -> int:
        if k < 1:
            raise ValueError("sequence index starts at 1")
        if k > len(self._s):
            self._extend(k)
        return self._s[k - 1]

    def t(self, k: int) -> int:
        return self.s(k) - 1

    def s_terms(self, k: int) -> list[int]:
        if k > 0:
            self.s(k)
        return self._s[:k]


_SEQUENCES: dict[int, SylvesterSeq] = {}
_SEQUENCES_LOCK = threading.Lock()


def sequence(iota: int) -> SylvesterSeq:
    seq = _SEQUENCES.get(iota)
    if seq is None:
        with _SEQUENCES_LOCK:
            seq = _SEQUENCES.setdefault(iota, SylvesterSeq(iota))
    return seq


def s_term(iota: int, k: int) -> int:
    return sequence(iota).s(k)


def t_term(iota: int, k: int) -> int:
    return sequence(iota).t(k)


def syl_partition(iota: int, n: int) -> UfPartition:
    """Enlarged Sylvester partition ``(s_1, ..., s_(n-2), 2 t_(n-1), 2 t_(n-1))``."""
    if n < 3:
        raise ValueError("enlarged Sylvester partitions need length n >= 3")
    seq = sequence(iota)
    tail = 2 * seq.t(n - 1)
    return UfPartition(iota, seq.s_terms(n - 2) + [tail, tail])


def extremal_weights(iota: int, d: int) -> WeightSystem:
    """``Q_{iota,d} = (2t_d/s_1, ..., 2t_d/s_(d-1), 1, 1)``.

    Built from the closed form and cross-checked against
    ``q_of_a(syl_partition(iota, d + 1))``.
    """
    if d < 2:
        raise ValueError("extremal weight systems need d >= 2")
    seq = sequence(iota)
    top = 2 * seq.t(d)
    direct = WeightSystem([top // s for s in seq.s_terms(d - 1)] + [1, 1])
    via_partition = q_of_a(syl_partition(iota, d + 1))
    if direct != via_partition:
        raise AssertionError(
            f"extremal weight constructions disagree: {direct} vs {via_partition}"
        )
    return direct


def degree_bound(iota: int, d: int) -> Fraction:
    """Sharp upper bound on the anticanonical degree for dimension ``d`` and index ``iota``."""
    if iota < 1 or d < 1:
        raise ValueError("need iota >= 1 and d >= 1")
    if d == 1:
        return Fraction(2)
    if (iota, d) == (1, 2):
        return Fraction(9)
    t = t_term(iota, d)
    return Fraction(2 * t * t, iota ** (d + 1))


def attainers(iota: int, d: int) -> list[WeightSystem]:
    """Weighted projective spaces attaining :func:`degree_bound`, as weight systems."""
    if iota < 1 or d < 1:
        raise ValueError("need iota >= 1 and d >= 1")
    if d == 1:
        return [WeightSystem((1, 1))]
    if (iota, d) == (1, 2):
        return [WeightSystem((1, 1, 1))]
    if (iota, d) == (1, 3):
        return [WeightSystem((3, 1, 1, 1)), WeightSystem((6, 4, 1, 1))]
    return [extremal_weights(iota, d)]


class InequalityStatus(enum.Enum):
    STRICT = "strict"
    EQUALITY = "equality"
    EXCEPTION = "exception"


def product_inequality_sides(iota: int, n: int, r: int) -> tuple[int, int]:
    """``((r+1)^r t_(n-r+1)^(r+1), 2 t_n^2)``."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    seq = sequence(iota)
    lhs = (r + 1) ** r * seq.t(n - r + 1) ** (r + 1)
    rhs = 2 * seq.t(n) ** 2
    return lhs, rhs


def check_product_inequality(iota: int, n: int, r: int) -> InequalityStatus:
    """Classify ``(r+1)^r t_(n-r+1)^(r+1) <= 2 t_n^2``; EXCEPTION means it fails."""
    lhs, rhs = product_inequality_sides(iota, n, r)
    if lhs < rhs:
        return InequalityStatus.STRICT
    if lhs == rhs:
        return InequalityStatus.EQUALITY
    return InequalityStatus.EXCEPTION


def expected_extremizers(iota: int, n: int) -> list[UfPartition]:
    """Ascending partitions maximizing ``a_1 ... a_(n-1)`` among length-``n`` partitions of ``1/iota``.

    Valid for ``n >= 3`` and ``(iota, n) != (1, 3)``.
    """
    if n < 3 or (iota, n) == (1, 3):
        raise ValueError(f"no extremizer classification for (iota, n) = ({iota}, {n})")
    found = [syl_partition(iota, n)]
    if (iota, n) == (2, 3):
        found.append(UfPartition(2, (6, 6, 6)))
    if (iota, n) == (1, 4):
        found.append(UfPartition(1, (2, 6, 6, 6)))
    return sorted(found)


def leading_product_bound(iota: int, n: int) -> Fraction:
    """``2 t_(n-1)^2 / iota``, the bound on ``a_1 ... a_(n-1)``."""
    t = t_term(iota, n - 1)
    return Fraction(2 * t * t, iota)


def bound_table(iotas, dims) -> list[dict]:
    """Rows ``{iota, d, bound, attainers}`` for rendering the theorem table."""
    return [
        {"iota": i, "d": d, "bound": degree_bound(i, d), "attainers": attainers(i, d)}
        for d in dims
        for i in iotas
    ]


def sequences_consistent(iota: int, k: int) -> bool:
    """``s_k - 1 == iota * s_1 ... s_(k-1)``."""
    seq = sequence(iota)
    return seq.s(k) - 1 == iota * math.prod(seq.s_terms(k - 1))


def expected_inequality_status(iota: int, n: int, r: int) -> InequalityStatus:
    """Classification claimed for the product inequality at ``(iota, n, r)``."""
    if (iota, n, r) == (1, 2, 2):
        return InequalityStatus.EXCEPTION
    if r == 1 or (iota, n, r) in {(1, 3, 2), (2, 2, 2)}:
        return InequalityStatus.EQUALITY
    return InequalityStatus.STRICT

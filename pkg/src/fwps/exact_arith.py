"""Exact integer and rational arithmetic.

Python integers are already arbitrary precision and ``fractions.Fraction``
keeps rationals in lowest terms with a positive denominator, so both are
used directly.  What lives here is the integer linear algebra the rest of
the package needs: fraction-free determinants, exact solves and a
canonical basis of the integer kernel of a weight vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

BigRat = Fraction


def gcd_many(values: Iterable[int]) -> int:
    """Greatest common divisor of a nonempty list; ``gcd(0, ..., 0) == 0``."""
    values = list(values)
    if not values:
        raise ValueError("empty input")
    return math.gcd(*values)


def lcm_many(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise ValueError("empty input")
    if any(v < 1 for v in values):
        raise ValueError(f"lcm_many expects positive integers, got {values}")
    return math.lcm(*values)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls.from_rows(columns).transpose()

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)])

    def delete_column(self, j: int) -> "IntMatrix":
        return IntMatrix.from_rows(
            [r[:j] + r[j + 1:] for r in (self.row(i) for i in range(self.rows))]
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(
            sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows)
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def _as_rows(m) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return m.to_rows()
    return [list(r) for r in m]


def det_exact(m) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Every intermediate value is an integer (each division is exact), so
    entry sizes stay bounded by Hadamard-type minors.  Accepts an
    :class:`IntMatrix` or a list of integer rows.
    """
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve_exact(m, rhs: Sequence[int]) -> tuple[Fraction, ...]:
    """Solve ``m @ x == rhs`` over the rationals; raises on a singular ``m``."""
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("solve_exact needs a square matrix")
    if len(rhs) != n:
        raise ValueError("dimension mismatch")
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(a, rhs)]
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise ValueError("singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        pk = aug[k]
        inv = 1 / pk[k]
        for j in range(k, n + 1):
            pk[j] *= inv
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                ri = aug[i]
                for j in range(k, n + 1):
                    ri[j] -= f * pk[j]
    return tuple(aug[i][n] for i in range(n))


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    Zero rows are dropped.  Pivots are positive and entries above a pivot
    are reduced into ``[0, pivot)``.  The result depends only on the row
    lattice, which is what makes kernel bases canonical.
    """
    a = [list(r) for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    out_rows = 0
    for col in range(ncols):
        if out_rows == len(a):
            break
        for i in range(out_rows + 1, len(a)):
            if a[i][col] == 0:
                continue
            x, y = a[out_rows][col], a[i][col]
            g, s, t = _ext_gcd(x, y)
            u, v = x // g, y // g
            top, low = a[out_rows], a[i]
            a[out_rows] = [s * p + t * r for p, r in zip(top, low)]
            a[i] = [-v * p + u * r for p, r in zip(top, low)]
        if a[out_rows][col] == 0:
            continue
        if a[out_rows][col] < 0:
            a[out_rows] = [-x for x in a[out_rows]]
        piv = a[out_rows][col]
        for i in range(out_rows):
            f = a[i][col] // piv
            if f:
                a[i] = [p - f * r for p, r in zip(a[i], a[out_rows])]
        out_rows += 1
    return [r for r in a[:out_rows] if any(r)]


def maximal_minors(m: IntMatrix) -> list[int]:
    """Signed minors of a ``d x (d+1)`` matrix, minor ``i`` omits column ``i``."""
    if m.cols != m.rows + 1:
        raise ValueError("expected a d x (d+1) matrix")
    return [det_exact(m.delete_column(i)) for i in range(m.cols)]


def kernel_complement(q: Sequence[int]) -> IntMatrix:
    """Integer ``d x (d+1)`` matrix ``B`` with ``B q = 0`` and ``B`` onto ``Z^d``.

    The rows are the Hermite normal form of a basis of the lattice
    ``{x in Z^(d+1) : <x, q> = 0}``, so the output is canonical.
    """
    q = [int(x) for x in q]
    if len(q) < 2:
        raise ValueError("need at least two weights")
    if math.gcd(*q) != 1:
        raise ValueError("weights not reduced")
    n = len(q)
    # Row-reduce [q | I] until q becomes (1, 0, ..., 0); the transform is
    # unimodular so rows 1..n-1 of it are a kernel basis.
    x = list(q)
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(1, n):
        if x[i] == 0:
            continue
        g, s, t = _ext_gcd(x[0], x[i])
        a, b = x[0] // g, x[i] // g
        r0, ri = u[0], u[i]
        u[0] = [s * p + t * r for p, r in zip(r0, ri)]
        u[i] = [-b * p + a * r for p, r in zip(r0, ri)]
        x[0], x[i] = g, 0
    basis = hermite_normal_form(u[1:])
    return IntMatrix.from_rows(basis)

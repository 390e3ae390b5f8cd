"""Lattice simplices with the origin in their interior.

A fake weighted projective space is given here by the vertices of its
simplex in lattice coordinates.  Everything is computed from the vertices:
weight system, factor, dual simplex, Gorenstein index, degree and the
associated uf-partition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from fwps.exact_arith import (
    IntMatrix,
    det_exact,
    kernel_complement,
    solve_exact,
)
from fwps.uf_partitions import UfPartition, a_of_q
from fwps.weight_systems import WeightSystem


class DegenerateSimplex(ValueError):
    pass


@dataclass(frozen=True)
class LatticeSimplex:
    """``d + 1`` integer vertices in ``Z^d`` spanning a simplex around the origin."""

    vertices: tuple[tuple[int, ...], ...]
    signed_weights: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, vertices: Sequence[Sequence[int]]):
        verts = tuple(tuple(int(x) for x in v) for v in vertices)
        if len(verts) < 2:
            raise DegenerateSimplex("need at least two vertices")
        d = len(verts) - 1
        if any(len(v) != d for v in verts):
            raise DegenerateSimplex(
                f"{len(verts)} vertices must have {d} coordinates each"
            )
        signed = _signed_weights(verts)
        if any(c == 0 for c in signed):
            raise DegenerateSimplex("vertices are not affinely independent or the "
                                    "origin lies on a facet")
        if not (all(c > 0 for c in signed) or all(c < 0 for c in signed)):
            raise DegenerateSimplex("origin is not in the interior")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "signed_weights", signed)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def primitive_vertices(self) -> bool:
        return all(math.gcd(*v) == 1 for v in self.vertices)

    def warnings(self) -> list[str]:
        return [] if self.primitive_vertices() else ["vertices not primitive"]

    def transform(self, matrix: Sequence[Sequence[int]]) -> "LatticeSimplex":
        """Image under the integer linear map ``matrix`` (acting on column vectors)."""
        m = IntMatrix.from_rows(matrix)
        return LatticeSimplex([m.apply(v) for v in self.vertices])


def _signed_weights(verts) -> tuple[int, ...]:
    # c_i = (-1)^i det(vertex rows without row i) satisfies sum c_i v_i = 0.
    return tuple(
        (-1) ** i * det_exact([list(v) for j, v in enumerate(verts) if j != i])
        for i in range(len(verts))
    )


def parse_vertices(text: str) -> LatticeSimplex:
    """Parse ``"1,0;-1,2;-1,-2"`` into a simplex."""
    try:
        verts = [[int(x) for x in chunk.split(",")]
                 for chunk in text.replace(" ", "").split(";") if chunk]
    except ValueError as exc:
        raise ValueError(f"malformed vertex string {text!r}") from exc
    return LatticeSimplex(verts)


def simplex_from_weights(q: WeightSystem | Sequence[int]) -> LatticeSimplex:
    """Simplex whose weight system is ``q``, for ``q`` reduced and well-formed.

    Vertices are the columns of :func:`kernel_complement`, so
    ``sum q_i v_i == 0``.  The result is unique only up to lattice
    isomorphism.
    """
    q = WeightSystem(q)
    if not q.is_reduced():
        raise ValueError(f"weight system {q} is not reduced")
    if not q.is_well_formed():
        raise ValueError(f"weight system {q} is not well-formed")
    b = kernel_complement(q.weights)
    return LatticeSimplex([b.column(j) for j in range(b.cols)])


def weights_of_simplex(p: LatticeSimplex) -> WeightSystem:
    """``Q_P``: absolute values of the maximal minors of the vertex matrix.

    Its gcd ``factor()`` is the index of the sublattice spanned by the
    vertices.
    """
    return WeightSystem(abs(c) for c in p.signed_weights)


def factor_of_simplex(p: LatticeSimplex) -> int:
    return weights_of_simplex(p).factor()


@dataclass(frozen=True)
class DualSimplex:
    """Facet normals of a simplex; ``normals[i]`` belongs to the facet omitting ``v_i``."""

    normals: tuple[tuple[Fraction, ...], ...]

    def denominators_lcm(self) -> int:
        return math.lcm(*(x.denominator for u in self.normals for x in u))


def dual_simplex(p: LatticeSimplex) -> DualSimplex:
    d = p.dim
    normals = []
    for i in range(d + 1):
        rows = [list(v) for j, v in enumerate(p.vertices) if j != i]
        try:
            normals.append(solve_exact(rows, [-1] * d))
        except ValueError as exc:
            raise DegenerateSimplex(f"facet {i} is degenerate") from exc
    return DualSimplex(tuple(normals))


def pairing(u: Sequence[Fraction], v: Sequence[int]) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def gorenstein_index(p: LatticeSimplex, dual: DualSimplex | None = None) -> int:
    """Smallest ``k >= 1`` with ``k P*`` a lattice polytope."""
    dual = dual or dual_simplex(p)
    return dual.denominators_lcm()


def degree_geometric(p: LatticeSimplex, dual: DualSimplex | None = None) -> Fraction:
    """Normalized volume of the dual simplex, i.e. the anticanonical degree."""
    dual = dual or dual_simplex(p)
    k = dual.denominators_lcm()
    base = dual.normals[0]
    # k * u is integral, so the determinant stays in the integers.
    rows = [[int((x - y) * k) for x, y in zip(u, base)] for u in dual.normals[1:]]
    return Fraction(abs(det_exact(rows)), k ** p.dim)


def ufp_of_simplex(p: LatticeSimplex, dual: DualSimplex | None = None) -> UfPartition:
    """``A(P) = (iota |Q_P| / q_0, ..., iota |Q_P| / q_d)`` with ``iota = iota_P``.

    Also asserts ``A(P)_red == A(Q_P)`` and ``iota_P |Q_P| == lambda_P t_A(P)``;
    a failure means a bug, not bad input.
    """
    dual = dual or dual_simplex(p)
    iota = gorenstein_index(p, dual)
    q = weights_of_simplex(p)
    scaled = iota * q.total_weight()
    if any(scaled % w for w in q.weights):
        raise AssertionError(f"iota|Q|/q_i is not integral for {q}, iota={iota}")
    a = UfPartition(iota, (scaled // w for w in q.weights))
    if a.reduce() != a_of_q(q):
        raise AssertionError(f"A(P)_red != A(Q_P) for {q}")
    if scaled != q.factor() * a.total_weight():
        raise AssertionError(f"iota |Q_P| != lambda_P t_A for {q}")
    return a


@dataclass(frozen=True)
class VolumeCheck:
    holds: bool
    lhs: Fraction
    rhs: Fraction
    factor: int
    iota: int
    degree: Fraction
    partition: UfPartition


def check_volume_formula(p: LatticeSimplex) -> VolumeCheck:
    """Compare ``lambda_P * iota_P^d * Vol(P*)`` against ``prod(A) / lcm(A)``."""
    dual = dual_simplex(p)
    iota = gorenstein_index(p, dual)
    deg = degree_geometric(p, dual)
    lam = factor_of_simplex(p)
    a = ufp_of_simplex(p, dual)
    lhs = lam * iota ** p.dim * deg
    rhs = Fraction(a.volume_value())
    return VolumeCheck(lhs == rhs, lhs, rhs, lam, iota, deg, a)


@dataclass(frozen=True)
class SimplexAnalysis:
    weights: WeightSystem
    factor: int
    iota: int
    degree: Fraction
    partition: UfPartition
    dual: DualSimplex
    warnings: tuple[str, ...]


def analyze_simplex(p: LatticeSimplex) -> SimplexAnalysis:
    dual = dual_simplex(p)
    q = weights_of_simplex(p)
    return SimplexAnalysis(
        weights=q,
        factor=q.factor(),
        iota=gorenstein_index(p, dual),
        degree=degree_geometric(p, dual),
        partition=ufp_of_simplex(p, dual),
        dual=dual,
        warnings=tuple(p.warnings()),
    )

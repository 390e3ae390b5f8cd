"""Exhaustive search over uf-partitions of ``1/iota`` of fixed length.

The search walks ascending tuples ``a_1 <= ... <= a_n``.  With a remaining
fraction ``p/q`` (lowest terms) and ``m`` slots left, the next part ``a``
must satisfy ``1/a < p/q`` (the other ``m - 1`` slots need room) and
``m/a >= p/q`` (``a`` is the smallest of the remaining parts), so

    max(lo, q // p + 1) <= a <= (m * q) // p.

With one slot left the part is forced: ``a = q`` iff ``p == 1``.  Only
integer arithmetic is used.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from fwps.sylvester import (
    attainers,
    degree_bound,
    expected_extremizers,
    leading_product_bound,
)
from fwps.uf_partitions import UfPartition, q_of_a, region_violations
from fwps.weight_systems import WeightSystem

DEFAULT_BUDGET = 10**8


class EnumerationBudgetExceeded(RuntimeError):
    def __init__(self, iota: int, n: int, budget: int, frontier: tuple[int, ...]):
        self.iota, self.n, self.budget, self.frontier = iota, n, budget, frontier
        super().__init__(
            f"search for (iota={iota}, n={n}) exceeded {budget} nodes; "
            f"partial frontier {list(frontier)}"
        )


class BoundStatus(enum.Enum):
    MATCHES = "matches"
    EXCEEDS = "exceeds"
    BELOW = "below"


def _search(iota: int, n: int, p: int, q: int, m: int, lo: int,
            prefix: list[int], budget: int, out: list, nodes: list[int]) -> None:
    nodes[0] += 1
    if nodes[0] > budget:
        raise EnumerationBudgetExceeded(iota, n, budget, tuple(prefix))
    if m == 1:
        if p == 1 and q >= lo:
            out.append(tuple(prefix) + (q,))
        return
    start = max(lo, q // p + 1)
    stop = (m * q) // p
    for a in range(start, stop + 1):
        num = p * a - q
        den = q * a
        g = math.gcd(num, den)
        prefix.append(a)
        _search(iota, n, num // g, den // g, m - 1, a, prefix, budget, out, nodes)
        prefix.pop()


def _first_level(iota: int, n: int) -> range:
    return range(iota + 1, n * iota + 1)


def _branch(args):
    iota, n, a, budget = args
    out: list = []
    nodes = [0]
    num, den = a - iota, iota * a
    g = math.gcd(num, den)
    _search(iota, n, num // g, den // g, n - 1, a, [a], budget, out, nodes)
    return out, nodes[0]


def search_partitions(iota: int, n: int, budget: int = DEFAULT_BUDGET,
                      workers: int = 1) -> tuple[list[tuple[int, ...]], int]:
    """All ascending tuples with reciprocal sum ``1/iota``, and the node count."""
    if iota < 1 or n < 2:
        raise ValueError("need iota >= 1 and n >= 2")
    if workers <= 1:
        out: list = []
        nodes = [0]
        _search(iota, n, 1, iota, n, 1, [], budget, out, nodes)
        return out, nodes[0]
    # Branches on a_1 run independently and are merged in order of a_1, so
    # the result equals the sequential one.  The budget is checked on the
    # total, which is exactly the sequential node count.
    tasks = [(iota, n, a, budget) for a in _first_level(iota, n)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_branch, tasks))
    out = [t for part, _ in results for t in part]
    total = 1 + sum(c for _, c in results)
    if total > budget:
        raise EnumerationBudgetExceeded(iota, n, budget, ())
    return out, total


@dataclass(frozen=True)
class EnumerationReport:
    iota: int
    n: int
    partitions: tuple[UfPartition, ...]
    count: int
    max_product: int
    extremizers: tuple[UfPartition, ...]
    bound_value: Fraction
    bound_status: BoundStatus
    nodes: int = field(default=0, compare=False)


def enumerate_partitions(iota: int, n: int, budget: int = DEFAULT_BUDGET,
                         workers: int = 1) -> EnumerationReport:
    """Enumerate every uf-partition of ``1/iota`` of length ``n``.

    ``max_product`` is the maximum of ``a_1 ... a_(n-1)`` over the ascending
    partitions and ``bound_value`` is ``2 t_(iota,n-1)^2 / iota``.
    """
    tuples, nodes = search_partitions(iota, n, budget, workers)
    partitions = tuple(UfPartition(iota, t) for t in tuples)
    best = max(p.leading_product() for p in partitions)
    extremizers = tuple(p for p in partitions if p.leading_product() == best)
    bound = leading_product_bound(iota, n)
    if best == bound:
        status = BoundStatus.MATCHES
    elif best > bound:
        status = BoundStatus.EXCEEDS
    else:
        status = BoundStatus.BELOW
    return EnumerationReport(iota, n, partitions, len(partitions), best,
                             extremizers, bound, status, nodes)


@dataclass(frozen=True)
class SharpnessVerdict:
    report: EnumerationReport
    expected_extremizers: tuple[UfPartition, ...] | None
    exception: bool
    ok: bool

    @property
    def max_product(self) -> int:
        return self.report.max_product

    @property
    def extremizers(self) -> tuple[UfPartition, ...]:
        return self.report.extremizers


def verify_sharpness(iota: int, n: int, budget: int = DEFAULT_BUDGET,
                     workers: int = 1) -> SharpnessVerdict:
    """Check the bound on ``a_1 ... a_(n-1)`` and the exact set of extremizers.

    ``(iota, n) == (1, 3)`` is the documented exception: there the maximum
    exceeds the bound, and the verdict is ok when enumeration shows that.
    """
    if n < 3:
        raise ValueError("sharpness is stated for n >= 3")
    report = enumerate_partitions(iota, n, budget, workers)
    if (iota, n) == (1, 3):
        return SharpnessVerdict(report, None, True,
                                report.bound_status is BoundStatus.EXCEEDS)
    expected = tuple(expected_extremizers(iota, n))
    ok = (report.bound_status is BoundStatus.MATCHES
          and tuple(sorted(report.extremizers)) == expected)
    return SharpnessVerdict(report, expected, False, ok)


@dataclass(frozen=True)
class RegionVerdict:
    iota: int
    n: int
    checked: int
    failures: tuple[tuple[UfPartition, tuple[str, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_region(iota: int, n: int, budget: int = DEFAULT_BUDGET,
                  report: EnumerationReport | None = None) -> RegionVerdict:
    """Check conditions A1-A3 on the reciprocals of every enumerated partition."""
    report = report or enumerate_partitions(iota, n, budget)
    failures = []
    for part in report.partitions:
        bad = region_violations(iota, part.parts)
        if bad:
            failures.append((part, tuple(bad)))
    return RegionVerdict(iota, n, report.count, tuple(failures))


@dataclass(frozen=True)
class DegreeMaximum:
    iota: int
    d: int
    max_degree: Fraction
    witnesses: tuple[UfPartition, ...]
    reduced_witnesses: tuple[UfPartition, ...]
    discarded: tuple[UfPartition, ...]
    witness_weights: tuple[WeightSystem, ...]
    expected: Fraction
    matches_bound: bool
    matches_attainers: bool
    warnings: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.matches_bound and self.matches_attainers


def max_degree_over_partitions(iota: int, d: int, budget: int = DEFAULT_BUDGET,
                               workers: int = 1) -> DegreeMaximum:
    """Maximize ``prod(A) / (iota^d lcm(A))`` over partitions of length ``d + 1``.

    Non-reduced maximizers belong to no weighted projective space of index
    ``iota``; they are kept apart in ``discarded``.  The remaining ones are
    mapped to weight systems and compared with the table's attainers.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    report = enumerate_partitions(iota, d + 1, budget, workers)
    scale = iota ** d
    values = [Fraction(p.volume_value(), scale) for p in report.partitions]
    best = max(values)
    witnesses = tuple(p for p, v in zip(report.partitions, values) if v == best)
    reduced = tuple(p for p in witnesses if p.is_reduced())
    discarded = tuple(p for p in witnesses if not p.is_reduced())
    weights = tuple(q_of_a(p) for p in reduced)
    expected = degree_bound(iota, d)
    got = sorted(tuple(sorted(w.weights)) for w in weights)
    want = sorted(tuple(sorted(w.weights)) for w in attainers(iota, d))
    warnings = tuple(f"non-reduced witness discarded: {list(p.parts)}"
                     for p in discarded)
    return DegreeMaximum(iota, d, best, witnesses, reduced, discarded, weights,
                         expected, best == expected, got == want, warnings)


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("FWPS_BUDGET")
    if not raw:
        return default
    value = int(raw)
    if value < 1:
        raise ValueError("FWPS_BUDGET must be positive")
    return value

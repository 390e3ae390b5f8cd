"""Exact invariants of fake weighted projective spaces.

Weight systems, unit-fraction partitions, lattice simplices and the sharp
anticanonical degree bounds in terms of dimension and Gorenstein index.
"""

from fwps.exact_arith import BigRat, IntMatrix, det_exact, gcd_many, lcm_many
from fwps.weight_systems import WeightSystem
from fwps.uf_partitions import UfPartition, a_of_q, q_of_a
from fwps.sylvester import (
    attainers,
    degree_bound,
    extremal_weights,
    syl_partition,
)
from fwps.simplex import LatticeSimplex, simplex_from_weights
from fwps.enumeration import enumerate_partitions

__all__ = [
    "BigRat",
    "IntMatrix",
    "LatticeSimplex",
    "UfPartition",
    "WeightSystem",
    "a_of_q",
    "attainers",
    "degree_bound",
    "det_exact",
    "enumerate_partitions",
    "extremal_weights",
    "gcd_many",
    "lcm_many",
    "q_of_a",
    "simplex_from_weights",
    "syl_partition",
]

__version__ = "0.1.0"

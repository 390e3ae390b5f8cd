"""Weight systems the geometry tests run over."""

from fwps.sylvester import extremal_weights
from fwps.weight_systems import WeightSystem

NAMED = [(1, 1, 1), (2, 1, 1), (3, 1, 1, 1), (6, 4, 1, 1), (4, 1, 1), (28, 12, 1, 1)]


def catalog() -> list[WeightSystem]:
    out = [WeightSystem(q) for q in NAMED]
    for iota in range(1, 5):
        for d in range(2, 6):
            q = extremal_weights(iota, d)
            if q not in out:
                out.append(q)
    return out

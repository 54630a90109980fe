"""Registry of the worked example solutions."""

from __future__ import annotations

from .core import COUNTABLE
from .errors import UnknownExample
from .solution import PartialSolution


def _from_cycles(n, cycles, offset=1):
    perm = {k: k for k in range(n)}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - offset] = b - offset
    return perm


def etingof4() -> PartialSolution:
    """Four-element classical solution, generators x1..x4 stored as 0..3.

    r(x_i, x_j) = (x_{g_i(j)}, x_{f_j(i)}), so sigma_i = g_i and gamma_j = f_j.
    """
    g = [[(2, 3)], [(1, 4)], [(1, 2, 4, 3)], [(1, 3, 4, 2)]]
    f = [[(2, 4)], [(1, 3)], [(1, 4, 3, 2)], [(1, 2, 3, 4)]]
    return PartialSolution.from_maps(
        4, [_from_cycles(4, c) for c in g], [_from_cycles(4, c) for c in f])


def squarefree3() -> PartialSolution:
    sigma = [{0: 0, 2: 2}, {1: 1, 2: 2}, {0: 1, 1: 0, 2: 2}]
    return PartialSolution.from_maps(3, sigma, sigma)


def trivial3() -> PartialSolution:
    sigma = [{0: 0, 2: 2}, {1: 1, 2: 2}, {0: 0, 1: 1, 2: 2}]
    return PartialSolution.from_maps(3, sigma, sigma)


def thompson() -> PartialSolution:
    return PartialSolution(COUNTABLE, family="thompson")


EXAMPLES = {
    "etingof4": etingof4,
    "squarefree3": squarefree3,
    "trivial3": trivial3,
    "thompson": thompson,
}


def example(name: str) -> PartialSolution:
    try:
        return EXAMPLES[name]()
    except KeyError:
        raise UnknownExample(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}") from None

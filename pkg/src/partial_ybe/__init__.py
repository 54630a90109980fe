"""Partial set-theoretic solutions of the Yang-Baxter equation, their
structure inverse monoids, right reversing, cycle sets and Thompson's F."""

from .core import (COUNTABLE, Carrier, EmbeddedElement, Finite, IndexSet, PartialBijection,
                   PartialIntFun, act, compose, invert, restricted_inv, restricted_mul)
from .solution import Axiom, AxiomReport, PartialSolution, verify, verify_all
from .catalog import example, EXAMPLES

__all__ = [
    "COUNTABLE", "Carrier", "EmbeddedElement", "Finite", "IndexSet", "PartialBijection",
    "PartialIntFun", "act", "compose", "invert", "restricted_inv", "restricted_mul",
    "Axiom", "AxiomReport", "PartialSolution", "verify", "verify_all", "example", "EXAMPLES",
]
__version__ = "0.1.0"

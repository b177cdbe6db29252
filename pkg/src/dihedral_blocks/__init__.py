"""Exact computations for 2-blocks with defect group D_{2^n} x C_{2^m}."""
from .group import CapExceeded, Element, ParameterError, Params
from .fusion import FusionCase, FusionSystem
from .invariants import BlockInvariants, FeasibleSolution, block_invariants, solve_height_distribution

__all__ = [
    "BlockInvariants",
    "CapExceeded",
    "Element",
    "FeasibleSolution",
    "FusionCase",
    "FusionSystem",
    "ParameterError",
    "Params",
    "block_invariants",
    "solve_height_distribution",
]

"""Lattice cubature and Lagrange interpolation for Chebyshev weights on the square and the cube."""

from cubelattice.cubature import CubatureRule, Exactness, apply, make_rule, trig_rule, w0_rule, w1_rule
from cubelattice.interpolation import (
    Interpolant,
    SymmetrizationOperator,
    algebraic_interpolant,
    fundamental_poly,
    lebesgue_estimate,
    sym_trig_interpolant,
    trig_interpolant,
)
from cubelattice.lattice_core import IndexSetKind, generate_index_set

__all__ = [
    "CubatureRule",
    "Exactness",
    "IndexSetKind",
    "Interpolant",
    "SymmetrizationOperator",
    "algebraic_interpolant",
    "apply",
    "fundamental_poly",
    "generate_index_set",
    "lebesgue_estimate",
    "make_rule",
    "sym_trig_interpolant",
    "trig_interpolant",
    "trig_rule",
    "w0_rule",
    "w1_rule",
]

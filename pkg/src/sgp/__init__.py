"""Numerical semigroups, divisor sets, Feng-Rao distances and
generalized-Hamming-weight order bounds, with brute-force cross-checks."""

from .semigroup import NumericalSemigroup, from_generators
from .dim2 import (Dim2Semigroup, UVRep, IHRep, GroundInterval,
                   Middle, Extend, Multiple)
from .divisors import (DivisorSet, div_set, div_set_multi,
                       new_divisors_via_apery, symmetric_shift_divisors)
from .fengrao import (Configuration, FengRaoResult, FengRaoNumber,
                      classical_fr, classical_fr_two_gen, generalized_fr,
                      is_amenable, optimal_amenable, enumerate_amenable_sets,
                      feng_rao_number, coro_final_value, coro_final_gap_bound,
                      DEFAULT_MAX_NODES)
from .bounds import (BoundRow, BoundTable, gfr_bound, thm_final_literal_bound,
                     griesmer_order_bound, code_dimension, hierarchy_table)
from .render import Layer, StripSpec, Cell, build_grid, render_strip
from . import errors, oracle

__version__ = "0.1.0"

__all__ = [
    "NumericalSemigroup", "from_generators",
    "Dim2Semigroup", "UVRep", "IHRep", "GroundInterval",
    "Middle", "Extend", "Multiple",
    "DivisorSet", "div_set", "div_set_multi",
    "new_divisors_via_apery", "symmetric_shift_divisors",
    "Configuration", "FengRaoResult", "FengRaoNumber",
    "classical_fr", "classical_fr_two_gen", "generalized_fr",
    "is_amenable", "optimal_amenable", "enumerate_amenable_sets",
    "feng_rao_number", "coro_final_value", "coro_final_gap_bound",
    "DEFAULT_MAX_NODES",
    "BoundRow", "BoundTable", "gfr_bound", "thm_final_literal_bound",
    "griesmer_order_bound", "code_dimension", "hierarchy_table",
    "Layer", "StripSpec", "Cell", "build_grid", "render_strip",
    "errors", "oracle",
]

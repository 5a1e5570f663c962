"""Exact invariant theory of dihedral groups acting on the free algebra C<u,v>."""

from .cyclotomic import CycloNum, cyclo, cyclotomic_poly
from .freealg import NcPoly, dihedral_group, invariant_basis, reynolds
from .gens import GeneratorTable, basis_leading_terms, free_generators
from .hilbert import generator_series, hilbert_closed_form, hilbert_series, hilbert_via_BC
from .koryukin import Permutation, SClosureReport, s_act, s_algebra_closure, verify_generation_theorem
from .ratfunc import QPoly, QRatFunc, Recurrence, psi_min_poly, recurrence_from_ratfunc, series_coefficients

__version__ = "0.1.0"

__all__ = [
    "CycloNum", "cyclo", "cyclotomic_poly",
    "NcPoly", "dihedral_group", "invariant_basis", "reynolds",
    "GeneratorTable", "basis_leading_terms", "free_generators",
    "generator_series", "hilbert_closed_form", "hilbert_series", "hilbert_via_BC",
    "Permutation", "SClosureReport", "s_act", "s_algebra_closure", "verify_generation_theorem",
    "QPoly", "QRatFunc", "Recurrence", "psi_min_poly", "recurrence_from_ratfunc", "series_coefficients",
]

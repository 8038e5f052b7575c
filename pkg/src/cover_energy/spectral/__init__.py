"""Covering matrix, symmetric eigenvalues, exact characteristic polynomial and energy."""

from cover_energy.spectral.charpoly import (
    CharPoly,
    char_poly,
    expand_factors,
    linear_factor,
    poly_mul,
)
from cover_energy.spectral.eigen import (
    EigenMethod,
    Spectrum,
    eigenvalues_symmetric,
    jacobi_eigenvalues,
)
from cover_energy.spectral.energy import (
    ENERGY_CSV_HEADER,
    EnergyMethod,
    EnergyReport,
    covering_energy,
)
from cover_energy.spectral.matrix import CoveringMatrix, build_covering_matrix

__all__ = [
    "ENERGY_CSV_HEADER",
    "CharPoly",
    "CoveringMatrix",
    "EigenMethod",
    "EnergyMethod",
    "EnergyReport",
    "Spectrum",
    "build_covering_matrix",
    "char_poly",
    "covering_energy",
    "eigenvalues_symmetric",
    "expand_factors",
    "jacobi_eigenvalues",
    "linear_factor",
    "poly_mul",
]

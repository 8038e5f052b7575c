"""cover-energy - minimum 3-path coverings, the covering matrix and its energy."""

from dotenv import load_dotenv

from cover_energy.config import Settings, configure, get_settings, load_settings
from cover_energy.covering import (
    CoverSet,
    is_3_covering,
    min_3_covering_bruteforce,
    min_3_covering_exact,
)
from cover_energy.graph import Graph, new_graph
from cover_energy.spectral import build_covering_matrix, char_poly, covering_energy

__version__ = "0.3.0"

# Load COVER_ENERGY_* overrides from a .env file at package init
load_dotenv()


__all__ = [
    "CoverSet",
    "Graph",
    "Settings",
    "__version__",
    "build_covering_matrix",
    "char_poly",
    "configure",
    "covering_energy",
    "get_settings",
    "is_3_covering",
    "load_settings",
    "min_3_covering_bruteforce",
    "min_3_covering_exact",
    "new_graph",
]

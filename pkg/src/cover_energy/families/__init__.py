"""Graph generators and closed-form spectra of the star families."""

from cover_energy.families.cubic import CubicCoeffs, cardano_roots, solve_cubic_real
from cover_energy.families.discrepancy import (
    RadicandReport,
    discrepancy_summary,
    radicand_discrepancy_report,
)
from cover_energy.families.generators import (
    StarParams,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_random,
    gen_star_rays,
    star_graph,
)
from cover_energy.families.star import (
    ClosedFormSpectrum,
    center_cover,
    star1_eigenvalues_closed,
    star1_energy_closed,
    star1_spectrum_closed,
    star3_char_poly,
    star3_cubic,
    star3_energy_closed,
    star3_ring_cover,
    star3_spectrum_closed,
)
from cover_energy.families.tables import (
    ENERGY_TABLE_HEADER,
    EnergyTableRow,
    StarFamily,
    closed_form_energy_report,
    energy_table,
    star1_energy_table,
    star3_energy_table,
)

__all__ = [
    "ENERGY_TABLE_HEADER",
    "ClosedFormSpectrum",
    "CubicCoeffs",
    "EnergyTableRow",
    "RadicandReport",
    "StarFamily",
    "StarParams",
    "cardano_roots",
    "center_cover",
    "closed_form_energy_report",
    "discrepancy_summary",
    "energy_table",
    "gen_complete",
    "gen_cycle",
    "gen_path",
    "gen_random",
    "gen_star_rays",
    "radicand_discrepancy_report",
    "solve_cubic_real",
    "star1_eigenvalues_closed",
    "star1_energy_closed",
    "star1_energy_table",
    "star1_spectrum_closed",
    "star3_char_poly",
    "star3_cubic",
    "star3_energy_closed",
    "star3_energy_table",
    "star3_ring_cover",
    "star3_spectrum_closed",
    "star_graph",
]

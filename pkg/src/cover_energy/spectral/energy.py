"""Covering energy: the sum of absolute eigenvalues of the covering matrix."""

import enum
from dataclasses import dataclass
from typing import Any

from cover_energy.config import Settings, get_settings
from cover_energy.covering.models import CoverSet
from cover_energy.graph.models import Graph
from cover_energy.output import display_value, round_sig
from cover_energy.spectral.eigen import EigenMethod, Spectrum, eigenvalues_symmetric
from cover_energy.spectral.matrix import build_covering_matrix


class EnergyMethod(enum.StrEnum):
    NUMERIC = "numeric"
    CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class EnergyReport:
    """Cover, spectrum and energy of one graph, tagged with how the spectrum was obtained."""

    cover: CoverSet
    spectrum: Spectrum
    energy: float
    method: EnergyMethod = EnergyMethod.NUMERIC

    def as_dict(self, digits: int = 12, zero_tolerance: float = 1e-12) -> dict[str, Any]:
        return {
            "cover": list(self.cover.members),
            "eigenvalues": [
                display_value(x, digits, zero_tolerance) for x in self.spectrum.eigenvalues
            ],
            "energy": round_sig(self.energy, digits),
            "method": self.method.value,
        }

    def csv_row(self) -> list[Any]:
        return [
            " ".join(str(v) for v in self.cover.members),
            len(self.spectrum),
            self.energy,
            self.method.value,
        ]


ENERGY_CSV_HEADER = ("cover", "n", "energy", "method")


def covering_energy(
    g: Graph,
    q: CoverSet,
    eigen_method: EigenMethod | str | None = None,
    settings: Settings | None = None,
) -> EnergyReport:
    """Energy of the covering matrix of *g* with loops on *q*.

    *q* does not have to be a covering; the matrix is defined for any set.
    """
    cfg = settings or get_settings()
    spectrum = eigenvalues_symmetric(build_covering_matrix(g, q), eigen_method, cfg)
    return EnergyReport(cover=q, spectrum=spectrum, energy=spectrum.energy)

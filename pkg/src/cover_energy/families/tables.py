"""Closed-form versus numeric energy tables for the star families."""

import enum
import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from cover_energy.config import Settings, get_settings
from cover_energy.errors import InvalidParamsError
from cover_energy.families.generators import star_graph
from cover_energy.families.star import (
    center_cover,
    star1_energy_closed,
    star1_spectrum_closed,
    star3_energy_closed,
    star3_spectrum_closed,
)
from cover_energy.spectral.eigen import Spectrum
from cover_energy.spectral.energy import EnergyMethod, EnergyReport, covering_energy

logger = logging.getLogger(__name__)

ENERGY_TABLE_HEADER = ("m", "energy_closed", "energy_numeric", "abs_diff")


class StarFamily(enum.StrEnum):
    """Star family by ray length: `star1` is `K_{1,m}`, `star3` has rays that are 3-vertex paths."""

    STAR1 = "star1"
    STAR3 = "star3"

    @property
    def ray_len(self) -> int:
        return 1 if self is StarFamily.STAR1 else 2

    @property
    def min_m(self) -> int:
        return 3 if self is StarFamily.STAR1 else 2

    @property
    def closed_form(self) -> Callable[[int], float]:
        return star1_energy_closed if self is StarFamily.STAR1 else star3_energy_closed

    def closed_spectrum(self, m: int) -> tuple[float, ...]:
        if self is StarFamily.STAR1:
            return star1_spectrum_closed(m)
        return star3_spectrum_closed(m).eigenvalues()


def closed_form_energy_report(
    family: StarFamily | str, m: int, settings: Settings | None = None
) -> EnergyReport:
    """Energy report of the centre cover built from the closed-form spectrum, no eigensolver.

    Raises:
        InvalidParamsError: *m* below the family's minimum.
    """
    fam = StarFamily(family)
    cfg = settings or get_settings()
    return EnergyReport(
        cover=center_cover(),
        spectrum=Spectrum.from_values(fam.closed_spectrum(m), cfg.cluster_tolerance),
        energy=fam.closed_form(m),
        method=EnergyMethod.CLOSED_FORM,
    )


@dataclass(frozen=True)
class EnergyTableRow:
    m: int
    energy_closed: float
    energy_numeric: float

    @property
    def abs_diff(self) -> float:
        return abs(self.energy_closed - self.energy_numeric)

    def csv_row(self) -> list[Any]:
        return [self.m, self.energy_closed, self.energy_numeric, self.abs_diff]


def energy_table(
    family: StarFamily | str,
    m_from: int,
    m_to: int,
    settings: Settings | None = None,
) -> list[EnergyTableRow]:
    """One row per `m` in `[m_from, m_to]` comparing the closed form with the eigensolver.

    Raises:
        InvalidParamsError: Empty range or `m_from` below the family's minimum.
    """
    fam = StarFamily(family)
    if m_from > m_to:
        raise InvalidParamsError(f"empty range: m_from={m_from} > m_to={m_to}")
    if m_from < fam.min_m:
        raise InvalidParamsError(f"{fam.value} closed form needs m >= {fam.min_m}")
    cfg = settings or get_settings()
    rows = []
    for m in range(m_from, m_to + 1):
        closed = closed_form_energy_report(fam, m, cfg)
        numeric = covering_energy(star_graph(m, fam.ray_len), closed.cover, settings=cfg)
        rows.append(EnergyTableRow(m, closed.energy, numeric.energy))
    worst = max(r.abs_diff for r in rows)
    logger.info("%s table m=%d..%d, max |closed - numeric| = %.3e", fam, m_from, m_to, worst)
    return rows


def star1_energy_table(
    m_from: int, m_to: int, settings: Settings | None = None
) -> list[EnergyTableRow]:
    return energy_table(StarFamily.STAR1, m_from, m_to, settings)


def star3_energy_table(
    m_from: int, m_to: int, settings: Settings | None = None
) -> list[EnergyTableRow]:
    return energy_table(StarFamily.STAR3, m_from, m_to, settings)

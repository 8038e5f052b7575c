"""Closed-form spectra and energies of the star families with Q = {center}.

For `K_{1,m}` the covering matrix has rank 2 and its nonzero eigenvalues are
the roots of `λ² - λ - m`. For the generalized star with rays of length 2
the characteristic polynomial factors as
`(λ - 1)^{m-1} (λ + 1)^{m-1} (λ³ - λ² - (m+1)λ + 1)`.
"""

import math
from dataclasses import dataclass
from typing import Any

from cover_energy.covering.models import CoverSet
from cover_energy.errors import InvalidParamsError
from cover_energy.families.cubic import CubicCoeffs, solve_cubic_real
from cover_energy.spectral.charpoly import CharPoly, expand_factors, linear_factor

CENTER = 0


def _require_m(m: int, minimum: int) -> None:
    if m < minimum:
        raise InvalidParamsError(f"closed form needs m >= {minimum}, got m={m}")


def center_cover() -> CoverSet:
    """The minimum 3-covering `{0}` of both star families."""
    return CoverSet.of([CENTER])


# ── Rays of length 2 ─────────────────────────────────────────────────────────


def star3_cubic(m: int) -> CubicCoeffs:
    """`λ³ - λ² - (m+1)λ + 1`, the non-trivial factor of the characteristic polynomial."""
    _require_m(m, 2)
    return CubicCoeffs(b=-1.0, c=-(m + 1.0), d=1.0)


def star3_char_poly(m: int) -> CharPoly:
    """Exact expansion of `(λ-1)^{m-1} (λ+1)^{m-1} (λ³ - λ² - (m+1)λ + 1)`."""
    _require_m(m, 2)
    cubic = CharPoly((1, -1, -(m + 1), 1))
    return expand_factors([(linear_factor(1), m - 1), (linear_factor(-1), m - 1), (cubic, 1)])


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Spectrum of the length-2 generalized star assembled from its factorization.

    Attributes:
        m: Number of rays.
        pm_one_multiplicity: Multiplicity of each of `1` and `-1` (`m - 1`).
        cubic_roots: Roots of :func:`star3_cubic`, largest first.
        energy: `2m - 2 + |x1| + |x2| + |x3|`.
    """

    m: int
    pm_one_multiplicity: int
    cubic_roots: tuple[float, float, float]
    energy: float

    def eigenvalues(self) -> tuple[float, ...]:
        """All `2m + 1` eigenvalues, largest first."""
        values = [*self.cubic_roots, *[1.0] * self.pm_one_multiplicity]
        values += [-1.0] * self.pm_one_multiplicity
        return tuple(sorted(values, reverse=True))

    def as_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "pm_one_multiplicity": self.pm_one_multiplicity,
            "cubic_roots": list(self.cubic_roots),
            "energy": self.energy,
        }


def star3_spectrum_closed(m: int) -> ClosedFormSpectrum:
    roots = solve_cubic_real(star3_cubic(m))
    return ClosedFormSpectrum(
        m=m,
        pm_one_multiplicity=m - 1,
        cubic_roots=roots,
        energy=2 * m - 2 + sum(abs(x) for x in roots),
    )


def star3_energy_closed(m: int) -> float:
    return star3_spectrum_closed(m).energy


def star3_ring_cover(m: int) -> CoverSet:
    """The first ring `{1, ..., m}`: a 3-covering of the length-2 star that is not minimum."""
    _require_m(m, 2)
    return CoverSet.of(range(1, m + 1))


# ── Rays of length 1 (K_{1,m}) ──────────────────────────────────────────────


def star1_eigenvalues_closed(m: int) -> tuple[float, float]:
    """The two nonzero eigenvalues `(1 ± √(4m+1)) / 2`; the other `m - 1` are zero."""
    _require_m(m, 3)
    root = math.sqrt(4 * m + 1)
    return ((1 + root) / 2, (1 - root) / 2)


def star1_spectrum_closed(m: int) -> tuple[float, ...]:
    hi, lo = star1_eigenvalues_closed(m)
    return (hi, *[0.0] * (m - 1), lo)


def star1_energy_closed(m: int) -> float:
    """`√(4m+1)`, valid for `m >= 3`."""
    _require_m(m, 3)
    return math.sqrt(4 * m + 1)

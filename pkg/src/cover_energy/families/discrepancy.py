"""Audit of the published closed-form root expressions for `λ³ - λ² - (m+1)λ + 1`.

With `Δ1 = 16 - 9m` and `Δ0 = 3m + 4`, the radicand under Cardano's square root
is `Δ1² - 4Δ0³ = -108m³ - 351m² - 864m`, negative for every `m >= 1`. The
published simplification `27m³ + 189m² - 144m + 308` is positive and does not
match. The published root expressions also weight the cube roots by
`(1 ± √3)/6` where `(1 ± i√3)/6` is required, so even with a correct radicand
they do not evaluate to roots.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from cover_energy.errors import InvalidParamsError
from cover_energy.families.star import star3_cubic

DIRECT_POLYNOMIAL = "-108m^3 - 351m^2 - 864m"
PRINTED_POLYNOMIAL = "27m^3 + 189m^2 - 144m + 308"
PRINTED_UNITY_FACTORS = "(1 ± √3)/6"
CORRECT_UNITY_FACTORS = "(1 ± i√3)/6"


def direct_radicand(m: int) -> int:
    """`(16 - 9m)² - 4(3m + 4)³` in exact integer arithmetic."""
    return (16 - 9 * m) ** 2 - 4 * (3 * m + 4) ** 3


def direct_radicand_polynomial(m: int) -> int:
    return -108 * m**3 - 351 * m**2 - 864 * m


def printed_radicand(m: int) -> int:
    return 27 * m**3 + 189 * m**2 - 144 * m + 308


def printed_formula_roots(m: int) -> tuple[float, float, float]:
    """Evaluate the published real-valued root expressions literally."""
    root = np.sqrt(float(printed_radicand(m)))
    a = float(np.cbrt((16 - 9 * m + root) / 2))
    b = float(np.cbrt((16 - 9 * m - root) / 2))
    s = float(np.sqrt(3.0))
    return (
        float(1 / 3 - (a + b) / 3),
        float(1 / 3 + (1 + s) / 6 * a + (1 - s) / 6 * b),
        float(1 / 3 + (1 - s) / 6 * a + (1 + s) / 6 * b),
    )


@dataclass(frozen=True)
class RadicandReport:
    m: int
    direct: int
    direct_polynomial: int
    printed: int
    printed_roots: tuple[float, float, float]
    printed_root_residual: float

    @property
    def agree(self) -> bool:
        return self.direct == self.printed

    @property
    def direct_negative(self) -> bool:
        return self.direct < 0

    def as_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "direct": self.direct,
            "direct_polynomial": self.direct_polynomial,
            "printed": self.printed,
            "agree": self.agree,
            "direct_negative": self.direct_negative,
            "printed_roots": list(self.printed_roots),
            "printed_root_residual": self.printed_root_residual,
        }


def radicand_discrepancy_report(m: int) -> RadicandReport:
    """Compare the direct radicand with the published one for a single `m >= 2`.

    `printed_root_residual` is the largest `|p(x)|` over the literally
    evaluated published roots; it is far from zero.
    """
    if m < 2:
        raise InvalidParamsError(f"discrepancy report needs m >= 2, got m={m}")
    cubic = star3_cubic(m)
    roots = printed_formula_roots(m)
    direct = direct_radicand(m)
    poly = direct_radicand_polynomial(m)
    if direct != poly:
        raise ArithmeticError(f"radicand expansion mismatch at m={m}: {direct} != {poly}")
    return RadicandReport(
        m=m,
        direct=direct,
        direct_polynomial=poly,
        printed=printed_radicand(m),
        printed_roots=roots,
        printed_root_residual=max(abs(cubic.evaluate(x)) for x in roots),
    )


def discrepancy_summary(m_from: int, m_to: int) -> dict[str, Any]:
    """Reports for every `m` in `[m_from, m_to]` plus the derived and published polynomials."""
    if m_from > m_to:
        raise InvalidParamsError(f"empty range: m_from={m_from} > m_to={m_to}")
    reports = [radicand_discrepancy_report(m) for m in range(m_from, m_to + 1)]
    return {
        "m_from": m_from,
        "m_to": m_to,
        "direct_polynomial": DIRECT_POLYNOMIAL,
        "printed_polynomial": PRINTED_POLYNOMIAL,
        "mismatches": sum(1 for r in reports if not r.agree),
        "all_direct_negative": all(r.direct_negative for r in reports),
        "unity_factors": {"printed": PRINTED_UNITY_FACTORS, "correct": CORRECT_UNITY_FACTORS},
        "rows": [r.as_dict() for r in reports],
    }

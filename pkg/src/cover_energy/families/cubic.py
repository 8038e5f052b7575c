"""Real roots of monic cubics `λ³ + bλ² + cλ + d`.

Cubics with three real roots are solved with the trigonometric (Viète)
method. Cardano's radical formula is kept as an independent cross-check: for
three distinct real roots its square root is of a negative number, so it is
evaluated in complex arithmetic and the imaginary parts must cancel.
"""

import cmath
import logging
import math
from dataclasses import dataclass

from cover_energy.errors import ComplexRootsError

logger = logging.getLogger(__name__)

IMAGINARY_RESIDUE_TOLERANCE = 1e-9

# Primitive cube root of unity
_OMEGA = complex(-0.5, math.sqrt(3) / 2)


@dataclass(frozen=True)
class CubicCoeffs:
    """Coefficients of the monic cubic `λ³ + bλ² + cλ + d`."""

    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(x) for x in (self.b, self.c, self.d)):
            raise ValueError(f"cubic coefficients must be finite: {self}")

    @property
    def discriminant(self) -> float:
        """`18bcd - 4b³d + b²c² - 4c³ - 27d²`; nonnegative exactly when all roots are real."""
        b, c, d = self.b, self.c, self.d
        return 18 * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * c**3 - 27 * d**2

    @property
    def delta0(self) -> float:
        return self.b**2 - 3 * self.c

    @property
    def delta1(self) -> float:
        return 2 * self.b**3 - 9 * self.b * self.c + 27 * self.d

    def evaluate(self, x: complex) -> complex:
        return ((x + self.b) * x + self.c) * x + self.d


def _scale(c: CubicCoeffs) -> float:
    return max(1.0, abs(c.b), abs(c.c), abs(c.d))


def cardano_roots(c: CubicCoeffs) -> tuple[complex, complex, complex]:
    """Cardano's formula with complex intermediates.

    Returns the roots in the order `x1` (principal cube root), then the two
    roots obtained by multiplying the cube root by `ω²` and `ω`. The second
    cube root is taken as `Δ0 / C` so both radicals stay on matching branches.
    """
    d0, d1 = complex(c.delta0), complex(c.delta1)
    root = cmath.sqrt(d1 * d1 - 4 * d0**3)
    big = (d1 + root) / 2
    if abs(big) < 1e-300:
        big = (d1 - root) / 2
    if abs(big) < 1e-300:
        x = complex(-c.b / 3)
        return (x, x, x)
    cube = big ** (1 / 3)
    roots = []
    for k in (0, 2, 1):
        ck = cube * _OMEGA**k
        roots.append(-(c.b + ck + d0 / ck) / 3)
    return (roots[0], roots[1], roots[2])


def _trigonometric_roots(c: CubicCoeffs) -> list[float]:
    shift = -c.b / 3
    p = c.c - c.b**2 / 3
    q = 2 * c.b**3 / 27 - c.b * c.c / 3 + c.d
    if abs(p) <= 1e-15 * _scale(c):
        # λ = shift + t with t³ = -q
        t = math.copysign(abs(q) ** (1 / 3), -q)
        return [shift + t] * 3
    r = 2 * math.sqrt(-p / 3)
    arg = 3 * q / (2 * p) * math.sqrt(-3 / p)
    phi = math.acos(max(-1.0, min(1.0, arg))) / 3
    return [shift + r * math.cos(phi - 2 * math.pi * k / 3) for k in range(3)]


def solve_cubic_real(c: CubicCoeffs) -> tuple[float, float, float]:
    """The three real roots of *c*, largest first.

    Raises:
        ComplexRootsError: The discriminant is negative (one real root and a
            complex-conjugate pair).
        ArithmeticError: The Cardano cross-check disagrees with the
            trigonometric roots.
    """
    scale = _scale(c)
    disc = c.discriminant
    if disc < -1e-9 * scale**4:
        raise ComplexRootsError(f"cubic {c} has discriminant {disc:.6g} < 0")
    roots = sorted(_trigonometric_roots(c), reverse=True)

    check = cardano_roots(c)
    residue = max(abs(z.imag) for z in check)
    if disc > 1e-9 * scale**4 and residue > IMAGINARY_RESIDUE_TOLERANCE * scale:
        raise ArithmeticError(f"Cardano cross-check left imaginary residue {residue:.3e}")
    reals = sorted((z.real for z in check), reverse=True)
    gap = max(abs(a - b) for a, b in zip(roots, reals, strict=True))
    if gap > 1e-6 * scale:
        raise ArithmeticError(f"Cardano and trigonometric roots differ by {gap:.3e}")
    logger.debug("Cubic %s roots %s (Cardano residue %.1e)", c, roots, residue)
    return (roots[0], roots[1], roots[2])

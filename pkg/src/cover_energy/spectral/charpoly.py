"""Exact characteristic polynomials of integer matrices.

`det(λI - A)` is computed with the Faddeev–LeVerrier recurrence over Python
integers (numpy object arrays), so every coefficient is exact and the
divisions by `k` are checked to be exact.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from cover_energy.spectral.matrix import CoveringMatrix

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial, coefficients from `λ^n` down to `λ^0`."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError(f"characteristic polynomial must be monic: {self.coefficients}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x: float) -> float:
        """Horner evaluation in floating point."""
        acc = 0.0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def magnitude(self, x: float) -> float:
        """`sum(|c_k| |x|^k)`: the scale against which a residual at *x* is judged."""
        acc = 0.0
        for c in self.coefficients:
            acc = acc * abs(x) + abs(c)
        return acc

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        return CharPoly(tuple(poly_mul(self.coefficients, other.coefficients)))

    def __pow__(self, k: int) -> "CharPoly":
        result = CharPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __str__(self) -> str:
        terms: list[str] = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = self.degree - i
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "λ" if power == 1 else "λ" + str(power).translate(_SUPERSCRIPTS)
                body = var if mag == 1 else f"{mag}{var}"
            if terms:
                terms.append(f"{'-' if c < 0 else '+'} {body}")
            else:
                terms.append(f"-{body}" if c < 0 else body)
        return " ".join(terms) if terms else "0"

    def as_list(self) -> list[int]:
        return list(self.coefficients)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of two integer polynomials given highest-degree first."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def linear_factor(root: int) -> CharPoly:
    """The monic factor `λ - root`."""
    return CharPoly((1, -root))


def expand_factors(factors: Iterable[tuple[CharPoly, int]]) -> CharPoly:
    """Multiply out `Π p_i^{k_i}` exactly."""
    result = CharPoly((1,))
    for poly, power in factors:
        result = result * poly**power
    return result


def _as_integer_matrix(m: CoveringMatrix | npt.ArrayLike) -> npt.NDArray[np.object_]:
    raw = m.entries if isinstance(m, CoveringMatrix) else np.asarray(m)
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {raw.shape}")
    out = np.empty(raw.shape, dtype=object)
    for idx, x in np.ndenumerate(raw):
        if int(x) != x:
            raise ValueError(f"char_poly needs integer entries, found {x!r} at {idx}")
        out[idx] = int(x)
    return out


def char_poly(m: CoveringMatrix | npt.ArrayLike) -> CharPoly:
    """Exact `det(λI - A)` of an integer matrix.

    Faddeev–LeVerrier: `M_0 = 0`, `M_k = A M_{k-1} + c_{n-k+1} I`,
    `c_{n-k} = -tr(A M_k) / k`, with `c_n = 1`.

    Raises:
        ValueError: Non-square matrix or a non-integer entry.
    """
    a = _as_integer_matrix(m)
    n = a.shape[0]
    identity = np.zeros((n, n), dtype=object)
    for i in range(n):
        identity[i, i] = 1
    coeffs = [1]
    mk = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        mk = a.dot(mk) + coeffs[-1] * identity
        tr = int(np.trace(a.dot(mk)))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError(f"non-exact division in Faddeev–LeVerrier at k={k}")
        coeffs.append(c)
    return CharPoly(tuple(int(c) for c in coeffs))

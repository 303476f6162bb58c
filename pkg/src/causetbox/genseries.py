"""Truncated bivariate power series for the chord-diagram counts.

The colored-diagram class enumerated in :mod:`causetbox.diagrams` has
the closed-form generating function

    ( y / sqrt(1 - 4*x*y**2)  +  y**2 * (1 + 4*x) )
    -----------------------------------------------
              1  -  y**2 * (1 + 4*x)

where ``x`` marks chords and ``y`` marks points.  This module expands
that closed form on an all-integer path — the inverse square root via
central binomial coefficients, the denominator via its geometric
series — and provides the two closed-form coefficient extractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BivariateSeries",
    "diagram_series",
    "closed_coeff_even",
    "closed_coeff_odd",
]

_Table = list[list[int]]


def _zero_table(max_x: int, max_y: int) -> _Table:
    return [[0] * (max_y + 1) for _ in range(max_x + 1)]


def _multiply(a: _Table, b: _Table, max_x: int, max_y: int) -> _Table:
    out = _zero_table(max_x, max_y)
    for i, row in enumerate(a):
        for j, coeff in enumerate(row):
            if coeff == 0:
                continue
            for k in range(max_x - i + 1):
                b_row = b[k]
                out_row = out[i + k]
                for l in range(max_y - j + 1):
                    if b_row[l]:
                        out_row[j + l] += coeff * b_row[l]
    return out


@dataclass(frozen=True)
class BivariateSeries:
    """Dense table of exact integer coefficients, truncated at fixed orders."""

    max_x: int
    max_y: int
    coeffs: tuple[tuple[int, ...], ...]

    def coefficient(self, n: int, m: int) -> int:
        """The coefficient of x**n * y**m."""
        if not (0 <= n <= self.max_x and 0 <= m <= self.max_y):
            raise ValueError(
                f"coefficient ({n}, {m}) outside truncation window "
                f"({self.max_x}, {self.max_y})"
            )
        return self.coeffs[n][m]


def diagram_series(max_x: int, max_y: int) -> BivariateSeries:
    """Expand the diagram generating function up to x**max_x * y**max_y.

    The inverse square root is expanded as
    ``sum_n binom(2n, n) * (x*y**2)**n`` and the denominator as the
    geometric series in ``y**2 * (1 + 4x)``; both are exact integer
    operations, so no rational arithmetic is needed.
    """
    if max_x < 0 or max_y < 0:
        raise ValueError("truncation orders must be >= 0")

    # y * sum_n binom(2n, n) * x**n * y**(2n)
    numerator = _zero_table(max_x, max_y)
    for n in range(max_x + 1):
        if 2 * n + 1 <= max_y:
            numerator[n][2 * n + 1] = math.comb(2 * n, n)

    # q = y**2 * (1 + 4x); numerator += q
    q = _zero_table(max_x, max_y)
    if max_y >= 2:
        q[0][2] = 1
        if max_x >= 1:
            q[1][2] = 4
        numerator[0][2] += 1
        if max_x >= 1:
            numerator[1][2] += 4

    # 1 / (1 - q) = sum_k q**k; q has y-order 2, so k <= max_y // 2.
    geometric = _zero_table(max_x, max_y)
    geometric[0][0] = 1
    power = _zero_table(max_x, max_y)
    power[0][0] = 1
    for _ in range(max_y // 2):
        power = _multiply(power, q, max_x, max_y)
        for i in range(max_x + 1):
            for j in range(max_y + 1):
                geometric[i][j] += power[i][j]

    table = _multiply(numerator, geometric, max_x, max_y)
    return BivariateSeries(
        max_x=max_x,
        max_y=max_y,
        coeffs=tuple(tuple(row) for row in table),
    )


def closed_coeff_even(n: int, i: int) -> int:
    """Closed form for the coefficient of x**n * y**(2i): 4**n * binom(i, n)."""
    if n < 0 or i <= 0:
        raise ValueError(f"need n >= 0 and i > 0, got n={n}, i={i}")
    return 4**n * math.comb(i, n)


def closed_coeff_odd(n: int, i: int) -> int:
    """Closed form for the coefficient of x**n * y**(2i+1).

    With ``j = i - n`` this is the product
    ``(4j + 6)(4j + 10) ... (4j + 4n + 2) / n!`` (n factors stepping
    by 4), an exact integer.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if i < n:
        raise ValueError(f"need i >= n, got n={n}, i={i}")
    j = i - n
    product = math.prod(4 * j + 4 * level + 2 for level in range(1, n + 1))
    quotient, remainder = divmod(product, math.factorial(n))
    if remainder:
        raise ArithmeticError(f"odd-coefficient product not divisible by n!: {n}, {i}")
    return quotient

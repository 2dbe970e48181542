"""Exact combinatorial primitives shared by every other module: coefficients
of bounded-part powers, Eulerian numbers, and dense integer polynomials.

All arithmetic is arbitrary-precision integer arithmetic; nothing here ever
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

__all__ = [
    "IntPoly",
    "ZERO",
    "ONE",
    "RestrictedCoeffParams",
    "coeff_of",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_scale",
    "restricted_coeff",
    "eulerian",
    "eulerian_by_enumeration",
]


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; coeffs[i] is the coefficient of t**i.

    The zero polynomial is the empty tuple; otherwise the stored leading
    coefficient is nonzero.  Build values through IntPoly.of, which strips
    trailing zeros.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero; use IntPoly.of")

    @classmethod
    def of(cls, coeffs) -> IntPoly:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)


ZERO = IntPoly()
ONE = IntPoly((1,))


def coeff_of(p: IntPoly, degree: int) -> int:
    """Coefficient of t**degree, 0 beyond the stored degree."""
    if degree < 0 or degree >= len(p.coeffs):
        return 0
    return p.coeffs[degree]


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    if len(p.coeffs) < len(q.coeffs):
        p, q = q, p
    out = list(p.coeffs)
    for i, c in enumerate(q.coeffs):
        out[i] += c
    return IntPoly.of(out)


def poly_scale(p: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return ZERO
    return IntPoly.of(x * c for x in p.coeffs)


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPoly.of(out)


def poly_pow(p: IntPoly, e: int) -> IntPoly:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = ONE
    for _ in range(e):
        result = poly_mul(result, p)
    return result


@dataclass(frozen=True)
class RestrictedCoeffParams:
    """Arguments of restricted_coeff: n factors, target degree b, part bound a
    (parts run over 0..a-1)."""

    n: int
    b: int
    a: int

    def coefficient(self) -> int:
        return restricted_coeff(self.n, self.b, self.a)


def restricted_coeff(n: int, b: int, a: int) -> int:
    """Coefficient of t**b in (1 + t + ... + t**(a-1))**n, exactly.

    Degenerate inputs follow fixed conventions: the result is 0 when a <= 0,
    when b < 0, or when b > n*(a-1); the n = 0 power is the constant 1.
    These conventions make the alternating sums downstream finite.
    """
    if n < 0:
        raise ValueError("exponent n must be nonnegative")
    if a <= 0 or b < 0 or b > n * (a - 1):
        return 0
    return _power_row(n, a)[b]


@lru_cache(maxsize=None)
def _power_row(n: int, a: int) -> tuple[int, ...]:
    # All coefficients of (1 + t + ... + t**(a-1))**n, one sliding-window
    # convolution per factor: new[j] = sum(old[j-a+1 .. j]).
    row = [1]
    for i in range(1, n + 1):
        out = [0] * ((a - 1) * i + 1)
        acc = 0
        for j in range(len(out)):
            if j < len(row):
                acc += row[j]
            if 0 <= j - a < len(row):
                acc -= row[j - a]
            out[j] = acc
        row = out
    return tuple(row)


def eulerian(k: int, n: int) -> int:
    """Number of permutations of {1..n} with exactly k-1 descents.

    Computed by the standard two-term recurrence; the row sums are n!.
    """
    if k < 1 or k > n:
        raise ValueError(f"eulerian(k={k}, n={n}) requires 1 <= k <= n")
    return _descent_row(n)[k - 1]


@lru_cache(maxsize=None)
def _descent_row(n: int) -> tuple[int, ...]:
    # row[m] counts permutations of {1..n} with m descents
    if n == 1:
        return (1,)
    prev = _descent_row(n - 1)
    row = []
    for m in range(n):
        val = 0
        if m < n - 1:
            val += (m + 1) * prev[m]
        if m >= 1:
            val += (n - m) * prev[m - 1]
        row.append(val)
    return tuple(row)


def eulerian_by_enumeration(k: int, n: int) -> int:
    """Brute-force descent count over all n! permutations; test oracle for
    eulerian, usable up to n about 8."""
    if k < 1 or k > n:
        raise ValueError(f"eulerian(k={k}, n={n}) requires 1 <= k <= n")
    target = k - 1
    count = 0
    for p in permutations(range(n)):
        if sum(p[i] > p[i + 1] for i in range(n - 1)) == target:
            count += 1
    return count

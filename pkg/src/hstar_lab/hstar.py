"""Closed-form h*-vectors of the cube cross sections.

Two routes are provided.  hstar_closed_form evaluates the simplified
alternating sum

    h*_d = sum_i (-1)**i C(n, i) <n : (k - r*i)*d - i>_(k - r*i)

where <n : b>_a is the coefficient of t**b in (1 + t + ... + t**(a-1))**n and
terms stop contributing once the part bound k - r*i drops below 1.
raw_series_numerator expands the unsimplified rational-series numerator with
exact (t - 1)**j factors; its coefficients must agree with the simplified sum,
and everything of degree n and above must cancel.

check_lemma1 and check_prop1 verify the two identities that connect the raw
numerator to the simplified sum, on explicit inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coeffcore import (
    ZERO,
    IntPoly,
    coeff_of,
    poly_add,
    poly_mul,
    poly_pow,
    poly_scale,
    restricted_coeff,
)
from .dosp import PolytopeSpec

__all__ = [
    "HStarVector",
    "hstar_closed_form",
    "raw_series_numerator",
    "check_lemma1",
    "check_prop1",
]


@dataclass(frozen=True)
class HStarVector:
    """Entries h*_0 .. h*_{n-1} of the Ehrhart series numerator of a slice.

    Entries are nonnegative integers with h*_0 = 1; their sum is the
    normalized volume of the slice.
    """

    entries: tuple[int, ...]
    spec: PolytopeSpec

    def __post_init__(self):
        if len(self.entries) != self.spec.n:
            raise ValueError("one entry per degree 0..n-1 is required")
        if any(e < 0 for e in self.entries):
            raise ValueError("h*-vector entries must be nonnegative")
        if self.entries[0] != 1:
            raise ValueError("h*_0 must be 1")

    def total(self) -> int:
        """Sum of the entries, the normalized volume."""
        return sum(self.entries)

    def polynomial(self) -> IntPoly:
        return IntPoly.of(self.entries)


def hstar_closed_form(spec: PolytopeSpec) -> HStarVector:
    """h*-vector by the simplified alternating sum, one entry per winding
    number d = 0..n-1."""
    n, k, r = spec.n, spec.k, spec.r
    entries = []
    for d in range(n):
        acc = 0
        i = 0
        while k - r * i >= 1:
            a = k - r * i
            acc += (-1) ** i * math.comb(n, i) * restricted_coeff(n, a * d - i, a)
            i += 1
        entries.append(acc)
    return HStarVector(tuple(entries), spec)


def raw_series_numerator(spec: PolytopeSpec) -> IntPoly:
    """Numerator of the Ehrhart series over (1 - t)**n, expanded literally.

    Computes sum_i (-1)**i C(n,i) sum_j C(i,j) (t-1)**j sum_l <n-j : l*a>_a t**l
    with a = k - r*i, truncating the l sum at l = n; coefficients there are
    already identically zero, so nothing is lost.  Raises AssertionError if
    any coefficient of degree n or higher survives, since all h* information
    lives below degree n.
    """
    n, k, r = spec.n, spec.k, spec.r
    total = ZERO
    i = 0
    while k - r * i >= 1:
        a = k - r * i
        inner = ZERO
        for j in range(i + 1):
            series = IntPoly.of([restricted_coeff(n - j, l * a, a) for l in range(n + 1)])
            if not series:
                continue
            term = poly_mul(poly_pow(IntPoly.of((-1, 1)), j), series)
            inner = poly_add(inner, poly_scale(term, math.comb(i, j)))
        total = poly_add(total, poly_scale(inner, (-1) ** i * math.comb(n, i)))
        i += 1
    for degree in range(n, total.degree() + 1):
        if coeff_of(total, degree):
            raise AssertionError(
                f"series numerator has a nonzero coefficient at degree {degree}; "
                "degrees n and above must cancel"
            )
    return total


def check_lemma1(n: int, m: int, a: int) -> bool:
    """First-difference identity for bounded-part coefficients:

        <n : m>_a - <n : m-1>_a == <n-1 : m>_a - <n-1 : m-a>_a

    for n, m, a >= 1.
    """
    lhs = restricted_coeff(n, m, a) - restricted_coeff(n, m - 1, a)
    rhs = restricted_coeff(n - 1, m, a) - restricted_coeff(n - 1, m - a, a)
    return lhs == rhs


def check_prop1(s: int, a: int, n: int, max_degree: int) -> bool:
    """Series-shift identity: the truncations to max_degree of

        sum_j C(s,j) (t-1)**j sum_l <n-j : l*a>_a t**l
        sum_l <n : l*a - s>_a t**l

    agree coefficientwise.  The identity holds for 0 <= s <= n; rows with a
    negative upper index are treated as zero, so calling with s > n reports
    the genuine failure instead of raising.
    """
    lhs = [0] * (max_degree + 1)
    for j in range(s + 1):
        if j > n:
            continue
        c_binom = math.comb(s, j)
        shift = poly_pow(IntPoly.of((-1, 1)), j)
        for l in range(max_degree + 1):
            c = restricted_coeff(n - j, l * a, a)
            if c == 0:
                continue
            for e, q in enumerate(shift.coeffs):
                degree = l + e
                if degree <= max_degree:
                    lhs[degree] += c_binom * c * q
    rhs = [restricted_coeff(n, l * a - s, a) for l in range(max_degree + 1)]
    return lhs == rhs

"""Independent Ehrhart ground truth for the cube cross sections.

lattice_count gives the exact number of lattice points of the t-th dilate,
that is, integer vectors with entries in 0..r*t summing to k*t.  The fast
route is a bounded-part coefficient; small instances are additionally counted
by direct nested enumeration, which shares no code with the coefficient
tables.  hstar_from_oracle recovers the h*-vector from the counts by the
alternating sums that multiply the series by (1 - t)**n.
"""

from __future__ import annotations

import math

from .coeffcore import restricted_coeff
from .dosp import PolytopeSpec
from .hstar import HStarVector

__all__ = ["lattice_count", "lattice_count_direct", "hstar_from_oracle"]

# direct enumeration cross-check runs whenever t*r*n is at most this
_DIRECT_CHECK_BOUND = 24


def lattice_count_direct(spec: PolytopeSpec, t: int) -> int:
    """Count lattice points of the t-th dilate by walking coordinates one at
    a time; each admissible vector is reached exactly once."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    cap = spec.r * t

    def rec(coords_left: int, remaining: int) -> int:
        if coords_left == 0:
            return 1 if remaining == 0 else 0
        total = 0
        lo = max(0, remaining - (coords_left - 1) * cap)
        hi = min(cap, remaining)
        for x in range(lo, hi + 1):
            total += rec(coords_left - 1, remaining - x)
        return total

    return rec(spec.n, spec.k * t)


def lattice_count(spec: PolytopeSpec, t: int) -> int:
    """Number of lattice points in the t-th dilate of the slice.

    Computed as the coefficient of z**(k*t) in (1 + z + ... + z**(r*t))**n;
    small instances (t*r*n <= 24) are cross-checked against the direct
    enumeration, and a mismatch raises AssertionError.
    """
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    fast = restricted_coeff(spec.n, spec.k * t, spec.r * t + 1)
    if t * spec.r * spec.n <= _DIRECT_CHECK_BOUND:
        direct = lattice_count_direct(spec, t)
        if direct != fast:
            raise AssertionError(
                f"lattice count mismatch at t={t}: coefficient {fast}, enumeration {direct}")
    return fast


def hstar_from_oracle(spec: PolytopeSpec) -> HStarVector:
    """h*-vector recovered from the dilate counts L(0..n-1):

        h*_j = sum_{i=0..j} (-1)**i C(n, i) L(j - i)
    """
    counts = [lattice_count(spec, t) for t in range(spec.n)]
    entries = tuple(
        sum((-1) ** i * math.comb(spec.n, i) * counts[j - i] for i in range(j + 1))
        for j in range(spec.n)
    )
    return HStarVector(entries, spec)

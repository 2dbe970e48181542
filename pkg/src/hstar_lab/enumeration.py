"""Streaming enumeration and counting of decorated ordered set partitions by
type and winding number, and the h*-vector obtained by direct counting.

Winding vectors are the enumeration backbone: by the bijection with
partitions, streaming all vectors with entries in 0..k-1 and sum k*d visits
every partition of type (k, n) with winding number d exactly once.  Counting
splits the search space by the first entry and sums the slices in fixed
order, so results do not depend on the thread cap (HSTAR_LAB_THREADS).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

from .coeffcore import restricted_coeff
from .dosp import (
    Dosp,
    PolytopeSpec,
    WindingVector,
    dosp_from_winding_vector,
    is_r_hypersimplicial,
)
from .hstar import HStarVector

__all__ = [
    "bounded_vectors",
    "enumerate_winding_vectors",
    "iter_dosps",
    "count_dosps",
    "count_r_hypersimplicial",
    "hstar_combinatorial",
]


def bounded_vectors(length: int, bound: int, total: int) -> Iterator[tuple[int, ...]]:
    """All integer vectors of the given length with entries in 0..bound and
    the given entry sum, in lexicographic order."""
    if length < 0 or bound < 0:
        raise ValueError("length and bound must be nonnegative")
    if total < 0 or total > length * bound:
        return
    buf = [0] * length

    def rec(i: int, rem: int) -> Iterator[tuple[int, ...]]:
        if i == length:
            yield tuple(buf)
            return
        slots = length - i - 1
        lo = max(0, rem - slots * bound)
        hi = min(bound, rem)
        for v in range(lo, hi + 1):
            buf[i] = v
            yield from rec(i + 1, rem - v)

    yield from rec(0, total)


def enumerate_winding_vectors(k: int, n: int, d: int) -> Iterator[WindingVector]:
    """Every vector with entries in 0..k-1 summing to k*d, lexicographically;
    empty when k*d exceeds n*(k-1)."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    if d < 0:
        raise ValueError("winding number d must be nonnegative")
    for w in bounded_vectors(n, k - 1, k * d):
        yield WindingVector(w, k)


def iter_dosps(k: int, n: int, d: int) -> Iterator[Dosp]:
    """Canonical partitions of type (k, n) with winding number d, in the
    lexicographic order of their winding vectors."""
    for wv in enumerate_winding_vectors(k, n, d):
        yield dosp_from_winding_vector(wv)


def count_dosps(k: int, n: int, d: int) -> int:
    """Number of partitions of type (k, n) with winding number d; equals the
    length of the winding-vector stream."""
    return restricted_coeff(n, k * d, k)


def _thread_cap() -> int:
    raw = os.environ.get("HSTAR_LAB_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError("HSTAR_LAB_THREADS must be a positive integer") from None
    if cap < 1:
        raise ValueError("HSTAR_LAB_THREADS must be a positive integer")
    return cap


def _count_slice(k: int, n: int, r: int, d: int, first: int) -> int:
    count = 0
    for suffix in bounded_vectors(n - 1, k - 1, k * d - first):
        partition = dosp_from_winding_vector((first, *suffix), k)
        if is_r_hypersimplicial(partition, r):
            count += 1
    return count


def count_r_hypersimplicial(k: int, n: int, r: int, d: int) -> int:
    """Number of r-hypersimplicial partitions of type (k, n) with winding
    number d, by streaming winding vectors, converting each to a partition,
    and filtering."""
    if k < 1 or n < 1 or r < 1:
        raise ValueError("k, n and r must be positive")
    if d < 0:
        raise ValueError("winding number d must be nonnegative")
    firsts = range(k)
    workers = min(_thread_cap(), k)
    if workers == 1:
        return sum(_count_slice(k, n, r, d, f) for f in firsts)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(lambda f: _count_slice(k, n, r, d, f), firsts))


def hstar_combinatorial(spec: PolytopeSpec) -> HStarVector:
    """h*-vector of the slice by direct counting: entry d is the number of
    r-hypersimplicial partitions of type (k, n) with winding number d."""
    entries = tuple(
        count_r_hypersimplicial(spec.k, spec.n, spec.r, d) for d in range(spec.n)
    )
    return HStarVector(entries, spec)

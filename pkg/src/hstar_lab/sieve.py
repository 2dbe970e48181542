"""Machine checks for the inclusion-exclusion sieve behind the
r-hypersimplicial count.

The sieve works over a ground set T of elements (never containing n) that are
forced to sit in r-bad blocks.  For a set partition S of T,
dosps_with_bad_parts lists the partitions whose r-bad blocks contain every
part of S; sieve_term is the signed sum of those family sizes over all S.
Every partition in the sieve can be spread into one whose forced elements are
bad singleton blocks (spread_bad_parts); runs of consecutive marked singleton
blocks at gap exactly r with increasing elements are the obstruction tracked
by has_increasing_r_packed_gt1.  Members without such runs are counted by
second winding vectors: color the spot of each marked singleton and its r-1
trailing empties red, and record blue spots passed between consecutive
elements.  check_prop3 and check_prop4 verify the two collapsing steps of the
sieve, and sieve_term_closed_form is the resulting closed form, checked by
the eq6 sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .coeffcore import restricted_coeff
from .dosp import Dosp, SpotDiagram, canonicalize, r_bad_blocks
from .enumeration import bounded_vectors, count_r_hypersimplicial, iter_dosps

__all__ = [
    "SetPartition",
    "SecondWindingVector",
    "unordered_partitions",
    "dosp_family",
    "dosps_with_bad_parts",
    "sieve_term",
    "sieve_term_closed_form",
    "has_increasing_r_packed_gt1",
    "spread_bad_parts",
    "spread_image",
    "run_free_family",
    "packed_run_partition",
    "chi_by_runs",
    "second_winding_vector",
    "dosp_from_second_winding_vector",
    "enumerate_second_winding_vectors",
    "check_prop4",
    "check_prop3",
]

# a set partition: disjoint frozensets, sorted by least element
SetPartition = tuple[frozenset[int], ...]


def unordered_partitions(elements: Iterable[int]) -> list[SetPartition]:
    """All set partitions of the given elements, each exactly once; the count
    is the Bell number of the size.  The empty set has exactly the empty
    partition."""
    elems = sorted(set(elements))
    partial: list[list[list[int]]] = [[]]
    for e in elems:
        grown: list[list[list[int]]] = []
        for parts in partial:
            for i in range(len(parts)):
                grown.append([p + [e] if j == i else p for j, p in enumerate(parts)])
            grown.append(parts + [[e]])
        partial = grown
    return [_normalize_parts(parts) for parts in partial]


def _normalize_parts(parts: Iterable[Iterable[int]]) -> SetPartition:
    return tuple(sorted((frozenset(p) for p in parts), key=min))


def _require_ground(ground: frozenset[int], n: int) -> None:
    for t in ground:
        if not 1 <= t <= n:
            raise ValueError(f"ground element {t} outside 1..{n}")
    if n in ground:
        raise ValueError(f"ground set must not contain {n}")


@lru_cache(maxsize=None)
def dosp_family(k: int, n: int, d: int) -> tuple[Dosp, ...]:
    """All partitions of type (k, n) with winding number d, materialized in
    stream order.  Meant for desk-scale exhaustive checks."""
    return tuple(iter_dosps(k, n, d))


@lru_cache(maxsize=None)
def _family_with_bad_blocks(k: int, n: int, d: int, r: int):
    return tuple((p, r_bad_blocks(p, r)) for p in dosp_family(k, n, d))


def dosps_with_bad_parts(k: int, n: int, d: int, r: int, parts) -> list[Dosp]:
    """Partitions of type (k, n) with winding number d whose set of r-bad
    blocks contains every given part as a block, in stream order."""
    required = frozenset(frozenset(p) for p in parts)
    return [
        partition
        for partition, bad in _family_with_bad_blocks(k, n, d, r)
        if required <= bad
    ]


def sieve_term(k: int, n: int, d: int, r: int, ground: Iterable[int]) -> int:
    """Signed sum over all set partitions S of the ground set of the number
    of partitions whose r-bad blocks contain S, weighted by (-1)**|S|."""
    total = 0
    for parts in unordered_partitions(ground):
        total += (-1) ** len(parts) * len(dosps_with_bad_parts(k, n, d, r, parts))
    return total


def sieve_term_closed_form(k: int, n: int, d: int, r: int, m: int) -> int:
    """Predicted sieve term for any ground set of size m avoiding n:
    (-1)**m times the coefficient of t**((k-r*m)*d - m) in the (k-r*m)-bounded
    power."""
    a = k - r * m
    return (-1) ** m * restricted_coeff(n, a * d - m, a)


def has_increasing_r_packed_gt1(partition: Dosp, r: int, ground: Iterable[int]) -> bool:
    """Whether the partition contains consecutive marked singleton blocks, two
    or more, at gaps exactly r (the final gap at least r) whose elements
    increase along the sequence.  Block indices are cyclic; every starting
    position is scanned."""
    ground = frozenset(ground)
    m = len(partition.blocks)
    if m < 2:
        return False
    singlet = [len(b) == 1 and min(b) in ground for b in partition.blocks]
    elt = [min(b) for b in partition.blocks]
    gaps = partition.gaps
    for start in range(m):
        if not singlet[start]:
            continue
        for offset in range(1, m):
            cur = (start + offset - 1) % m
            nxt = (start + offset) % m
            if not (singlet[nxt] and gaps[cur] == r and elt[cur] < elt[nxt]):
                break
            if gaps[nxt] >= r:
                return True
    return False


def spread_bad_parts(partition: Dosp, r: int, parts) -> Dosp:
    """Replace each given part, which must occur as an r-bad block, by its
    elements in increasing order as consecutive singleton blocks: the first
    ones at gap exactly r, the last keeping the remainder of the original
    gap.  Other blocks are untouched and the winding number is preserved."""
    required = {frozenset(p) for p in parts}
    ground = frozenset().union(*required)
    _require_ground(ground, partition.n)
    new_blocks: list[frozenset[int]] = []
    new_gaps: list[int] = []
    found: set[frozenset[int]] = set()
    for block, gap in zip(partition.blocks, partition.gaps):
        if block in required:
            size = len(block)
            if gap < r * size:
                raise ValueError(f"block {sorted(block)} is not r-bad for r={r}")
            elems = sorted(block)
            for e in elems[:-1]:
                new_blocks.append(frozenset((e,)))
                new_gaps.append(r)
            new_blocks.append(frozenset((elems[-1],)))
            new_gaps.append(gap - r * (size - 1))
            found.add(block)
        else:
            new_blocks.append(block)
            new_gaps.append(gap)
    if found != required:
        missing = sorted(next(iter(required - found)))
        raise ValueError(f"part {missing} is not a block of the partition")
    return canonicalize(Dosp(tuple(new_blocks), tuple(new_gaps), partition.k, partition.n))


def spread_image(k: int, n: int, d: int, r: int, parts) -> frozenset[Dosp]:
    """Image of spread_bad_parts over the family whose r-bad blocks contain
    the given parts."""
    return frozenset(
        spread_bad_parts(q, r, parts) for q in dosps_with_bad_parts(k, n, d, r, parts)
    )


def _singleton_parts(ground: frozenset[int]) -> SetPartition:
    return tuple(frozenset((t,)) for t in sorted(ground))


def run_free_family(k: int, n: int, d: int, r: int, ground: Iterable[int]) -> list[Dosp]:
    """Members of the family whose marked elements all sit in r-bad singleton
    blocks and which carry no increasing packed run of length greater than 1."""
    ground = frozenset(ground)
    _require_ground(ground, n)
    return [
        p
        for p in dosps_with_bad_parts(k, n, d, r, _singleton_parts(ground))
        if not has_increasing_r_packed_gt1(p, r, ground)
    ]


def _ordered_packed_runs(partition: Dosp, r: int, ground: frozenset[int]) -> list[list[int]]:
    """Maximal increasing packed runs of marked singleton blocks, each as the
    list of its elements in circle order (which is increasing).  Every marked
    element, required to be a singleton block, lies in exactly one run."""
    m = len(partition.blocks)
    singlet = [len(b) == 1 and min(b) in ground for b in partition.blocks]
    elt = [min(b) for b in partition.blocks]
    placed = {elt[i] for i in range(m) if singlet[i]}
    if placed != ground:
        missing = sorted(ground - placed)
        raise ValueError(f"marked elements {missing} are not singleton blocks")
    for i in range(m):
        # every marked singleton must be r-bad, so runs always end on a gap
        # of at least r
        if singlet[i] and partition.gaps[i] < r:
            raise ValueError(f"marked singleton block {{{elt[i]}}} has gap below {r}")
    # link i -> i+1 when both are marked singlets, the gap at i is exactly r,
    # and the elements increase; runs are maximal linked stretches
    linked = [
        m > 1
        and singlet[i]
        and singlet[(i + 1) % m]
        and partition.gaps[i] == r
        and elt[i] < elt[(i + 1) % m]
        for i in range(m)
    ]
    runs: list[list[int]] = []
    for i in range(m):
        if not singlet[i]:
            continue
        prev = (i - 1) % m
        if m > 1 and singlet[prev] and linked[prev]:
            continue  # not the head of a run
        run = [elt[i]]
        cur = i
        while linked[cur]:
            cur = (cur + 1) % m
            if cur == i:
                break  # full cycle is impossible while n stays unmarked
            run.append(elt[cur])
        runs.append(run)
    return runs


def packed_run_partition(partition: Dosp, r: int, ground: Iterable[int]) -> SetPartition:
    """Partition of the ground set by the maximal increasing packed runs of
    the given partition."""
    ground = frozenset(ground)
    _require_ground(ground, partition.n)
    return _normalize_parts(_ordered_packed_runs(partition, r, ground))


def chi_by_runs(partition: Dosp, r: int, ground: Iterable[int], parts) -> bool:
    """Whether each part is a contiguous stretch of one maximal increasing
    packed run of the partition.  Equivalent to membership of the partition
    in spread_image for the same parts."""
    ground = frozenset(ground)
    runs = _ordered_packed_runs(partition, r, ground)
    run_of = {e: run for run in runs for e in run}
    for part in parts:
        elems = sorted(part)
        run = run_of.get(elems[0])
        if run is None:
            return False
        idx = run.index(elems[0])
        if run[idx : idx + len(elems)] != elems:
            return False
    return True


@dataclass(frozen=True)
class SecondWindingVector:
    """Blue-spot counts along the walk from i to i+1 after the spots of the
    marked singleton blocks and their r-1 trailing empties are colored red.

    With m marked elements there are k - r*m blue spots; entries for marked
    elements lie in 1..k-r*m, the others in 0..k-r*m-1, and the entry sum is
    the blue count times the winding number.
    """

    v: tuple[int, ...]
    ground: frozenset[int]
    r: int
    k: int

    def __post_init__(self):
        n = len(self.v)
        if n < 1:
            raise ValueError("vector must be nonempty")
        _require_ground(self.ground, n)
        blue = self.blue_count()
        if blue < 1:
            raise ValueError("k - r*|ground| must be positive")
        for i, vi in enumerate(self.v, start=1):
            if i in self.ground:
                if not 1 <= vi <= blue:
                    raise ValueError(f"entry v_{i}={vi} outside 1..{blue} for a marked element")
            elif not 0 <= vi <= blue - 1:
                raise ValueError(f"entry v_{i}={vi} outside 0..{blue - 1}")
        if sum(self.v) % blue:
            raise ValueError("entries must sum to a multiple of the blue spot count")

    def blue_count(self) -> int:
        return self.k - self.r * len(self.ground)

    def winding_number(self) -> int:
        return sum(self.v) // self.blue_count()


def second_winding_vector(partition: Dosp, r: int, ground: Iterable[int]) -> SecondWindingVector:
    """Read the second winding vector off the spot diagram: v_i counts blue
    spots strictly after the start and up to and including the end of the
    clockwise walk from the spot of i to the spot of i+1, and v_i = 0 when
    the two share a spot.

    Raises ValueError when a marked element is not a singleton block or lacks
    the r-1 empty trailing spots.
    """
    ground = frozenset(ground)
    _require_ground(ground, partition.n)
    diagram = SpotDiagram.from_dosp(partition)
    red = diagram.red_spots(ground, r)
    spot_of: dict[int, int] = {}
    for q, block in enumerate(diagram.occupancy):
        if block is not None:
            for e in block:
                spot_of[e] = q
    k, n = partition.k, partition.n
    v = []
    for i in range(1, n + 1):
        start = spot_of[i]
        end = spot_of[i % n + 1]
        if start == end:
            v.append(0)
            continue
        dist = (end - start) % k
        v.append(sum(1 for s in range(1, dist + 1) if (start + s) % k not in red))
    return SecondWindingVector(tuple(v), ground, r, k)


def dosp_from_second_winding_vector(
    v,
    k: Optional[int] = None,
    r: Optional[int] = None,
    ground: Optional[Iterable[int]] = None,
) -> Dosp:
    """The unique run-free partition whose second winding vector is v.

    Accepts a SecondWindingVector or a plain sequence plus k, r and the
    ground set.  Elements are first placed on a circle of blue spots by
    walking the entries; each marked element of a blue block is then spread
    clockwise behind the rest of its block, largest first, as a singleton
    followed by r-1 empty spots.  Inverse of second_winding_vector; rejects
    vectors violating the invariants.
    """
    if isinstance(v, SecondWindingVector):
        swv = v
        if (k is not None and k != swv.k) or (r is not None and r != swv.r):
            raise ValueError("conflicting parameters")
    else:
        if k is None or r is None or ground is None:
            raise ValueError("k, r and the ground set are required with a plain sequence")
        swv = SecondWindingVector(tuple(v), frozenset(ground), r, k)
    n = len(swv.v)
    blue = swv.blue_count()
    spots: list[list[int]] = [[] for _ in range(blue)]
    q = 0
    spots[0].append(1)
    for i in range(1, n):
        q = (q + swv.v[i - 1]) % blue
        spots[q].append(i + 1)
    layout: list[Optional[frozenset[int]]] = []
    for q in range(blue):
        content = set(spots[q])
        marked = sorted(content & swv.ground)
        rest = content - swv.ground
        layout.append(frozenset(rest) if rest else None)
        for t in reversed(marked):
            layout.append(frozenset((t,)))
            layout.extend([None] * (swv.r - 1))
    if len(layout) != swv.k:
        raise AssertionError("spot expansion must fill the whole circle")
    occupied = [s for s, block in enumerate(layout) if block is not None]
    blocks = tuple(layout[s] for s in occupied)
    gaps = []
    for idx, s in enumerate(occupied):
        nxt = occupied[(idx + 1) % len(occupied)]
        gaps.append((nxt - s) % swv.k or swv.k)
    return canonicalize(Dosp(blocks, tuple(gaps), swv.k, n))


def enumerate_second_winding_vectors(
    k: int, n: int, d: int, r: int, ground: Iterable[int]
) -> Iterator[SecondWindingVector]:
    """All vectors satisfying the second-winding bounds for the given ground
    set and winding number d, in lexicographic order of the shifted vector."""
    ground = frozenset(ground)
    _require_ground(ground, n)
    blue = k - r * len(ground)
    if blue < 1:
        return
    m = len(ground)
    for shifted in bounded_vectors(n, blue - 1, blue * d - m):
        v = tuple(x + 1 if i + 1 in ground else x for i, x in enumerate(shifted))
        yield SecondWindingVector(v, ground, r, k)


def check_prop4(k: int, n: int, d: int, r: int, ground: Iterable[int]) -> bool:
    """For every family member whose marked elements are bad singleton blocks,
    the signed count of set partitions whose spread image contains it must
    collapse to (-1)**|ground| on run-free members and to 0 otherwise."""
    ground = frozenset(ground)
    _require_ground(ground, n)
    base = dosps_with_bad_parts(k, n, d, r, _singleton_parts(ground))
    images = [
        (len(parts), spread_image(k, n, d, r, parts))
        for parts in unordered_partitions(ground)
    ]
    sign = (-1) ** len(ground)
    for p in base:
        signed = sum((-1) ** size for size, image in images if p in image)
        expected = 0 if has_increasing_r_packed_gt1(p, r, ground) else sign
        if signed != expected:
            return False
    return True


def _shift_avoiding_top(ground: frozenset[int], n: int) -> frozenset[int]:
    """Cyclic relabeling of a proper subset so that n drops out; the sieve
    term is invariant under such shifts."""
    free = next(g for g in range(1, n + 1) if g not in ground)
    s = (n - free) % n
    return frozenset((t - 1 + s) % n + 1 for t in ground)


def check_prop3(k: int, n: int, r: int, d: int) -> bool:
    """The sieve terms over all subsets of {1..n} must sum to the number of
    r-hypersimplicial partitions of type (k, n) with winding number d.
    Subsets containing n (other than the full set) are first shifted away
    from n, which leaves their term unchanged."""
    total = 0
    for mask in range(2**n):
        ground = frozenset(t for t in range(1, n + 1) if mask >> (t - 1) & 1)
        if n in ground and len(ground) < n:
            ground = _shift_avoiding_top(ground, n)
        total += sieve_term(k, n, d, r, ground)
    return total == count_r_hypersimplicial(k, n, r, d)

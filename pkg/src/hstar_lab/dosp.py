"""Decorated ordered set partitions on a circle of k spots.

A decorated ordered set partition of type (k, n) is an ordered partition of
{1..n} into blocks placed clockwise on a circle, together with positive gap
labels summing to k; the label of a block is the clockwise distance to the
next block.  Rotating the block list does not change the object, and the
canonical rotation stores the block containing 1 first.

The winding vector of a partition records, for each i, the clockwise distance
from the block of i to the block of i+1 (indices cyclic in {1..n}); its entry
sum is k times the winding number.  A block is r-bad when its gap label is at
least r times its size, and a partition with no r-bad block is
r-hypersimplicial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

__all__ = [
    "PolytopeSpec",
    "Dosp",
    "WindingVector",
    "SpotDiagram",
    "parse_dosp",
    "format_dosp",
    "canonicalize",
    "winding_vector",
    "winding_number",
    "dosp_from_winding_vector",
    "cyclic_shift_elements",
    "r_bad_blocks",
    "is_r_hypersimplicial",
]


@dataclass(frozen=True)
class PolytopeSpec:
    """The slice of the cube [0, r]**n at coordinate sum k; r = 1 gives the
    hypersimplex.  Requires 0 < k < r*n so the slice has dimension n - 1."""

    r: int
    k: int
    n: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("coordinate cap r must be at least 1")
        if self.n < 2:
            raise ValueError("ambient dimension n must be at least 2")
        if not 0 < self.k < self.r * self.n:
            raise ValueError(f"slice level k={self.k} must satisfy 0 < k < r*n = {self.r * self.n}")


@dataclass(frozen=True)
class Dosp:
    """Ordered blocks partitioning {1..n} with positive gap labels summing to k.

    Instances may be held in any rotation; canonicalize() fixes the unique
    representative with the block containing 1 first.  Constructors in this
    package (parse_dosp, dosp_from_winding_vector) always return canonical
    values.
    """

    blocks: tuple[frozenset[int], ...]
    gaps: tuple[int, ...]
    k: int
    n: int

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("at least one block is required")
        if len(self.blocks) != len(self.gaps):
            raise ValueError("blocks and gap labels must have equal length")
        seen: set[int] = set()
        total = 0
        for block, gap in zip(self.blocks, self.gaps):
            if not block:
                raise ValueError("blocks must be nonempty")
            if gap < 1:
                raise ValueError(f"nonpositive gap label {gap}")
            total += gap
            for e in block:
                if e in seen:
                    raise ValueError(f"duplicate element {e}")
                if not 1 <= e <= self.n:
                    raise ValueError(f"element {e} outside 1..{self.n}")
                seen.add(e)
        if total != self.k:
            raise ValueError(f"gap labels sum to {total}, expected k={self.k}")
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise ValueError(f"missing elements {missing}")

    def __str__(self) -> str:
        return format_dosp(self)


@dataclass(frozen=True)
class WindingVector:
    """Clockwise distances from the block of i to the block of i+1, indices
    cyclic; entries lie in 0..k-1 and sum to a multiple of k."""

    w: tuple[int, ...]
    k: int

    def winding_number(self) -> int:
        total = sum(self.w)
        if total % self.k:
            raise AssertionError("entries of a valid winding vector sum to a multiple of k")
        return total // self.k


@dataclass(frozen=True)
class SpotDiagram:
    """Explicit circle of k spots; occupancy[q] is the block sitting on spot q,
    or None for an empty spot.  Spot indices increase clockwise."""

    k: int
    occupancy: tuple[Optional[frozenset[int]], ...]

    @classmethod
    def from_dosp(cls, partition: Dosp) -> SpotDiagram:
        """Place the first stored block on spot 0 and walk the gap labels."""
        spots: list[Optional[frozenset[int]]] = [None] * partition.k
        q = 0
        for block, gap in zip(partition.blocks, partition.gaps):
            spots[q] = block
            q = (q + gap) % partition.k
        return cls(partition.k, tuple(spots))

    def occupied_spots(self) -> list[int]:
        return [q for q, block in enumerate(self.occupancy) if block is not None]

    def blocks_and_gaps(self) -> tuple[tuple[frozenset[int], ...], tuple[int, ...]]:
        """Blocks read clockwise from the first occupied spot at or after 0,
        with the clockwise distance to the next occupied spot as gap."""
        occupied = self.occupied_spots()
        if not occupied:
            raise ValueError("diagram has no occupied spot")
        blocks = tuple(self.occupancy[q] for q in occupied)
        gaps = []
        for idx, q in enumerate(occupied):
            nxt = occupied[(idx + 1) % len(occupied)]
            gaps.append((nxt - q) % self.k or self.k)
        return blocks, tuple(gaps)

    def to_dosp(self) -> Dosp:
        blocks, gaps = self.blocks_and_gaps()
        n = sum(len(b) for b in blocks)
        return Dosp(blocks, gaps, self.k, n)

    def red_spots(self, marked: Iterable[int], r: int) -> frozenset[int]:
        """Spots colored red relative to the marked elements: the spot of each
        singleton block {t}, t marked, plus the r-1 empty spots after it.
        Every other spot is blue.

        Raises ValueError when a marked element does not sit alone in a block
        or when one of the r-1 trailing spots is occupied.
        """
        spot_of_block: dict[frozenset[int], int] = {}
        holder: dict[int, int] = {}
        for q, block in enumerate(self.occupancy):
            if block is None:
                continue
            spot_of_block[block] = q
            for e in block:
                holder[e] = q
        red: set[int] = set()
        targets = sorted(set(marked))
        for t in targets:
            if t not in holder:
                raise ValueError(f"marked element {t} does not appear")
            q = holder[t]
            if self.occupancy[q] != frozenset((t,)):
                raise ValueError(f"marked element {t} is not a singleton block")
            for off in range(r):
                spot = (q + off) % self.k
                if off and self.occupancy[spot] is not None:
                    raise ValueError(
                        f"singleton block {{{t}}} needs {r - 1} empty spots after it")
                red.add(spot)
        # spans cannot overlap once the emptiness checks pass
        assert len(red) == r * len(targets)
        return frozenset(red)


def canonicalize(partition: Dosp) -> Dosp:
    """Rotation of the block list that stores the block containing 1 first.
    Idempotent, and constant on each rotation class."""
    blocks = partition.blocks
    i = next(idx for idx, block in enumerate(blocks) if 1 in block)
    if i == 0:
        return partition
    return Dosp(
        blocks[i:] + blocks[:i],
        partition.gaps[i:] + partition.gaps[:i],
        partition.k,
        partition.n,
    )


def format_dosp(partition: Dosp) -> str:
    """Render as ({a,b}_l,...) with ascending elements inside each block."""
    pieces = []
    for block, gap in zip(partition.blocks, partition.gaps):
        body = ",".join(str(e) for e in sorted(block))
        pieces.append("{%s}_%d" % (body, gap))
    return "(" + ",".join(pieces) + ")"


_DOSP_RE = re.compile(r"\(\{\d+(?:,\d+)*\}_\d+(?:,\{\d+(?:,\d+)*\}_\d+)*\)")
_BLOCK_RE = re.compile(r"\{(\d+(?:,\d+)*)\}_(\d+)")


def parse_dosp(text: str, k: int, n: int) -> Dosp:
    """Parse the ({..}_l,...) notation into a canonical partition of type (k, n).

    Whitespace is insignificant.  Raises ValueError with a distinct message
    for malformed syntax, duplicate or missing elements, a gap-label sum
    different from k, and nonpositive gap labels.
    """
    compact = "".join(text.split())
    if not _DOSP_RE.fullmatch(compact):
        raise ValueError(f"malformed decorated ordered set partition text: {text!r}")
    blocks: list[frozenset[int]] = []
    gaps: list[int] = []
    for body, gap in _BLOCK_RE.findall(compact):
        elems = [int(e) for e in body.split(",")]
        if len(set(elems)) != len(elems):
            dup = next(e for e in elems if elems.count(e) > 1)
            raise ValueError(f"duplicate element {dup}")
        blocks.append(frozenset(elems))
        gaps.append(int(gap))
    return canonicalize(Dosp(tuple(blocks), tuple(gaps), k, n))


def winding_vector(partition: Dosp) -> WindingVector:
    """Clockwise spot distance from the block of i to the block of i+1 for
    each i, with w_i = 0 when the two share a block."""
    spot_of: dict[int, int] = {}
    acc = 0
    for block, gap in zip(partition.blocks, partition.gaps):
        for e in block:
            spot_of[e] = acc
        acc += gap
    k, n = partition.k, partition.n
    w = tuple((spot_of[i % n + 1] - spot_of[i]) % k for i in range(1, n + 1))
    return WindingVector(w, k)


def winding_number(partition: Dosp) -> int:
    """Total winding vector length divided by k, an exact division."""
    return winding_vector(partition).winding_number()


def dosp_from_winding_vector(w, k: Optional[int] = None) -> Dosp:
    """The unique partition, returned canonical, whose winding vector is w.

    Accepts a WindingVector or a plain sequence plus k.  Entries must lie in
    0..k-1 and sum to a multiple of k; the circle is walked clockwise, placing
    1 on spot 0 and each next element w_i spots further.
    """
    if isinstance(w, WindingVector):
        if k is None:
            k = w.k
        elif k != w.k:
            raise ValueError("conflicting circle sizes")
        w = w.w
    if k is None:
        raise ValueError("circle circumference k is required")
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise ValueError("winding vector must be nonempty")
    total = 0
    for wi in w:
        if not 0 <= wi <= k - 1:
            raise ValueError(f"winding entry {wi} outside 0..{k - 1}")
        total += wi
    if total % k:
        raise ValueError(f"winding entries sum to {total}, not a multiple of k={k}")
    spots: list[list[int]] = [[] for _ in range(k)]
    q = 0
    spots[0].append(1)
    for i in range(1, n):
        q = (q + w[i - 1]) % k
        spots[q].append(i + 1)
    occupied = [s for s in range(k) if spots[s]]
    blocks = tuple(frozenset(spots[s]) for s in occupied)
    gaps = []
    for idx, s in enumerate(occupied):
        nxt = occupied[(idx + 1) % len(occupied)]
        gaps.append((nxt - s) % k or k)
    # element 1 sits on spot 0, so the block list is already canonical
    return Dosp(blocks, tuple(gaps), k, n)


def cyclic_shift_elements(partition: Dosp, s: int) -> Dosp:
    """Relabel each element e as ((e-1+s) mod n)+1, keeping blocks and gaps;
    the result is recanonicalized.  Preserves the winding number."""
    n = partition.n
    if not 0 <= s < n:
        raise ValueError(f"shift must lie in 0..{n - 1}")
    blocks = tuple(frozenset((e - 1 + s) % n + 1 for e in block) for block in partition.blocks)
    return canonicalize(Dosp(blocks, partition.gaps, partition.k, n))


def r_bad_blocks(partition: Dosp, r: int) -> frozenset[frozenset[int]]:
    """Blocks whose gap label is at least r times their size."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return frozenset(
        block for block, gap in zip(partition.blocks, partition.gaps) if gap >= r * len(block)
    )


def is_r_hypersimplicial(partition: Dosp, r: int) -> bool:
    """True when every block satisfies 1 <= gap <= r*size - 1, i.e. no block
    is r-bad."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return all(gap < r * len(block) for block, gap in zip(partition.blocks, partition.gaps))

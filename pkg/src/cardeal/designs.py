"""Block-design checks and the binary construction.

A collection of equally sized lines on v points is a t-design when every
t-subset of the points lies in the same number of lines; that number is the
covalency. Covalency is decided here by exhaustive iteration over all
C(v, t) t-subsets with early exit on the first mismatch, which at desk scale
is both feasible and the most trustworthy oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .model import Announcement, CardSet, to_mask


@dataclass(frozen=True)
class CovalencyMismatch:
    """Two t-subsets covered by different numbers of lines."""

    subset: CardSet
    count: int
    reference: CardSet
    reference_count: int


@dataclass(frozen=True)
class DesignProfile:
    """Covalency at every tuple size up to the block size, plus the strength.

    ``covalencies[t]`` is the constant count for t-subsets, or None when the
    count varies. The strength is the largest t with a constant count.
    """

    v: int
    block_size: int
    covalencies: tuple[int | None, ...]
    strength: int


def _scan(line_masks: Sequence[int], points: Sequence[int], t: int):
    expected = None
    reference = None
    for subset in combinations(points, t):
        sm = to_mask(subset)
        count = sum(1 for m in line_masks if m & sm == sm)
        if expected is None:
            expected, reference = count, subset
        elif count != expected:
            return None, CovalencyMismatch(subset, count, reference, expected)
    if expected is None:
        return 0, None  # no t-subsets at all: vacuously constant
    return expected, None


def covalency_over(lines: Iterable[CardSet], points: Iterable[int], t: int) -> int | None:
    """Constant cover count of t-subsets of ``points`` by ``lines``, else None.

    The point set is explicit so that residual collections (lines avoiding a
    card) can be measured on the deck minus that card.
    """
    line_list = list(lines)
    pts = tuple(points)
    if t < 0:
        raise ValueError(f"tuple size must be nonnegative, got {t}")
    if line_list and t > len(line_list[0]):
        raise ValueError(f"tuple size {t} exceeds block size {len(line_list[0])}")
    return _scan([to_mask(line) for line in line_list], pts, t)[0]


def covalency(ann: Announcement, v: int, t: int) -> int | None:
    """Covalency of the announcement at tuple size t over the full deck."""
    _check_points(ann, v)
    if not 0 <= t <= ann.block_size:
        raise ValueError(f"tuple size {t} out of range for block size {ann.block_size}")
    return _scan([to_mask(line) for line in ann.lines], range(v), t)[0]


def covalency_mismatch(ann: Announcement, v: int, t: int) -> CovalencyMismatch | None:
    """The first uneven pair of t-subsets, or None when the count is constant."""
    _check_points(ann, v)
    if not 0 <= t <= ann.block_size:
        raise ValueError(f"tuple size {t} out of range for block size {ann.block_size}")
    return _scan([to_mask(line) for line in ann.lines], range(v), t)[1]


def design_strength(ann: Announcement, v: int) -> int:
    """Largest t with constant covalency.

    Constancy at t implies constancy at t-1 for equally sized blocks, so the
    scan stops at the first tuple size without a constant count.
    """
    _check_points(ann, v)
    masks = [to_mask(line) for line in ann.lines]
    strength = 0
    for t in range(1, ann.block_size + 1):
        if _scan(masks, range(v), t)[0] is None:
            break
        strength = t
    return strength


def design_profile(ann: Announcement, v: int) -> DesignProfile:
    """Covalency table for every tuple size from 0 to the block size."""
    _check_points(ann, v)
    masks = [to_mask(line) for line in ann.lines]
    table = tuple(_scan(masks, range(v), t)[0] for t in range(ann.block_size + 1))
    strength = max(t for t, value in enumerate(table) if value is not None)
    return DesignProfile(v, ann.block_size, table, strength)


def binary_design(n: int) -> Announcement:
    """The 2(2^n - 1) lines of size 2^(n-1) on 2^n points cut out by parity.

    Points are the n-bit vectors read as decimals. For every nonzero vector
    y, one line collects the points x with an even number of shared bits
    (x . y = 0 over GF(2)) and a second line collects the rest. Dot products
    reduce to the parity of the bitwise AND of the integer encodings.
    """
    if n < 3:
        raise ValueError(f"need at least 3 bits, got {n}")
    size = 1 << n
    lines = []
    for y in range(1, size):
        zero_side = tuple(x for x in range(size) if (x & y).bit_count() % 2 == 0)
        one_side = tuple(x for x in range(size) if (x & y).bit_count() % 2 == 1)
        lines.append(zero_side)
        lines.append(one_side)
    return Announcement.of(lines)


def profile_json(profile: DesignProfile) -> dict:
    return {
        "v": profile.v,
        "k": profile.block_size,
        "lambda": {str(t): value for t, value in enumerate(profile.covalencies)},
        "strength": profile.strength,
    }


def _check_points(ann: Announcement, v: int) -> None:
    top = max(line[-1] for line in ann.lines)
    if top >= v:
        raise ValueError(f"card {top} out of range for deck size {v}")

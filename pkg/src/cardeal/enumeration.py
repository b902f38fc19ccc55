"""Exhaustive generation and classification of good announcements.

The generator walks all k-line supersets of a fixed hand, pruning branches
as soon as two chosen lines could be avoided by one b-set (which already
sinks CA1), and keeps exactly the candidates that pass the full CA1-CA3
check. No isomorph rejection, no shortcuts: at desk scale the naive sweep is
the ground truth everything else is tested against.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .axioms import is_good
from .guard import require_work
from .model import Announcement, CardSet, Parameters, card_set, to_mask


def enumerate_good_announcements(
    params: Parameters,
    hand: Iterable[int],
    k: int,
    *,
    max_work: int | None = None,
) -> list[Announcement]:
    """All k-line announcements containing ``hand`` that satisfy CA1-CA3.

    Canonically ordered and duplicate-free. Refuses instances whose raw
    candidate space C(C(v, a), k) exceeds the work limit.
    """
    hand = card_set(hand, params.v)
    if len(hand) != params.a:
        raise ValueError(f"hand {hand} is not an {params.a}-set")
    if k < 1:
        raise ValueError(f"line count must be positive, got {k}")
    require_work(comb(comb(params.v, params.a), k), max_work, "announcement enumeration")
    return list(_good_containing(params, hand, k))


@lru_cache(maxsize=None)
def _good_containing(params: Parameters, hand: CardSet, k: int) -> tuple[Announcement, ...]:
    v, b = params.v, params.b
    hand_mask = to_mask(hand)
    # Two lines can be avoided simultaneously iff at least b cards lie
    # outside their union; such a pair already violates CA1.
    pool = []
    for line in combinations(range(v), params.a):
        m = to_mask(line)
        if line != hand and v - (m | hand_mask).bit_count() < b:
            pool.append((line, m))

    found: list[Announcement] = []

    def extend(start: int, chosen: list[CardSet], chosen_masks: list[int]) -> None:
        if len(chosen) == k - 1:
            ann = Announcement.of([hand, *chosen])
            if is_good(ann, params):
                found.append(ann)
            return
        limit = len(pool) - (k - 2 - len(chosen))
        for i in range(start, limit):
            line, m = pool[i]
            if all(v - (m | pm).bit_count() < b for pm in chosen_masks):
                extend(i + 1, chosen + [line], chosen_masks + [m])

    extend(0, [], [])
    return tuple(sorted(found, key=lambda ann: ann.lines))


def triple_point(ann: Announcement) -> int | None:
    """The card occurring in strictly more lines than every other card, if any."""
    counts = Counter(card for line in ann.lines for card in line)
    ranked = counts.most_common(2)
    if len(ranked) == 1 or ranked[0][1] > ranked[1][1]:
        return ranked[0][0]
    return None


def classify_by_triple(
    anns: Sequence[Announcement],
    hand: Iterable[int],
) -> tuple[list[Announcement], list[Announcement]]:
    """Split announcements by whether their triple point lies in ``hand``.

    Every announcement must contain the hand and have a unique triple point.
    """
    hand = card_set(hand)
    inside: list[Announcement] = []
    outside: list[Announcement] = []
    for ann in anns:
        if hand not in ann.lines:
            raise ValueError(f"announcement {ann.lines} does not contain {hand}")
        top = triple_point(ann)
        if top is None:
            raise ValueError(f"announcement {ann.lines} has no unique most-frequent card")
        (inside if top in hand else outside).append(ann)
    return inside, outside


def special_point_announcements(
    params: Parameters,
    hand: Iterable[int],
    p: int,
    *,
    max_work: int | None = None,
) -> list[Announcement]:
    """Five-line good announcements containing ``hand`` whose triple point is p."""
    if (params.a, params.b, params.c) != (3, 3, 1):
        raise ValueError(f"five-line census is specific to the (3,3,1) deal, got {params}")
    if not 0 <= p < params.v:
        raise ValueError(f"point {p} out of range for deck size {params.v}")
    candidates = enumerate_good_announcements(params, hand, 5, max_work=max_work)
    return [ann for ann in candidates if triple_point(ann) == p]

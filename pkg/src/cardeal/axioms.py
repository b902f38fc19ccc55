"""The five combinatorial safety checks and the elimination machinery.

An announcement is examined from the receivers' points of view. For a set X
of cards held by someone else, the lines *avoiding* X (disjoint from it) are
the holdings the announcer could still have. The checks are:

* CA1: every b-set is avoided by at most one line, so the intended receiver
  can always pin down the announcer's hand.
* CA2: for every c-set, the avoiding lines have empty intersection, so the
  eavesdropper can never place a card with the announcer.
* CA3: for every c-set, the avoiding lines cover everything outside the
  c-set, so the eavesdropper can never place a card with the receiver.
* CA4: for every c-set X there is a single number n_X such that every card
  outside X occurs in exactly n_X avoiding lines (no occurrence bias in the
  lines the eavesdropper still considers possible).
* CA5: the same constancy, with number m_X, for the receiver's candidate
  b-sets induced by the avoiding lines.

``check_axioms`` decides all five by exhaustive quantification and reports
witnesses for failures; ``is_good`` is the CA1-CA3 fast path used by the
enumeration sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from .guard import require_work
from .model import Announcement, CardSet, Parameters, card_set, format_card_set, from_mask, to_mask


class InferenceError(LookupError):
    """The announcement does not determine a unique line for this hand."""


class NoLineError(InferenceError):
    """No line avoids the hand; the deal is inconsistent with a truthful announcement."""


class AmbiguousLineError(InferenceError):
    """Two or more lines avoid the hand (a CA1 violation for this hand)."""


@dataclass(frozen=True)
class AmbiguityWitness:
    """A b-set avoided by two or more lines (CA1 failure)."""

    x: CardSet
    lines: tuple[CardSet, ...]


@dataclass(frozen=True)
class CommonCardWitness:
    """A c-set whose avoiding lines share at least one card (CA2 failure)."""

    x: CardSet
    common: CardSet


@dataclass(frozen=True)
class UncoveredCardWitness:
    """A c-set whose avoiding lines miss at least one outside card (CA3 failure)."""

    x: CardSet
    missing: CardSet


@dataclass(frozen=True)
class UnevenCountWitness:
    """A c-set with unequal per-card counts (CA4/CA5 failure)."""

    x: CardSet
    counts: tuple[tuple[int, int], ...]  # (card, occurrences) for cards outside x

    def count_of(self, card: int) -> int:
        return dict(self.counts)[card]


@dataclass(frozen=True)
class AxiomVerdict:
    passed: bool
    witness: object | None = None


@dataclass(frozen=True)
class CountVerdict:
    """Constancy verdict for CA4 or CA5 across every c-set.

    ``constants`` maps each c-set with a constant count to that count; every
    other c-set appears in ``violations`` with its uneven counts. The verdict
    passes iff there are no violations.
    """

    passed: bool
    constants: dict[CardSet, int] = field(default_factory=dict)
    violations: tuple[UnevenCountWitness, ...] = ()

    @property
    def witness(self) -> UnevenCountWitness | None:
        return self.violations[0] if self.violations else None

    def violation_for(self, x: Iterable[int]) -> UnevenCountWitness | None:
        key = tuple(sorted(x))
        for witness in self.violations:
            if witness.x == key:
                return witness
        return None


@dataclass(frozen=True)
class AxiomReport:
    params: Parameters
    ca1: AxiomVerdict
    ca2: AxiomVerdict
    ca3: AxiomVerdict
    ca4: CountVerdict
    ca5: CountVerdict

    @property
    def good(self) -> bool:
        return self.ca1.passed and self.ca2.passed and self.ca3.passed

    @property
    def all_passed(self) -> bool:
        return self.good and self.ca4.passed and self.ca5.passed

    def passed(self, axiom: str) -> bool:
        return {
            "ca1": self.ca1.passed,
            "ca2": self.ca2.passed,
            "ca3": self.ca3.passed,
            "ca4": self.ca4.passed,
            "ca5": self.ca5.passed,
        }[axiom]


def lines_avoiding(ann: Announcement, x: Iterable[int]) -> list[CardSet]:
    """The lines disjoint from x, in canonical order."""
    xm = to_mask(x)
    return [line for line in ann.lines if to_mask(line) & xm == 0]


def bob_sets(ann: Announcement, x: Iterable[int], params: Parameters) -> list[CardSet]:
    """The receiver hands the eavesdropper holding x considers possible.

    One candidate per avoiding line: the rest of the deck once x and that
    line are removed. Duplicates are dropped and the result is sorted.
    """
    xs = card_set(x, params.v)
    if len(xs) != params.c:
        raise ValueError(f"expected a {params.c}-set, got {xs}")
    rest = ((1 << params.v) - 1) & ~to_mask(xs)
    candidates = {rest & ~to_mask(line) for line in lines_avoiding(ann, xs)}
    return sorted(from_mask(mask) for mask in candidates)


def bob_infer(ann: Announcement, bob_hand: Iterable[int]) -> CardSet:
    """The unique line avoiding the receiver's hand.

    Raises NoLineError when elimination leaves nothing and
    AmbiguousLineError when it leaves two or more lines.
    """
    hand = card_set(bob_hand)
    hits = lines_avoiding(ann, hand)
    if not hits:
        raise NoLineError(f"no line avoids {hand}")
    if len(hits) > 1:
        raise AmbiguousLineError(f"{len(hits)} lines avoid {hand}: {hits}")
    return hits[0]


def cathy_card_counts(ann: Announcement, x: Iterable[int], params: Parameters) -> dict[int, int]:
    """Occurrences of every deck card among the lines avoiding x; cards of x map to 0."""
    xs = card_set(x, params.v)
    if len(xs) != params.c:
        raise ValueError(f"expected a {params.c}-set, got {xs}")
    avoid = lines_avoiding(ann, xs)
    inside = set(xs)
    counts = {card: 0 for card in range(params.v)}
    for line in avoid:
        for card in line:
            counts[card] += 1
    for card in inside:
        counts[card] = 0
    return counts


def _validate(ann: Announcement, params: Parameters) -> None:
    for line in ann.lines:
        if len(line) != params.a:
            raise ValueError(f"line {line} does not have {params.a} cards")
        if line[-1] >= params.v:
            raise ValueError(f"card {line[-1]} out of range for deck size {params.v}")


def check_axioms(ann: Announcement, params: Parameters, *, max_work: int | None = None) -> AxiomReport:
    """Decide CA1-CA5 by exhaustive quantification over all b-sets and c-sets.

    Failure witnesses are deterministic: CA1-CA3 report the lexicographically
    first violating set, CA4/CA5 record every c-set without a constant count
    (first one doubling as the primary witness) together with the constants
    found elsewhere.
    """
    _validate(ann, params)
    v = params.v
    require_work(comb(v, params.b) + comb(v, params.c), max_work, "axiom check")
    masks = [to_mask(line) for line in ann.lines]
    omega = (1 << v) - 1

    ca1 = AxiomVerdict(True)
    for xs in combinations(range(v), params.b):
        xm = to_mask(xs)
        hits = [line for line, m in zip(ann.lines, masks) if m & xm == 0]
        if len(hits) > 1:
            ca1 = AxiomVerdict(False, AmbiguityWitness(xs, tuple(hits)))
            break

    ca2 = AxiomVerdict(True)
    ca3 = AxiomVerdict(True)
    n_constants: dict[CardSet, int] = {}
    m_constants: dict[CardSet, int] = {}
    n_violations: list[UnevenCountWitness] = []
    m_violations: list[UnevenCountWitness] = []
    for xs in combinations(range(v), params.c):
        xm = to_mask(xs)
        avoid = [m for m in masks if m & xm == 0]
        rest = omega & ~xm
        if avoid:
            common = avoid[0]
            union = 0
            for m in avoid:
                common &= m
                union |= m
            # With no avoiding lines nothing can be inferred, so CA2 holds
            # vacuously there; the union test below still fails for CA3.
            if common and ca2.passed:
                ca2 = AxiomVerdict(False, CommonCardWitness(xs, from_mask(common)))
        else:
            union = 0
        if union != rest and ca3.passed:
            ca3 = AxiomVerdict(False, UncoveredCardWitness(xs, from_mask(rest & ~union)))
        outside = from_mask(rest)
        line_counts = tuple((y, sum(1 for m in avoid if m >> y & 1)) for y in outside)
        _record(xs, line_counts, n_constants, n_violations)
        bsets = {rest & ~m for m in avoid}
        bob_counts = tuple((y, sum(1 for m in bsets if m >> y & 1)) for y in outside)
        _record(xs, bob_counts, m_constants, m_violations)

    return AxiomReport(
        params=params,
        ca1=ca1,
        ca2=ca2,
        ca3=ca3,
        ca4=CountVerdict(not n_violations, n_constants, tuple(n_violations)),
        ca5=CountVerdict(not m_violations, m_constants, tuple(m_violations)),
    )


def _record(
    xs: CardSet,
    counts: tuple[tuple[int, int], ...],
    constants: dict[CardSet, int],
    violations: list[UnevenCountWitness],
) -> None:
    values = {count for _, count in counts}
    if len(values) <= 1:
        constants[xs] = counts[0][1] if counts else 0
    else:
        violations.append(UnevenCountWitness(xs, counts))


def is_good(ann: Announcement, params: Parameters, *, max_work: int | None = None) -> bool:
    """True iff CA1, CA2 and CA3 all hold. Early-exit twin of check_axioms."""
    _validate(ann, params)
    v = params.v
    require_work(comb(v, params.b) + comb(v, params.c), max_work, "axiom check")
    masks = [to_mask(line) for line in ann.lines]
    omega = (1 << v) - 1

    for xs in combinations(range(v), params.b):
        xm = to_mask(xs)
        seen = 0
        for m in masks:
            if m & xm == 0:
                seen += 1
                if seen > 1:
                    return False

    for xs in combinations(range(v), params.c):
        xm = to_mask(xs)
        avoid = [m for m in masks if m & xm == 0]
        if not avoid:
            return False  # nothing covers the outside cards
        common = avoid[0]
        union = 0
        for m in avoid:
            common &= m
            union |= m
        if common or union != omega & ~xm:
            return False
    return True


def axiom_report_json(report: AxiomReport) -> dict:
    """Stable JSON form of a report, card sets rendered in compact text."""
    v = report.params.v

    def key(cards: CardSet) -> str:
        return format_card_set(cards, v)

    def simple(verdict: AxiomVerdict, payload) -> dict:
        out = {"pass": verdict.passed, "witness": None}
        if verdict.witness is not None:
            out["witness"] = payload(verdict.witness)
        return out

    def counting(verdict: CountVerdict, label: str) -> dict:
        out = {
            "pass": verdict.passed,
            label: {key(x): n for x, n in sorted(verdict.constants.items())},
            "witness": None,
            "violating": [key(w.x) for w in verdict.violations],
        }
        if verdict.witness is not None:
            out["witness"] = {
                "x": key(verdict.witness.x),
                "counts": {str(card): count for card, count in verdict.witness.counts},
            }
        return out

    return {
        "ca1": simple(report.ca1, lambda w: {"x": key(w.x), "lines": [key(l) for l in w.lines]}),
        "ca2": simple(report.ca2, lambda w: {"x": key(w.x), "common": key(w.common)}),
        "ca3": simple(report.ca3, lambda w: {"x": key(w.x), "missing": key(w.missing)}),
        "ca4": counting(report.ca4, "n"),
        "ca5": counting(report.ca5, "m"),
    }

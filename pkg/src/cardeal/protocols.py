"""Announcement-producing protocols as explicit hand-to-distribution tables.

A protocol maps every possible hand of the announcer to a finite probability
distribution over good announcements containing that hand. Probabilities are
exact rationals and the tables are fully materialised (35 hands at the
(3,3,1) deal), which keeps every protocol auditable and makes exact
posterior analysis possible. Randomness only enters at sampling time through
a seedable generator.

Four builders are provided for the (3,3,1) deal:

* ``uniform60``: each hand picks uniformly among the 60 good five-line
  announcements containing it. Biased: a card occurring thrice is then more
  likely to be actually held.
* ``fact1``: pick one announcement whose most frequent card is an actual
  card, pick one where it is not, then flip a fair coin between the two.
* ``fact2_conditional(p)``: with the triple point p fixed publicly ahead of
  time, pick uniformly among the five-line announcements containing the hand
  whose triple point is p (12 of them when p is actually held, 6 otherwise).
* ``fact2_literal(p)``: same per-hand table, but the two hand classes are
  additionally reweighted 4/7 (p held) to 3/7 (p not held). A fixed hand
  determines its class, so the reweighting cannot be realised inside any
  per-hand distribution; it is carried as metadata and applied by the bias
  analyzer at the hand-class level.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable

from .axioms import is_good
from .enumeration import classify_by_triple, enumerate_good_announcements, triple_point
from .model import (
    Announcement,
    CardSet,
    Parameters,
    card_set,
    enumerate_ksets,
    format_announcement,
    format_card_set,
    parse_announcement,
    parse_card_set,
)

PROTOCOL_KINDS = ("uniform60", "fact1", "fact2_conditional", "fact2_literal")


@dataclass(frozen=True)
class Protocol:
    kind: str
    params: Parameters
    table: dict[CardSet, tuple[tuple[Announcement, Fraction], ...]]
    point: int | None = None
    class_weights: dict[bool, Fraction] | None = None

    def hand_weight(self, hand: CardSet) -> Fraction:
        """Class-level reweighting factor; 1 unless the literal reading applies."""
        if self.class_weights is None:
            return Fraction(1)
        return self.class_weights[self.point in hand]

    def support(self) -> list[Announcement]:
        """Every announcement some hand can produce, canonically ordered."""
        seen = {ann for dist in self.table.values() for ann, _ in dist}
        return sorted(seen, key=lambda ann: ann.lines)


def build_protocol(
    kind: str,
    params: Parameters,
    point: int | None = None,
    *,
    max_work: int | None = None,
) -> Protocol:
    """Materialise one of the named protocols for the (3,3,1) deal."""
    kind = kind.replace("-", "_")
    if kind not in PROTOCOL_KINDS:
        raise ValueError(f"unknown protocol kind {kind!r}, expected one of {PROTOCOL_KINDS}")
    if (params.a, params.b, params.c) != (3, 3, 1):
        raise ValueError(f"protocol tables are defined for the (3,3,1) deal, got {params}")
    if kind.startswith("fact2"):
        if point is None or not 0 <= point < params.v:
            raise ValueError(f"fact2 protocols need a public point below {params.v}, got {point}")
    elif point is not None:
        raise ValueError(f"{kind} takes no public point")

    table: dict[CardSet, tuple[tuple[Announcement, Fraction], ...]] = {}
    for hand in enumerate_ksets(params.v, params.a):
        anns = enumerate_good_announcements(params, hand, 5, max_work=max_work)
        if kind == "uniform60":
            share = Fraction(1, len(anns))
            entries = [(ann, share) for ann in anns]
        elif kind == "fact1":
            inside, outside = classify_by_triple(anns, hand)
            p_in = Fraction(1, 2) / len(inside)
            p_out = Fraction(1, 2) / len(outside)
            entries = [(ann, p_in if triple_point(ann) in hand else p_out) for ann in anns]
        else:
            chosen = [ann for ann in anns if triple_point(ann) == point]
            share = Fraction(1, len(chosen))
            entries = [(ann, share) for ann in chosen]
        table[hand] = tuple(entries)

    weights = None
    if kind == "fact2_literal":
        weights = {True: Fraction(4, 7), False: Fraction(3, 7)}
    return Protocol(kind=kind, params=params, table=table, point=point, class_weights=weights)


def sample(proto: Protocol, hand: Iterable[int], seed) -> Announcement:
    """One announcement drawn from the hand's distribution; fixed seed, fixed draw."""
    return sample_many(proto, hand, seed, 1)[0]


def sample_many(proto: Protocol, hand: Iterable[int], seed, n: int) -> list[Announcement]:
    """n independent draws from one seeded generator, thresholds kept exact.

    The unit interval is scaled by the common denominator of the hand's
    probabilities, so a single integer draw selects an announcement without
    any floating-point rounding.
    """
    hand = card_set(hand, proto.params.v)
    if hand not in proto.table:
        raise KeyError(f"unknown hand {hand}")
    dist = proto.table[hand]
    denom = lcm(*(p.denominator for _, p in dist))
    cumulative = []
    running = 0
    for ann, p in dist:
        running += int(p * denom)
        cumulative.append((running, ann))
    if running != denom:
        raise ValueError(f"distribution for {hand} sums to {Fraction(running, denom)}")
    rng = random.Random(seed)
    draws = []
    for _ in range(n):
        ticket = rng.randrange(denom)
        for threshold, ann in cumulative:
            if ticket < threshold:
                draws.append(ann)
                break
    return draws


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # coverage | normalization | positivity | truthfulness | safety
    hand: CardSet | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[ValidationIssue, ...]


def validate_protocol(proto: Protocol, *, max_work: int | None = None) -> ValidationReport:
    """Confirm coverage, exact normalization, truthfulness and CA1-CA3 safety."""
    issues: list[ValidationIssue] = []
    params = proto.params
    for hand in enumerate_ksets(params.v, params.a):
        if hand not in proto.table:
            issues.append(ValidationIssue("coverage", hand, f"hand {hand} has no distribution"))
    safety_cache: dict[Announcement, bool] = {}
    for hand, dist in sorted(proto.table.items()):
        total = sum((p for _, p in dist), Fraction(0))
        if total != 1:
            issues.append(
                ValidationIssue("normalization", hand, f"probabilities sum to {total}, not 1")
            )
        for ann, p in dist:
            if p <= 0:
                issues.append(
                    ValidationIssue("positivity", hand, f"probability {p} is not positive")
                )
            if hand not in ann.lines:
                issues.append(
                    ValidationIssue(
                        "truthfulness", hand, f"announcement {ann.lines} does not contain {hand}"
                    )
                )
            if ann not in safety_cache:
                safety_cache[ann] = is_good(ann, params, max_work=max_work)
            if not safety_cache[ann]:
                issues.append(
                    ValidationIssue("safety", hand, f"announcement {ann.lines} is not good")
                )
    return ValidationReport(not issues, tuple(issues))


def _fraction_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def _fraction_from_json(data: dict) -> Fraction:
    return Fraction(data["num"], data["den"])


def protocol_json(proto: Protocol) -> dict:
    """Serialisable form with exact rationals as {"num": ..., "den": ...}."""
    params = proto.params
    out = {
        "kind": proto.kind,
        "params": [params.a, params.b, params.c],
        "point": proto.point,
        "class_weights": None,
        "table": {
            format_card_set(hand, params.v): [
                {"announcement": format_announcement(ann, params), "p": _fraction_json(p)}
                for ann, p in dist
            ]
            for hand, dist in sorted(proto.table.items())
        },
    }
    if proto.class_weights is not None:
        out["class_weights"] = {
            "point_in_hand": _fraction_json(proto.class_weights[True]),
            "point_not_in_hand": _fraction_json(proto.class_weights[False]),
        }
    return out


def protocol_from_json(data: dict) -> Protocol:
    params = Parameters(*data["params"])
    table = {
        parse_card_set(hand_text, params.v): tuple(
            (parse_announcement(entry["announcement"], params), _fraction_from_json(entry["p"]))
            for entry in entries
        )
        for hand_text, entries in data["table"].items()
    }
    weights = None
    if data.get("class_weights"):
        weights = {
            True: _fraction_from_json(data["class_weights"]["point_in_hand"]),
            False: _fraction_from_json(data["class_weights"]["point_not_in_hand"]),
        }
    return Protocol(
        kind=data["kind"],
        params=params,
        table=table,
        point=data.get("point"),
        class_weights=weights,
    )

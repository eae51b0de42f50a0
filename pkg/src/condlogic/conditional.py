"""Measure-free conditional events and their algebra.

A conditional event (a|b) is the coset a + R&~b of the event ring R: the set
of events x with a&b <= x <= ~b|a.  It is stored normalized as the pair
(a&b, b), which is a canonical coset representative.  The connectives are

    not (a|b)       = (~a | b)                          same antecedent
    (a|b) and (c|d) = (a&c  given  ~a&b or ~c&d or b&d)
    (a|b) or  (c|d) = (a or c  given  a&b or c&d or b&d)

and the order gn_leq is: (a|b) <= (c|d) iff a&b <= c&d and ~c&d <= ~a&b.
Conditional probability is monotone along gn_leq for every probability
measure, while (a|b) and (a|b&c) are in general not comparable, which is the
algebraic face of non-monotonic conditioning.

Conditionals with antecedent 0 are legal algebraic values ((0|0) is the whole
ring as a coset); the probability layer rejects them separately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import (
    Event,
    FormulaSyntaxError,
    Vocabulary,
    compile_formula,
    event_to_dnf,
)


@dataclass(frozen=True)
class ConditionalEvent:
    """Normalized pair (numerator, antecedent) with numerator <= antecedent."""

    numerator: Event
    antecedent: Event

    def __post_init__(self):
        if not self.numerator.leq(self.antecedent):
            raise ValueError(
                "conditional event must be normalized: numerator <= antecedent "
                "(use make_conditional)"
            )

    @property
    def vocab(self) -> Vocabulary:
        return self.antecedent.vocab

    def __repr__(self):
        return f"ConditionalEvent{conditional_to_text(self)}"


@dataclass(frozen=True)
class Interval:
    """The event interval [a&b, b -> a] equal to the coset (a|b)."""

    low: Event
    high: Event

    def __post_init__(self):
        if not self.low.leq(self.high):
            raise ValueError("interval endpoints out of order")


def make_conditional(a: Event, b: Event) -> ConditionalEvent:
    """Build (a|b), normalizing to the representative (a&b, b)."""
    return ConditionalEvent(a & b, b)


def interval_of(ce: ConditionalEvent) -> Interval:
    return Interval(ce.numerator, ~ce.antecedent | ce.numerator)


def coset_contains(ce: ConditionalEvent, x: Event) -> bool:
    """Membership of an event in the coset: a&b <= x <= b -> a."""
    iv = interval_of(ce)
    return iv.low.leq(x) and x.leq(iv.high)


def ce_not(p: ConditionalEvent) -> ConditionalEvent:
    return ConditionalEvent(p.antecedent & ~p.numerator, p.antecedent)


def ce_and(p: ConditionalEvent, q: ConditionalEvent) -> ConditionalEvent:
    antecedent = (
        (p.antecedent & ~p.numerator)
        | (q.antecedent & ~q.numerator)
        | (p.antecedent & q.antecedent)
    )
    # a&c cut to the antecedent collapses to the product of the numerators.
    return ConditionalEvent(p.numerator & q.numerator, antecedent)


def ce_or(p: ConditionalEvent, q: ConditionalEvent) -> ConditionalEvent:
    numerator = p.numerator | q.numerator
    return ConditionalEvent(numerator, numerator | (p.antecedent & q.antecedent))


def gn_leq(p: ConditionalEvent, q: ConditionalEvent) -> bool:
    """The conditional order: numerators grow, antecedent remainders shrink."""
    return p.numerator.leq(q.numerator) and (q.antecedent & ~q.numerator).leq(
        p.antecedent & ~p.numerator
    )


def comparable(p: ConditionalEvent, q: ConditionalEvent) -> bool:
    return gn_leq(p, q) or gn_leq(q, p)


def conditional_to_text(ce: ConditionalEvent) -> str:
    """Normalized text form `(numerator_dnf | antecedent_dnf)`."""
    return f"({event_to_dnf(ce.numerator)} | {event_to_dnf(ce.antecedent)})"


def split_conditional_bar(text: str) -> tuple[str, str | None]:
    """Split text on its unique depth-0 `|`.

    Returns (consequent, antecedent) or (text, None) when there is no
    top-level bar.  More than one top-level bar is an error; a disjunction at
    that level must be parenthesized.
    """
    depth = 0
    positions = []
    for i, c in enumerate(text):
        if c == "(":
            depth += 1
        elif c == ")":
            depth = max(depth - 1, 0)
        elif c == "|" and depth == 0:
            positions.append(i)
    if not positions:
        return text, None
    if len(positions) > 1:
        raise FormulaSyntaxError(
            "more than one top-level '|'; parenthesize disjunctions, "
            "e.g. (a | b) | c for the conditional ((a or b) given c)",
            positions[1],
        )
    cut = positions[0]
    return text[:cut], text[cut + 1 :]


def parse_conditional(text: str, vocab: Vocabulary) -> ConditionalEvent:
    """Parse `(f1 | f2)` (or a bare formula, meaning antecedent 1)."""
    stripped = text.strip()
    if _wrapped_in_parens(stripped):
        stripped = stripped[1:-1]
    consequent, antecedent = split_conditional_bar(stripped)
    a = compile_formula(consequent, vocab)
    b = compile_formula(antecedent, vocab) if antecedent is not None else vocab.one()
    return make_conditional(a, b)


def _wrapped_in_parens(text: str) -> bool:
    if not (text.startswith("(") and text.endswith(")")):
        return False
    depth = 0
    for i, c in enumerate(text):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
            if depth == 0:
                return i == len(text) - 1
    return False

"""Probability models over a finite cell partition.

A model assigns nonnegative masses summing to 1 to the cells of a partition;
the probability of any event decomposable as a union of cells is the sum of
the contained cells' masses.  Masses may be Fractions (exact mode) or floats
(tolerance 1e-9 on the normalization).

Conditioning divides: P(a|b) = P(a&b)/P(b), undefined when P(b) = 0.  The
identity P(a|b) = P(a&b) + P(a|b) * P(~b) is an algebraic consequence and is
exposed as a checkable residual.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .conditional import ConditionalEvent
from .formula import Event
from .numeric import FLOAT_TOL, Number, all_exact


class ZeroAntecedentError(ValueError):
    """Conditioning event has probability zero."""


class DecompositionError(ValueError):
    """Event is not a union of the model's cells."""


@dataclass(frozen=True)
class ProbabilityModel:
    """Masses on the cells of a partition (disjoint, covering events)."""

    cells: tuple[Event, ...]
    masses: tuple[Number, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        object.__setattr__(self, "masses", tuple(self.masses))
        if len(self.cells) != len(self.masses):
            raise ValueError("one mass per cell required")
        if not self.cells:
            raise ValueError("empty cell list")
        covered = 0
        for cell in self.cells:
            if cell.vocab != self.cells[0].vocab:
                raise ValueError("cells must share one vocabulary")
            if covered & cell.bits:
                raise ValueError("cells must be disjoint")
            covered |= cell.bits
        if covered != self.cells[0].vocab.full_mask:
            raise ValueError("cells must cover the whole atom space")
        exact = all_exact(self.masses)
        total = sum(self.masses)
        if any(m < 0 for m in self.masses):
            raise ValueError("masses must be nonnegative")
        if exact:
            if total != 1:
                raise ValueError(f"masses must sum to 1, got {total}")
        elif abs(total - 1) > FLOAT_TOL:
            raise ValueError(f"masses must sum to 1 within {FLOAT_TOL}, got {total}")

    @property
    def vocab(self):
        return self.cells[0].vocab


def prob(model: ProbabilityModel, x: Event) -> Number:
    """P(x) for x a union of the model's cells."""
    if x.vocab != model.vocab:
        raise DecompositionError("event vocabulary differs from the model's")
    covered = 0
    total = 0
    for cell, mass in zip(model.cells, model.masses):
        if cell.leq(x):
            covered |= cell.bits
            total += mass
    if covered != x.bits:
        raise DecompositionError(
            f"event {x.bit_string()} is not a union of the model's cells"
        )
    return total


def cond_prob(model: ProbabilityModel, ce: ConditionalEvent) -> Number:
    """P(numerator)/P(antecedent); raises ZeroAntecedentError at mass 0."""
    pb = prob(model, ce.antecedent)
    if pb == 0:
        raise ZeroAntecedentError("antecedent has probability zero")
    return prob(model, ce.numerator) / pb


def check_star_identity(model: ProbabilityModel, a: Event, b: Event) -> Number:
    """Residual |P(a|b) - P(a&b) - P(a|b)*P(~b)|; zero up to rounding."""
    pb = prob(model, b)
    if pb == 0:
        raise ZeroAntecedentError("antecedent has probability zero")
    pab = prob(model, a & b)
    pa_given_b = pab / pb
    return abs(pa_given_b - pab - pa_given_b * prob(model, ~b))


def random_model(cells: Sequence[Event], seed: int, exact: bool = False) -> ProbabilityModel:
    """Model with masses drawn uniformly from the simplex, fixed by seed.

    Float mode uses the exponential-spacings construction (exactly uniform);
    exact mode draws a uniform lattice composition at a fine resolution and
    returns Fractions summing to exactly 1.
    """
    rng = random.Random(seed)
    m = len(cells)
    if m == 1:
        masses: tuple[Number, ...] = (Fraction(1) if exact else 1.0,)
        return ProbabilityModel(tuple(cells), masses)
    if exact:
        resolution = 1 << 40
        cuts = sorted(rng.sample(range(resolution + m - 1), m - 1))
        bounds = [-1] + cuts + [resolution + m - 1]
        parts = [hi - lo - 1 for lo, hi in zip(bounds, bounds[1:])]
        return ProbabilityModel(
            tuple(cells), tuple(Fraction(p, resolution) for p in parts)
        )
    draws = [-math.log(1.0 - rng.random()) for _ in range(m)]
    total = sum(draws)
    return ProbabilityModel(tuple(cells), tuple(d / total for d in draws))

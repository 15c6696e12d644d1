"""Shared generators for the property and acceptance suites (all seeded)."""

from __future__ import annotations

import random
from fractions import Fraction

from thermomajor.curves import Curve, curve_of
from thermomajor.oracle import random_state, random_transition
from thermomajor.states import ThermoState, Transition

__all__ = [
    "seeded",
    "random_state",
    "random_transition",
    "random_full_support_state",
    "random_curve",
]


def seeded(seed: int) -> random.Random:
    return random.Random(seed)


def random_full_support_state(rng: random.Random, dim: int) -> ThermoState:
    return random_state(rng, dim, allow_zero=False)


def random_curve(rng: random.Random, max_dim: int = 4) -> Curve:
    dim = rng.randint(1, max_dim)
    return curve_of(random_state(rng, dim, allow_zero=True))

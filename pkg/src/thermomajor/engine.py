"""Qubit Carnot cycle driven by zero-dissipation work reservoirs.

The engine is a gap-epsilon qubit cycled between a hot and a cold bath.  Work
is exchanged only in the two isothermal strokes (cold populations relaxing at
the hot bath, then hot populations relaxing at the cold bath), each handled
by the minimal efficient reservoir at that bath's temperature, so the cycle
dissipates nothing and the efficiency is exactly Carnot's.

Populations are irrational for generic parameters; each stroke is certified
by rationalizing the populations and weights (denominator cap 10^6) and
running the exact curve-coincidence verifier on the approximated values, with
the approximation gap reported alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidTemperatures
from .reservoirs import Reservoir, minimal_extraction_reservoir, verify_efficient
from .states import ThermoState, Transition, gibbs_of, make_state

__all__ = ["EngineSpec", "LevelRow", "EngineReport", "reservoir_level_table", "run_carnot"]

APPROX_DENOMINATOR = 10**6


@dataclass(frozen=True)
class EngineSpec:
    """Qubit gap and the two inverse temperatures (k_B = 1).

    Requires 0 < beta_h <= beta_c (the hot bath is at least as hot) and a
    positive gap.  Equal temperatures are legal and give a null cycle.
    """

    epsilon: float
    beta_h: float
    beta_c: float

    def __post_init__(self) -> None:
        if not (self.epsilon > 0):
            raise InvalidTemperatures(f"epsilon={self.epsilon} must be positive")
        if not (0 < self.beta_h <= self.beta_c):
            raise InvalidTemperatures(
                f"need 0 < beta_h <= beta_c, got beta_h={self.beta_h}, beta_c={self.beta_c}"
            )

    @classmethod
    def from_temperatures(cls, epsilon: float, t_hot: float, t_cold: float) -> "EngineSpec":
        if t_hot <= 0 or t_cold <= 0:
            raise InvalidTemperatures("temperatures must be positive")
        return cls(epsilon, 1.0 / t_hot, 1.0 / t_cold)


@dataclass(frozen=True)
class LevelRow:
    """One occupied probability with its energy in each reservoir stage."""

    probability: float
    energies: tuple[float, float, float]


@dataclass(frozen=True)
class EngineReport:
    """Heats, work, efficiency, and the certified reservoirs for one cycle."""

    p_c: float
    p_h: float
    s_c: float
    s_h: float
    q_h: float
    q_c: float
    w: float
    eta: float
    reservoir_levels: tuple[LevelRow, ...]
    hot_reservoir: Optional[Reservoir]
    cold_reservoir: Optional[Reservoir]
    hot_step_certified: bool
    cold_step_certified: bool
    approximation_gap: float


def _binary_entropy(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log(p) - (1.0 - p) * math.log(1.0 - p)


def excited_population(beta: float, epsilon: float) -> float:
    x = math.exp(-beta * epsilon)
    return x / (1.0 + x)


def reservoir_level_table(
    spec: EngineSpec, c1: float = 1.0, c2: float = 1.0
) -> tuple[LevelRow, ...]:
    """Level table of the combined reservoir across both strokes.

    Rows are the four occupied probabilities p(i)q(j) with p in {p_c, 1-p_c}
    and q in {p_h, 1-p_h}; columns are the three reservoir stages.  The hot
    stroke swaps the cold-population factor for its hot counterpart, the cold
    stroke then swaps the hot factor back to cold, each contributing
    -(1/beta) ln(c * population) at its own temperature.  c1 and c2 are free
    offsets (translation symmetry of efficient reservoirs).
    """
    if c1 <= 0 or c2 <= 0:
        raise InvalidTemperatures("level-table constants must be positive")
    p_c = excited_population(spec.beta_c, spec.epsilon)
    p_h = excited_population(spec.beta_h, spec.epsilon)
    rows = []
    for cold_excited, hot_excited in ((True, True), (True, False), (False, True), (False, False)):
        cold_part = p_c if cold_excited else 1.0 - p_c
        hot_part = p_h if hot_excited else 1.0 - p_h
        swapped_cold = p_h if cold_excited else 1.0 - p_h
        swapped_hot = p_c if hot_excited else 1.0 - p_c
        e1 = -math.log(c1 * cold_part) / spec.beta_h - math.log(c2 * hot_part) / spec.beta_c
        e2 = -math.log(c1 * swapped_cold) / spec.beta_h - math.log(c2 * hot_part) / spec.beta_c
        e3 = (
            -math.log(c1 * swapped_cold) / spec.beta_h
            - math.log(c2 * swapped_hot) / spec.beta_c
        )
        rows.append(LevelRow(cold_part * hot_part, (e1, e2, e3)))
    return tuple(rows)


def _certify_stroke(
    population: float, excited_weight: float, max_denominator: int
) -> tuple[bool, Optional[Reservoir], ThermoState, float]:
    """Rationalize one stroke and verify its minimal reservoir exactly."""
    p = Fraction(population).limit_denominator(max_denominator)
    w = Fraction(excited_weight).limit_denominator(max_denominator)
    state = make_state((1 - p, p), (1, w))
    target = gibbs_of(state)
    gap = max(abs(float(p) - population), abs(float(w) - excited_weight))
    if state.probs == target.probs:
        return True, None, state, gap
    res = minimal_extraction_reservoir(state)
    ok = verify_efficient(Transition(state, target), res)
    return ok, res, state, gap


def run_carnot(spec: EngineSpec, max_denominator: int = APPROX_DENOMINATOR) -> EngineReport:
    """One full cycle: populations, heats, work, efficiency, certified strokes.

    Zero dissipation ties each stroke's heat to the entropy swing:
    beta_h q_h = s_c - s_h and beta_c q_c = s_h - s_c (heats counted into the
    baths), so beta_c q_c + beta_h q_h = 0, w = -q_h - q_c, and the efficiency
    is exactly 1 - beta_h / beta_c.
    """
    p_c = excited_population(spec.beta_c, spec.epsilon)
    p_h = excited_population(spec.beta_h, spec.epsilon)
    s_c = _binary_entropy(p_c)
    s_h = _binary_entropy(p_h)
    q_h = (s_c - s_h) / spec.beta_h
    q_c = (s_h - s_c) / spec.beta_c
    w = -q_h - q_c
    eta = 1.0 - spec.beta_h / spec.beta_c

    hot_ok, hot_res, _, gap_hot = _certify_stroke(
        p_c, math.exp(-spec.beta_h * spec.epsilon), max_denominator
    )
    cold_ok, cold_res, _, gap_cold = _certify_stroke(
        p_h, math.exp(-spec.beta_c * spec.epsilon), max_denominator
    )
    return EngineReport(
        p_c=p_c,
        p_h=p_h,
        s_c=s_c,
        s_h=s_h,
        q_h=q_h,
        q_c=q_c,
        w=w,
        eta=eta,
        reservoir_levels=reservoir_level_table(spec),
        hot_reservoir=hot_res,
        cold_reservoir=cold_res,
        hot_step_certified=hot_ok,
        cold_step_certified=cold_ok,
        approximation_gap=max(gap_hot, gap_cold),
    )


def stage_states(
    spec: EngineSpec, max_denominator: int = APPROX_DENOMINATOR
) -> tuple[ThermoState, ThermoState, ThermoState, ThermoState]:
    """Rationalized system states for the four cycle panels.

    Order: equilibrium at the cold bath, cold populations at the hot bath,
    equilibrium at the hot bath, hot populations at the cold bath.
    """
    p_c = Fraction(excited_population(spec.beta_c, spec.epsilon)).limit_denominator(
        max_denominator
    )
    p_h = Fraction(excited_population(spec.beta_h, spec.epsilon)).limit_denominator(
        max_denominator
    )
    w_c = Fraction(math.exp(-spec.beta_c * spec.epsilon)).limit_denominator(
        max_denominator
    )
    w_h = Fraction(math.exp(-spec.beta_h * spec.epsilon)).limit_denominator(
        max_denominator
    )
    return (
        gibbs_of(make_state((1, 0), (1, w_c))),
        make_state((1 - p_c, p_c), (1, w_h)),
        gibbs_of(make_state((1, 0), (1, w_h))),
        make_state((1 - p_h, p_h), (1, w_c)),
    )

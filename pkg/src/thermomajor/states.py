"""Exact states over Gibbs-weighted energy levels.

Probabilities and Gibbs weights are :class:`fractions.Fraction` values
throughout, so the curve geometry downstream can be decided by exact
comparison rather than floating-point tolerance.  Energies are carried
implicitly as weights ``g_i = exp(-e_i)`` in units of ``k_B T`` (beta folded
in); the energy itself is ``-ln(g_i)``, a display-only float.

Zero probabilities are legal (reservoir supports need them); zero weights are
not, since they would encode an infinite energy.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    NegativeProbability,
    NonPositiveWeight,
    ParseError,
    ProbSumNotOne,
)

Rat = Fraction

_ONE = Fraction(1)
_ZERO = Fraction(0)


def as_rat(value: object) -> Fraction:
    """Coerce an int, Fraction, or string like ``"2/3"`` to an exact rational.

    Decimal strings are converted exactly (``"0.5"`` becomes 1/2).  Floats are
    rejected: silent binary-fraction conversion would defeat the point of an
    exact core, so callers must rationalize floats explicitly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"expected int, Fraction or 'p/q' string, got {type(value).__name__}")


@dataclass(frozen=True)
class ThermoState:
    """A probability vector paired with positive Gibbs weights of equal length.

    Invariants (enforced at construction): probabilities are nonnegative and
    sum to exactly one; weights are strictly positive; lengths match and are
    at least one.
    """

    probs: tuple[Fraction, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.probs) != len(self.weights):
            raise DimensionMismatch(
                f"{len(self.probs)} probabilities vs {len(self.weights)} weights"
            )
        if len(self.probs) < 1:
            raise DimensionMismatch("state needs at least one level")
        for w in self.weights:
            if w <= 0:
                raise NonPositiveWeight(f"weight {w} is not positive")
        for p in self.probs:
            if p < 0:
                raise NegativeProbability(f"probability {p} is negative")
        total = sum(self.probs)
        if total != _ONE:
            raise ProbSumNotOne(f"probabilities sum to {total}, not 1")

    @property
    def dim(self) -> int:
        return len(self.probs)

    @property
    def z(self) -> Fraction:
        """Partition function: the sum of all Gibbs weights."""
        return sum(self.weights, _ZERO)

    def gibbs_probs(self) -> tuple[Fraction, ...]:
        z = self.z
        return tuple(w / z for w in self.weights)

    def energies(self) -> tuple[float, ...]:
        """Display-only energies ``-ln(g_i)`` in units of k_B*T."""
        import math

        return tuple(math.log(w.denominator) - math.log(w.numerator) for w in self.weights)


def make_state(probs: Iterable[object], weights: Iterable[object]) -> ThermoState:
    """Validated constructor accepting ints, Fractions, or ``"p/q"`` strings."""
    return ThermoState(tuple(as_rat(p) for p in probs), tuple(as_rat(w) for w in weights))


def gibbs_of(state: ThermoState) -> ThermoState:
    """The equilibrium state with the same weights: probs_i = g_i / Z."""
    return ThermoState(state.gibbs_probs(), state.weights)


def is_gibbs(state: ThermoState) -> bool:
    return state.probs == state.gibbs_probs()


@dataclass(frozen=True)
class Transition:
    """An initial/final pair over one Hamiltonian (identical weight vectors)."""

    initial: ThermoState
    final: ThermoState

    def __post_init__(self) -> None:
        if self.initial.weights != self.final.weights:
            raise DimensionMismatch(
                "transition endpoints must share the same Gibbs weights; "
                "use clock_lift for a change of Hamiltonian"
            )

    @property
    def dim(self) -> int:
        return self.initial.dim

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return self.initial.weights


def clock_lift(initial_state: ThermoState, final_state: ThermoState) -> Transition:
    """Embed a change-of-Hamiltonian transition into one enlarged Hamiltonian.

    A two-level clock register tensors with the system: the joint level set is
    the disjoint union of the initial levels (clock 0) and the final levels
    (clock 1), with the corresponding weights concatenated.  The lifted
    initial state occupies the clock-0 block, the lifted final state the
    clock-1 block, so the result is an ordinary shared-weights transition.
    """
    d0, d1 = initial_state.dim, final_state.dim
    joint_weights = initial_state.weights + final_state.weights
    zeros0 = (_ZERO,) * d0
    zeros1 = (_ZERO,) * d1
    lifted_initial = ThermoState(initial_state.probs + zeros1, joint_weights)
    lifted_final = ThermoState(zeros0 + final_state.probs, joint_weights)
    return Transition(lifted_initial, lifted_final)


def tensor(a: ThermoState, b: ThermoState) -> ThermoState:
    """Product state: probabilities and weights multiply pairwise (a-major order)."""
    probs = tuple(pa * pb for pa in a.probs for pb in b.probs)
    weights = tuple(wa * wb for wa in a.weights for wb in b.weights)
    return ThermoState(probs, weights)


# ---------------------------------------------------------------------------
# JSON schema: {"probs": ["1/3", "2/3"], "weights": ["1", "1"]}
# Rationals serialize as "num/den" strings; bare integers are accepted.
# ---------------------------------------------------------------------------


def state_to_dict(state: ThermoState) -> dict:
    return {
        "probs": [str(p) for p in state.probs],
        "weights": [str(w) for w in state.weights],
    }


def state_from_dict(data: object) -> ThermoState:
    if not isinstance(data, dict):
        raise ParseError(f"state JSON must be an object, got {type(data).__name__}")
    for key in ("probs", "weights"):
        if key not in data:
            raise ParseError(f"state JSON missing field {key!r}")
        if not isinstance(data[key], Sequence) or isinstance(data[key], str):
            raise ParseError(f"state field {key!r} must be a list")

    def parse_field(key: str) -> tuple[Fraction, ...]:
        out = []
        for index, raw in enumerate(data[key]):
            try:
                out.append(as_rat(raw))
            except ParseError as exc:
                raise ParseError(f"{key}[{index}]: {exc}") from exc
        return tuple(out)

    return ThermoState(parse_field("probs"), parse_field("weights"))


def state_to_json(state: ThermoState) -> str:
    return json.dumps(state_to_dict(state), sort_keys=True)


def state_from_json(text: str) -> ThermoState:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return state_from_dict(data)

"""Thermomajorization curves as exact piecewise-linear geometry.

The curve of a state plots cumulative probability against cumulative Gibbs
weight with levels taken in beta-order (descending probability-per-weight).
Canonical form keeps one segment per distinct slope, strictly decreasing,
with heights summing to one; zero-probability levels contribute no segment
and only widen the implicit flat tail, so ``total_width`` always records the
full partition function.

Canonical curves of a fixed inverse temperature form a commutative monoid
under the tensor product (heights and slopes multiply pairwise, equal slopes
merge, widths multiply).  The monoid is cancellative: :func:`divide` peels
the unique quotient off a product when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import WidthMismatch
from .states import ThermoState, _ONE, _ZERO

__all__ = [
    "Segment",
    "Curve",
    "canonical_curve",
    "curve_of",
    "identity_curve",
    "num_distinct_slopes",
    "evaluate",
    "breakpoints",
    "majorizes",
    "coincide",
    "product",
    "divide",
    "realize_state",
]


@dataclass(frozen=True)
class Segment:
    """One sloped piece: a height (probability mass) and a positive slope."""

    height: Fraction
    slope: Fraction


@dataclass(frozen=True)
class Curve:
    """Canonical thermomajorization curve.

    ``segments`` have strictly decreasing positive slopes and positive heights
    summing to one.  ``total_width`` is the partition function Z; any excess
    over the sloped width is the flat (slope-zero) tail.
    """

    segments: tuple[Segment, ...]
    total_width: Fraction

    def __post_init__(self) -> None:
        if not self.segments:
            raise ValueError("curve needs at least one segment")
        previous = None
        total_height = _ZERO
        for seg in self.segments:
            if seg.height <= 0:
                raise ValueError(f"segment height {seg.height} must be positive")
            if seg.slope <= 0:
                raise ValueError(f"segment slope {seg.slope} must be positive")
            if previous is not None and seg.slope >= previous:
                raise ValueError("segment slopes must strictly decrease")
            previous = seg.slope
            total_height += seg.height
        if total_height != _ONE:
            raise ValueError(f"segment heights sum to {total_height}, not 1")
        if self.sloped_width > self.total_width:
            raise ValueError("sloped width exceeds total width")

    @property
    def sloped_width(self) -> Fraction:
        return sum((seg.height / seg.slope for seg in self.segments), _ZERO)


def canonical_curve(pairs: Iterable[tuple[Fraction, Fraction]], total_width: Fraction) -> Curve:
    """Build a curve from raw (height, slope) pairs.

    Zero heights are dropped, equal slopes are merged, and the result is
    sorted by descending slope; that is the unique canonical form.
    """
    merged: dict[Fraction, Fraction] = {}
    for height, slope in pairs:
        if height == 0:
            continue
        merged[slope] = merged.get(slope, _ZERO) + height
    segments = tuple(
        Segment(merged[slope], slope) for slope in sorted(merged, reverse=True)
    )
    return Curve(segments, total_width)


def curve_of(state: ThermoState) -> Curve:
    """Canonical curve of a state: slopes are p_i / g_i on the support."""
    pairs = [
        (p, p / w) for p, w in zip(state.probs, state.weights) if p > 0
    ]
    return canonical_curve(pairs, state.z)


def identity_curve() -> Curve:
    """The monoid identity: a single unit-slope segment of width one."""
    return Curve((Segment(_ONE, _ONE),), _ONE)


def num_distinct_slopes(curve: Curve) -> int:
    """Number of sloped segments (the flat tail does not count)."""
    return len(curve.segments)


def breakpoints(curve: Curve) -> list[tuple[Fraction, Fraction]]:
    """Elbow points from (0, 0) to (Z, 1), including the flat-tail endpoint."""
    points = [(_ZERO, _ZERO)]
    x = _ZERO
    y = _ZERO
    for seg in curve.segments:
        x += seg.height / seg.slope
        y += seg.height
        points.append((x, y))
    if x < curve.total_width:
        points.append((curve.total_width, _ONE))
    return points


def evaluate(curve: Curve, x: Fraction) -> Fraction:
    """Exact value of the curve at ``x`` in [0, Z]."""
    if x < 0 or x > curve.total_width:
        raise ValueError(f"x={x} outside [0, {curve.total_width}]")
    y = _ZERO
    remaining = x
    for seg in curve.segments:
        width = seg.height / seg.slope
        if remaining <= width:
            return y + remaining * seg.slope
        y += seg.height
        remaining -= width
    return _ONE


def majorizes(a: Curve, b: Curve) -> bool:
    """Whether ``a`` lies on or above ``b`` everywhere on [0, Z].

    Both curves are piecewise linear, so it suffices to compare them at the
    union of their breakpoint abscissae; the comparison is exact.
    """
    if a.total_width != b.total_width:
        raise WidthMismatch(
            f"widths differ: {a.total_width} vs {b.total_width}; "
            "curves from different Hamiltonians are not comparable"
        )
    xs = {x for x, _ in breakpoints(a)} | {x for x, _ in breakpoints(b)}
    return all(evaluate(a, x) >= evaluate(b, x) for x in xs)


def coincide(a: Curve, b: Curve) -> bool:
    """Exact equality of canonical forms, total width included."""
    return a == b


def product(a: Curve, b: Curve) -> Curve:
    """Monoid product: pairwise (height*height, slope*slope), widths multiply."""
    pairs = [
        (sa.height * sb.height, sa.slope * sb.slope)
        for sa in a.segments
        for sb in b.segments
    ]
    return canonical_curve(pairs, a.total_width * b.total_width)


def divide(l: Curve, a: Curve) -> Optional[Curve]:
    """The unique ``q`` with ``product(a, q) == l``, or None if no such curve.

    Peels greedily: the steepest remaining slope of ``l`` must be the product
    of ``a``'s steepest slope with the quotient's next slope, which forces the
    quotient segment by segment (this is the cancellation argument run as an
    algorithm).  The candidate is checked by multiplying back, so a returned
    curve is always a genuine quotient.
    """
    width = l.total_width / a.total_width
    a_top = a.segments[0]
    # Mutable multiset of l's segments, sorted by descending slope.
    remaining: list[list[Fraction]] = [[seg.slope, seg.height] for seg in l.segments]
    quotient: list[tuple[Fraction, Fraction]] = []
    height_total = _ZERO
    while remaining:
        if len(quotient) >= len(l.segments):
            return None
        top_slope, top_height = remaining[0]
        q_slope = top_slope / a_top.slope
        q_height = top_height / a_top.height
        quotient.append((q_height, q_slope))
        height_total += q_height
        if height_total > 1:
            return None
        for seg in a.segments:
            want_slope = seg.slope * q_slope
            want_height = seg.height * q_height
            for entry in remaining:
                if entry[0] == want_slope:
                    entry[1] -= want_height
                    if entry[1] < 0:
                        return None
                    break
            else:
                return None
        remaining = [entry for entry in remaining if entry[1] != 0]
    if height_total != _ONE:
        return None
    try:
        q = canonical_curve(quotient, width)
    except ValueError:
        return None
    if product(a, q) != l:
        return None
    return q


def realize_state(curve: Curve) -> ThermoState:
    """A smallest state whose curve is ``curve``.

    One level per segment (prob = height, weight = height/slope) plus, when
    the flat tail has width, a single zero-probability level carrying it.
    """
    probs = [seg.height for seg in curve.segments]
    weights = [seg.height / seg.slope for seg in curve.segments]
    tail = curve.total_width - curve.sloped_width
    if tail > 0:
        probs.append(_ZERO)
        weights.append(tail)
    return ThermoState(tuple(probs), tuple(weights))

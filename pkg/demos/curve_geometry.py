#!/usr/bin/env python3
"""Tour of thermomajorization-curve geometry and the curve monoid.

Builds a few two- and three-level states, prints their exact breakpoints,
decides the majorization partial order, and walks through the tensor-product
algebra with exact division.  Writes one SVG next to this script.
"""

from pathlib import Path

from thermomajor import (
    breakpoints,
    coincide,
    curve_of,
    divide,
    gibbs_of,
    identity_curve,
    make_state,
    majorizes,
    num_distinct_slopes,
    product,
    tensor,
)
from thermomajor.cli import curve_svg


def show(name, curve):
    pts = ", ".join(f"({x}, {y})" for x, y in breakpoints(curve))
    print(f"{name}: Z = {curve.total_width}, {num_distinct_slopes(curve)} slope(s)")
    print(f"    breakpoints: {pts}")


def main():
    print("== Curves of a few states (k_B T = 1, weights are e^-E) ==")
    mixed = make_state(("1/3", "2/3"), (1, 1))
    pure = make_state((1, 0), (1, 1))
    uniform = make_state(("1/2", "1/2"), (1, 1))
    tilted = make_state(("1/2", "1/2"), (2, 1))

    show("mixed (1/3, 2/3) flat levels", curve_of(mixed))
    show("pure bit", curve_of(pure))
    show("uniform", curve_of(uniform))
    show("uniform over tilted levels", curve_of(tilted))
    show("its Gibbs state (a straight line)", curve_of(gibbs_of(tilted)))

    print("\n== Majorization order ==")
    print("pure >= uniform:", majorizes(curve_of(pure), curve_of(uniform)))
    print("uniform >= pure:", majorizes(curve_of(uniform), curve_of(pure)))
    print("pure >= mixed:  ", majorizes(curve_of(pure), curve_of(mixed)))
    print("every state >= its Gibbs state:",
          majorizes(curve_of(tilted), curve_of(gibbs_of(tilted))))

    print("\n== The monoid: product, identity, exact division ==")
    a = curve_of(mixed)
    b = curve_of(tilted)
    ab = product(a, b)
    show("a (x) b", ab)
    print("product matches the joint state's curve:",
          coincide(ab, curve_of(tensor(mixed, tilted))))
    print("a (x) identity == a:", product(a, identity_curve()) == a)
    recovered = divide(ab, a)
    print("divide(a (x) b, a) == b:", recovered == b)
    print("divide by an incompatible curve:",
          divide(curve_of(gibbs_of(uniform)), a))

    out = Path(__file__).with_name("mixed_state_curve.svg")
    out.write_text(curve_svg(curve_of(mixed)))
    print(f"\nwrote {out.name}")


if __name__ == "__main__":
    main()

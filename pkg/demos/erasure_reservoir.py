#!/usr/bin/env python3
"""Erasing a biased bit without dissipation.

Erasing (1/3, 2/3) -> (1, 0) on flat levels removes H(1/3, 2/3) = 0.6365
nats of entropy.  The best a two-level reservoir can do is pay ln 2: its
final joint curve has a single slope, so it must erase as if the bit were
uniform, dissipating the 0.0566-nat gap.  A four-level reservoir with the
right spectrum makes the joint curves coincide exactly and pays exactly the
entropy change.
"""

import math
from fractions import Fraction as F

from thermomajor import (
    Reservoir,
    Transition,
    average_work,
    coincide,
    curve_of,
    joint_states,
    make_state,
    majorizes,
    shannon_entropy,
    verify_efficient,
)


def main():
    bit = make_state(("1/3", "2/3"), (1, 1))
    erased = make_state((1, 0), (1, 1))
    t = Transition(bit, erased)
    entropy = shannon_entropy(bit.probs)
    print("Erasure target: (1/3, 2/3) -> (1, 0) on flat levels")
    print(f"entropy to remove: H(1/3, 2/3) = {entropy:.6f} nats")

    print("\n-- two-level reservoir, lower level weight 1, upper weight w1 --")
    for w1 in (F(3, 2), F(2), F(3)):
        res = Reservoir((F(1),), (F(1),), (w1,))
        ji, jf = joint_states(t, res)
        feasible = majorizes(curve_of(ji), curve_of(jf))
        cost = -average_work(res)
        print(
            f"   w1 = {w1}: cost {cost:+.6f} nats, "
            f"feasible = {feasible}, lossless = {verify_efficient(t, res)}"
        )
    print(f"   cheapest feasible choice pays ln 2 = {math.log(2):.6f},")
    print(f"   dissipating {math.log(2) - entropy:.6f} nats")

    print("\n-- four-level reservoir: r = (1/3, 2/3), weights (a, 2a, 3a, 3a) --")
    res = Reservoir((F(1, 3), F(2, 3)), (F(1), F(2)), (F(3), F(3)))
    print("verify_efficient (exact curve coincidence):", verify_efficient(t, res))
    ji, jf = joint_states(t, res)
    print("joint curves coincide:", coincide(curve_of(ji), curve_of(jf)))

    work = average_work(res)
    landauer = (1 / 3) * math.log(1 / 3) + (2 / 3) * math.log(2 / 3)
    print(f"average work of the reservoir: {work:+.9f} nats")
    print(f"(1/3)ln(1/3) + (2/3)ln(2/3):   {landauer:+.9f} nats")
    print(f"difference: {abs(work - landauer):.2e}")

    print("\n-- no two-level reservoir is lossless; sweep a coarse grid --")
    hits = 0
    for i in range(1, 40):
        for j in range(1, 40):
            two = Reservoir((F(1),), (F(i, 40),), (F(j, 40),))
            if verify_efficient(t, two):
                hits += 1
    print(f"two-level reservoirs passing the exact check: {hits} / {39 * 39}")


if __name__ == "__main__":
    main()

"""Independent brute-force oracle for thermomajorization feasibility.

A transition is implementable iff some stochastic matrix fixes the Gibbs
distribution while mapping the initial probabilities to the final ones.
:func:`lp_feasible` decides that definition directly as an LP feasibility
problem and returns a witness matrix, giving the curve criterion something
independent to be checked against.

The solver is a small dense Phase-I simplex with Bland's rule: at the
dimensions this oracle caps out at (n <= 8, so at most 64 variables and 24
equalities) an industrial LP library buys nothing, and a self-contained
solver keeps the oracle's trust chain short.  It runs in floating point with
a 1e-9 feasibility tolerance; near-degenerate disagreements with the exact
curve check are resolved in favor of the exact check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionCapExceeded, NonPositiveWeight
from .states import ThermoState, Transition

__all__ = [
    "GibbsMap",
    "lp_feasible",
    "recovery_map",
    "random_gibbs_map",
    "random_rational_gibbs_matrix",
    "random_state",
    "random_transition",
]

DEFAULT_DIMENSION_CAP = 8
FEASIBILITY_TOL = 1e-9


@dataclass(frozen=True)
class GibbsMap:
    """A column-stochastic matrix that fixes a Gibbs distribution."""

    matrix: np.ndarray

    def is_valid(self, tau: Sequence[float], tol: float = FEASIBILITY_TOL) -> bool:
        m = self.matrix
        tau_arr = np.asarray(tau, dtype=float)
        if m.shape != (tau_arr.size, tau_arr.size):
            return False
        if (m < -tol).any():
            return False
        if np.abs(m.sum(axis=0) - 1.0).max() > tol:
            return False
        return np.abs(m @ tau_arr - tau_arr).max() <= tol

    def apply(self, probs: Sequence[float]) -> np.ndarray:
        return self.matrix @ np.asarray(probs, dtype=float)


def _phase1_simplex(
    a: np.ndarray, b: np.ndarray, tol: float, max_iter: int = 50000
) -> tuple[float, np.ndarray]:
    """Minimize the total artificial slack of {x >= 0 : Ax = b}.

    Returns (objective, x); the system is feasible iff the objective is ~0.
    Bland's rule (smallest eligible column; ties in the ratio test broken by
    smallest basis variable) rules out cycling.
    """
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    m, n = a.shape
    flip = b < 0
    a[flip] *= -1.0
    b[flip] *= -1.0
    tableau = np.hstack([a, np.eye(m)])
    rhs = b.copy()
    basis = np.arange(n, n + m)
    # Phase-I reduced costs with the all-artificial basis.
    reduced = np.zeros(n + m)
    reduced[:n] = -a.sum(axis=0)
    for _ in range(max_iter):
        entering_candidates = np.nonzero(reduced < -tol)[0]
        if entering_candidates.size == 0:
            break
        j = int(entering_candidates[0])
        column = tableau[:, j]
        eligible = np.nonzero(column > tol)[0]
        if eligible.size == 0:
            break
        ratios = rhs[eligible] / column[eligible]
        best = ratios.min()
        ties = eligible[ratios == best]
        i = int(ties[np.argmin(basis[ties])])
        pivot = tableau[i, j]
        tableau[i] /= pivot
        rhs[i] /= pivot
        factors = tableau[:, j].copy()
        factors[i] = 0.0
        tableau -= np.outer(factors, tableau[i])
        rhs -= factors * rhs[i]
        reduced = reduced - reduced[j] * tableau[i]
        reduced[j] = 0.0
        basis[i] = j
    x = np.zeros(n)
    for row, var in enumerate(basis):
        if var < n:
            x[var] = rhs[row]
    objective = float(rhs[basis >= n].sum())
    return objective, x


def lp_feasible(
    t: Transition,
    dim_cap: int = DEFAULT_DIMENSION_CAP,
    tol: float = FEASIBILITY_TOL,
) -> tuple[bool, Optional[GibbsMap]]:
    """Decide existence of a Gibbs-fixing stochastic matrix G with G p = p'.

    Constraints, with variables G_ij laid out row-major: every column sums to
    one, G g = g (equivalent to fixing tau, avoids divisions), and G p = p'.
    Returns the witness on success.
    """
    n = t.dim
    if n > dim_cap:
        raise DimensionCapExceeded(f"dimension {n} exceeds cap {dim_cap}")
    g = np.array([float(w) for w in t.weights])
    p = np.array([float(x) for x in t.initial.probs])
    p_fin = np.array([float(x) for x in t.final.probs])
    rows = []
    rhs = []
    for j in range(n):  # column sums
        row = np.zeros(n * n)
        row[j::n] = 1.0
        rows.append(row)
        rhs.append(1.0)
    for i in range(n):  # G g = g
        row = np.zeros(n * n)
        row[i * n : (i + 1) * n] = g
        rows.append(row)
        rhs.append(g[i])
    for i in range(n):  # G p = p'
        row = np.zeros(n * n)
        row[i * n : (i + 1) * n] = p
        rows.append(row)
        rhs.append(p_fin[i])
    objective, x = _phase1_simplex(np.array(rows), np.array(rhs), tol)
    if objective > tol:
        return False, None
    return True, GibbsMap(x.reshape(n, n))


def recovery_map(g: GibbsMap, tau: Sequence[float]) -> GibbsMap:
    """Petz-style reversal R_ij = G_ji tau_i / tau_j.

    R always fixes tau; when the forward transition produced no entropy, R
    carries the forward image back to the original distribution.
    """
    tau_arr = np.asarray(tau, dtype=float)
    if (tau_arr <= 0).any():
        raise NonPositiveWeight("tau must be strictly positive")
    matrix = g.matrix.T * tau_arr[:, None] / tau_arr[None, :]
    return GibbsMap(matrix)


def _beta_swap(n: int, i: int, j: int, tau: np.ndarray) -> np.ndarray:
    """Extremal two-level exchange fixing tau: full swap of the lighter level."""
    if tau[j] > tau[i]:
        i, j = j, i
    m = np.eye(n)
    ratio = tau[j] / tau[i]
    m[i, i] = 1.0 - ratio
    m[j, i] = ratio
    m[i, j] = 1.0
    m[j, j] = 0.0
    return m


def random_gibbs_map(
    tau: Sequence[float],
    seed: int,
    mix: Optional[tuple[float, float, float]] = None,
) -> GibbsMap:
    """Seeded random Gibbs-stochastic matrix.

    Convex mixture of the identity, the all-tau map, and two-level exchange
    extremals on random pairs.  ``mix`` overrides the drawn weights for the
    three parts (identity, all-tau, exchanges).
    """
    tau_arr = np.asarray(tau, dtype=float)
    if (tau_arr <= 0).any():
        raise NonPositiveWeight("tau must be strictly positive")
    n = tau_arr.size
    rng = np.random.default_rng(seed)
    if mix is None:
        raw = rng.dirichlet(np.ones(3))
        mix = (float(raw[0]), float(raw[1]), float(raw[2]))
    w_id, w_tau, w_swap = mix
    matrix = w_id * np.eye(n) + w_tau * np.tile(
        (tau_arr / tau_arr.sum())[:, None], (1, n)
    )
    if n >= 2 and w_swap > 0:
        pair_count = max(1, n - 1)
        shares = rng.dirichlet(np.ones(pair_count)) * w_swap
        for share in shares:
            i, j = rng.choice(n, size=2, replace=False)
            matrix += share * _beta_swap(n, int(i), int(j), tau_arr)
    elif w_swap > 0:
        matrix += w_swap * np.eye(n)
    return GibbsMap(matrix)


# ---------------------------------------------------------------------------
# Seeded rational generators (property tests and the oracle-check command).
# ---------------------------------------------------------------------------

_WEIGHT_PALETTE = (
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(4),
    Fraction(2, 3),
)


def random_state(
    rng: random.Random,
    dim: int,
    allow_zero: bool = False,
    weights: Optional[Sequence[Fraction]] = None,
) -> ThermoState:
    """A random exact state with small-denominator entries."""
    while True:
        raw = [rng.randint(0 if allow_zero else 1, 9) for _ in range(dim)]
        if sum(raw) > 0:
            break
    total = sum(raw)
    probs = tuple(Fraction(x, total) for x in raw)
    if weights is None:
        weights = tuple(rng.choice(_WEIGHT_PALETTE) for _ in range(dim))
    return ThermoState(probs, tuple(weights))


def random_rational_gibbs_matrix(
    weights: Sequence[Fraction], rng: random.Random
) -> list[list[Fraction]]:
    """Exact-rational Gibbs-stochastic matrix (mixture of extremal pieces)."""
    n = len(weights)
    z = sum(weights, Fraction(0))
    tau = [w / z for w in weights]
    identity = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    all_tau = [[tau[i] for _ in range(n)] for i in range(n)]
    parts = [identity, all_tau]
    if n >= 2:
        for _ in range(n):
            i, j = rng.sample(range(n), 2)
            if tau[j] > tau[i]:
                i, j = j, i
            swap = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
            ratio = tau[j] / tau[i]
            swap[i][i] = 1 - ratio
            swap[j][i] = ratio
            swap[i][j] = Fraction(1)
            swap[j][j] = Fraction(0)
            parts.append(swap)
    raw = [Fraction(rng.randint(0, 6)) for _ in parts]
    if sum(raw) == 0:
        raw[0] = Fraction(1)
    total = sum(raw)
    coeffs = [x / total for x in raw]
    out = [[Fraction(0)] * n for _ in range(n)]
    for coeff, part in zip(coeffs, parts):
        if coeff == 0:
            continue
        for i in range(n):
            for j in range(n):
                out[i][j] += coeff * part[i][j]
    return out


def random_transition(
    rng: random.Random, dim: int, feasible_bias: float = 0.5
) -> Transition:
    """A random shared-weights transition.

    With probability ``feasible_bias`` the final state is produced by an exact
    Gibbs-stochastic matrix (feasible by construction); otherwise it is drawn
    independently, which is usually infeasible in at least one direction.
    """
    initial = random_state(rng, dim, allow_zero=True)
    if rng.random() < feasible_bias:
        matrix = random_rational_gibbs_matrix(initial.weights, rng)
        final_probs = tuple(
            sum((matrix[i][j] * initial.probs[j] for j in range(dim)), Fraction(0))
            for i in range(dim)
        )
        final = ThermoState(final_probs, initial.weights)
    else:
        final = random_state(rng, dim, allow_zero=True, weights=initial.weights)
    return Transition(initial, final)

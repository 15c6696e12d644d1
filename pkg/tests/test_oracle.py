"""LP feasibility oracle vs the exact curve criterion."""

import math
from fractions import Fraction

import numpy as np
import pytest

from thermomajor.curves import curve_of, majorizes
from thermomajor.divergences import entropy_production
from thermomajor.errors import DimensionCapExceeded
from thermomajor.oracle import (
    GibbsMap,
    lp_feasible,
    random_gibbs_map,
    random_rational_gibbs_matrix,
    random_transition,
    recovery_map,
)
from thermomajor.states import Transition, gibbs_of, make_state

from conftest import random_state, seeded

F = Fraction


def tau_of(t):
    return [float(x) for x in gibbs_of(t.initial).probs]


class TestLpFeasible:
    def test_uniform_cannot_be_purified(self):
        t = Transition(
            make_state(("1/2", "1/2"), (1, 1)), make_state((1, 0), (1, 1))
        )
        feasible, witness = lp_feasible(t)
        assert not feasible
        assert witness is None

    def test_anything_reaches_gibbs(self):
        rng = seeded(51)
        for _ in range(20):
            p = random_state(rng, rng.randint(2, 5))
            t = Transition(p, gibbs_of(p))
            feasible, witness = lp_feasible(t)
            assert feasible
            assert witness.is_valid(tau_of(t))
            assert np.abs(
                witness.apply([float(x) for x in p.probs])
                - np.array([float(x) for x in t.final.probs])
            ).max() <= 1e-7

    def test_dimension_cap(self):
        p = make_state((1,) + (0,) * 8, (1,) * 9)
        with pytest.raises(DimensionCapExceeded):
            lp_feasible(Transition(p, p))

    def test_agreement_with_curve_criterion(self):
        rng = seeded(52)
        for _ in range(150):
            t = random_transition(rng, rng.randint(2, 5))
            curve_verdict = majorizes(curve_of(t.initial), curve_of(t.final))
            lp_verdict, witness = lp_feasible(t)
            assert curve_verdict == lp_verdict
            if lp_verdict:
                assert witness.is_valid(tau_of(t))
                # feasible transitions never consume free energy for free
                assert entropy_production(t) >= -1e-9


class TestRecoveryMap:
    def test_identity_maps_to_identity(self):
        g = GibbsMap(np.eye(3))
        r = recovery_map(g, [0.5, 0.3, 0.2])
        assert np.abs(r.matrix - np.eye(3)).max() == 0.0

    def test_preserves_gibbs_distribution(self):
        rng = seeded(53)
        for trial in range(25):
            dim = rng.randint(2, 5)
            tau = np.array([rng.randint(1, 9) for _ in range(dim)], dtype=float)
            tau /= tau.sum()
            g = random_gibbs_map(tau, seed=trial)
            r = recovery_map(g, tau)
            assert r.is_valid(tau, tol=1e-9)

    def test_zero_dissipation_erasure_recovers_input(self):
        # Joint uniform erasure with the matched two-level reservoir: the LP
        # witness has zero entropy production, so the reversal map undoes it.
        joint_init = make_state(("1/2", 0, "1/2", 0), (1, 2, 1, 2))
        joint_fin = make_state((0, 1, 0, 0), (1, 2, 1, 2))
        t = Transition(joint_init, joint_fin)
        assert abs(entropy_production(t)) <= 1e-12
        feasible, witness = lp_feasible(t)
        assert feasible
        tau = tau_of(t)
        recovered = recovery_map(witness, tau).apply(
            [float(x) for x in joint_fin.probs]
        )
        assert np.abs(
            recovered - np.array([float(x) for x in joint_init.probs])
        ).max() <= 1e-7

    def test_recovery_on_measured_zero_dissipation_witnesses(self):
        rng = seeded(54)
        hits = 0
        for _ in range(60):
            t = random_transition(rng, rng.randint(2, 4), feasible_bias=1.0)
            if entropy_production(t) >= 1e-9:
                continue
            feasible, witness = lp_feasible(t)
            assert feasible
            tau = tau_of(t)
            recovered = recovery_map(witness, tau).apply(
                [float(x) for x in t.final.probs]
            )
            assert np.abs(
                recovered - np.array([float(x) for x in t.initial.probs])
            ).max() <= 1e-7
            hits += 1
        assert hits > 0


class TestRandomGibbsMap:
    def test_pure_identity_mixture(self):
        tau = [0.5, 0.25, 0.25]
        g = random_gibbs_map(tau, seed=0, mix=(1.0, 0.0, 0.0))
        assert np.abs(g.matrix - np.eye(3)).max() == 0.0

    def test_fixes_tau_across_seeds(self):
        tau = np.array([0.5, 0.3, 0.2])
        for seed in range(100):
            g = random_gibbs_map(tau, seed=seed)
            assert np.abs(g.matrix @ tau - tau).max() <= 1e-12
            assert np.abs(g.matrix.sum(axis=0) - 1.0).max() <= 1e-12
            assert g.matrix.min() >= -1e-15

    def test_data_processing_spot_check(self):
        rng = seeded(55)
        for seed in range(30):
            dim = rng.randint(2, 4)
            p = random_state(rng, dim)
            weights = p.weights
            matrix = random_rational_gibbs_matrix(weights, rng)
            final = tuple(
                sum((matrix[i][j] * p.probs[j] for j in range(dim)), F(0))
                for i in range(dim)
            )
            t = Transition(p, make_state(final, weights))
            assert entropy_production(t) >= -1e-9

    def test_rational_matrix_is_gibbs_stochastic(self):
        rng = seeded(56)
        for _ in range(30):
            dim = rng.randint(2, 5)
            weights = random_state(rng, dim).weights
            matrix = random_rational_gibbs_matrix(weights, rng)
            z = sum(weights, F(0))
            tau = [w / z for w in weights]
            for j in range(dim):
                assert sum(matrix[i][j] for i in range(dim)) == 1
            for i in range(dim):
                assert sum(matrix[i][j] * tau[j] for j in range(dim)) == tau[i]
            assert all(matrix[i][j] >= 0 for i in range(dim) for j in range(dim))

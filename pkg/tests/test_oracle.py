"""
Test the dephasing map and the brute-force oracle against the exact formula.
"""
import os
import unittest
from unittest import mock

import numpy as np

from geodiscord.entities.densityMatrix import DensityMatrix
from geodiscord.entities.oracleConfig import OracleConfig
from geodiscord.exceptions import ContractViolationError, PreconditionError
from geodiscord.initialize.ghz_state import ghz_state
from geodiscord.initialize.quantum_classical_state import quantum_classical_state
from geodiscord.initialize.random_states import (
    random_local_state,
    random_mixed,
    random_product_state,
    random_unitary,
)
from geodiscord.initialize.state_family import random_quantum_classical
from geodiscord.solution.dephase import dephase, disturbance, disturbance_batch
from geodiscord.solution.geometric_discord import geometric_discord
from geodiscord.solution.hermitian_eigensystem import hermitian_eigensystem
from geodiscord.solution.oracle import compare, minimize, qubit_bases
from geodiscord.solution.partial_trace import partial_trace


class TestDephase(unittest.TestCase):
    """
    Closed-form optimum for a fixed measurement basis
    """

    def test_quantum_classical_fixed_point(self):
        U = random_unitary(3, np.random.default_rng(1))
        sigmas = [random_local_state(2, k) for k in range(3)]
        rho = quantum_classical_state(sigmas, [0.2, 0.3, 0.5], U)
        np.testing.assert_allclose(dephase(rho, U).matrix, rho.matrix, atol=1e-12)
        self.assertLess(disturbance(rho, U), 1e-12)

    def test_bell_state(self):
        chi = dephase(ghz_state(2), np.eye(2))
        np.testing.assert_allclose(chi.matrix, np.diag([0.5, 0, 0, 0.5]), atol=1e-15)
        self.assertAlmostEqual(disturbance(ghz_state(2), np.eye(2)), 0.5, places=15)

    def test_ghz_qutrit(self):
        self.assertAlmostEqual(disturbance(ghz_state(3), np.eye(3)), 2 / 3, places=14)

    def test_product_state_eigenbasis(self):
        rho = random_product_state(2, 3, 4, pure=False)
        basis = hermitian_eigensystem(partial_trace(rho, 2).matrix).vectors
        self.assertLess(disturbance(rho, basis), 1e-12)

    def test_phase_and_permutation_invariance(self):
        rng = np.random.default_rng(6)
        rho = random_mixed(2, 3, 6, 3)
        U = random_unitary(3, rng)
        reference = disturbance(rho, U)
        phases = np.exp(1j * rng.uniform(0, 2 * np.pi, 3))
        self.assertAlmostEqual(disturbance(rho, U * phases), reference, delta=1e-12)
        self.assertAlmostEqual(disturbance(rho, U[:, [2, 0, 1]]), reference, delta=1e-12)

    def test_batch_matches_single(self):
        rng = np.random.default_rng(9)
        rho = random_mixed(3, 3, 4, 1)
        bases = np.array([random_unitary(3, rng) for _ in range(5)])
        expected = [disturbance(rho, U) for U in bases]
        np.testing.assert_allclose(disturbance_batch(rho, bases), expected, atol=1e-12)

    def test_development_cross_check(self):
        rho = random_mixed(2, 2, 3, 2)
        with mock.patch.dict(os.environ, {"DEVELOPMENT": "1"}):
            value = disturbance(rho, np.eye(2))
        self.assertGreaterEqual(value, 0.0)

    def test_non_orthonormal_basis(self):
        with self.assertRaises(PreconditionError):
            disturbance(ghz_state(2), np.array([[1, 1], [0, 1]]))

    def test_basis_of_wrong_order(self):
        with self.assertRaises(ContractViolationError):
            disturbance(ghz_state(2), np.eye(3))


class TestQubitOracle(unittest.TestCase):
    """
    Grid and polish over the Bloch hemisphere
    """

    def test_qubit_bases_are_unitary(self):
        bases = qubit_bases(np.array([0.0, 0.7, 1.5]), np.array([0.0, 2.0, 4.0]))
        for U in bases:
            np.testing.assert_allclose(U.conj().T @ U, np.eye(2), atol=1e-15)

    def test_bell_state(self):
        result = minimize(ghz_state(2))
        self.assertAlmostEqual(result.value, 0.5, delta=1e-6)
        self.assertEqual(result.restarts_used, 1)

    def test_quantum_classical_is_zero(self):
        for seed in range(5):
            self.assertLess(minimize(random_quantum_classical(2, 2, seed)).value, 1e-8)

    def test_agrees_with_formula(self):
        for seed in range(200):
            rho = random_mixed(2, 2, 1 + seed % 4, seed)
            comparison = compare(rho)
            self.assertLess(abs(comparison.gap), 1e-6, f"seed {seed}")
            self.assertFalse(comparison.upper_bound_only)

    def test_larger_unmeasured_side(self):
        for seed in range(20):
            comparison = compare(random_mixed(3, 2, 6, seed))
            self.assertLess(abs(comparison.gap), 1e-6)


class TestUnitaryOracle(unittest.TestCase):
    """
    Restarted descent for d2 >= 3
    """

    _config = OracleConfig(restarts=3, max_iters=300, seed=5)

    def test_ghz_qutrit(self):
        comparison = compare(ghz_state(3), self._config)
        self.assertAlmostEqual(comparison.formula, 2 / 3, delta=1e-10)
        self.assertAlmostEqual(comparison.oracle, 2 / 3, delta=1e-6)

    def test_never_below_formula(self):
        config = OracleConfig()
        gaps = []
        for seed in range(100):
            rho = random_mixed(3, 3, 9, seed)
            comparison = compare(rho, config, strict=False)
            gaps.append(comparison.gap)
            self.assertEqual(len(comparison.oracle_result.per_restart_values), 32)
        self.assertGreaterEqual(min(gaps), -1e-6)

    def test_relative_improvement_stop(self):
        rho = random_mixed(3, 3, 9, 21)
        loose = minimize(rho, OracleConfig(restarts=1, tol=0.9, seed=4))
        tight = minimize(rho, OracleConfig(restarts=1, tol=1e-12, seed=4))
        self.assertTrue(loose.converged)
        self.assertEqual(loose.per_restart_iterations[0] % 50, 0)
        self.assertLess(loose.per_restart_iterations[0], tight.per_restart_iterations[0])
        self.assertLessEqual(tight.value, loose.value)

    def test_stationary_start_stops_after_one_window(self):
        result = minimize(ghz_state(3), OracleConfig(restarts=2, seed=1))
        self.assertEqual(result.per_restart_iterations[1], 50)
        self.assertAlmostEqual(result.per_restart_values[1], 2 / 3, delta=1e-12)

    def test_quantum_classical_is_zero(self):
        config = OracleConfig(restarts=4, max_iters=2000, seed=2)
        rho = random_quantum_classical(2, 3, 1)
        self.assertLess(minimize(rho, config).value, 1e-6)

    def test_monotone_in_restarts(self):
        rho = random_mixed(2, 3, 6, 11)
        short = minimize(rho, OracleConfig(restarts=2, max_iters=100, seed=3))
        long = minimize(rho, OracleConfig(restarts=4, max_iters=100, seed=3))
        self.assertEqual(long.per_restart_values[:2], short.per_restart_values)
        self.assertLessEqual(long.value, short.value)

    def test_deterministic(self):
        rho = random_mixed(2, 3, 3, 4)
        config = OracleConfig(restarts=2, max_iters=50, seed=8)
        self.assertEqual(minimize(rho, config).value, minimize(rho, config).value)

    def test_upper_bound_only(self):
        rho = random_mixed(2, 4, 8, 1)
        comparison = compare(rho, OracleConfig(restarts=1, max_iters=20))
        self.assertTrue(comparison.upper_bound_only)
        self.assertGreaterEqual(comparison.oracle, geometric_discord(rho).value - 1e-6)

    def test_invalid_state(self):
        with self.assertRaises(Exception):
            minimize(DensityMatrix(np.eye(4) / 2, [2, 2], validate=False))


class TestOracleConfig(unittest.TestCase):
    """
    Settings validation
    """

    def test_defaults(self):
        config = OracleConfig()
        self.assertEqual(config.as_dict()["restarts"], 32)

    def test_invalid_settings(self):
        with self.assertRaises(PreconditionError) as context:
            OracleConfig(restarts=0)
        self.assertTrue("restarts" in str(context.exception))
        with self.assertRaises(PreconditionError):
            OracleConfig(grid_resolution=2.0)
        with self.assertRaises(PreconditionError):
            OracleConfig(tol=0)


if __name__ == "__main__":
    unittest.main()

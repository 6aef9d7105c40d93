"""
Test the exact geometric discord on states with known values.
"""
import unittest

import numpy as np

from geodiscord.entities.densityMatrix import DensityMatrix
from geodiscord.entities.operatorBasis import OperatorBasis
from geodiscord.exceptions import InvalidDimensionError, InvalidStateError, PreconditionError
from geodiscord.initialize.gell_mann_basis import gell_mann_basis
from geodiscord.initialize.ghz_state import ghz_state, maximally_entangled_state
from geodiscord.initialize.quantum_classical_state import quantum_classical_state
from geodiscord.initialize.random_states import (
    random_mixed,
    random_product_state,
    random_pure,
    random_unitary,
)
from geodiscord.initialize.state_family import random_quantum_classical
from geodiscord.solution.entanglement import concurrence_pure, negativity
from geodiscord.solution.g_operator import g_operator
from geodiscord.solution.geometric_discord import (
    geometric_discord,
    left_geometric_discord,
    maximally_entangled_discord,
    pure_two_qubit_discord,
)
from geodiscord.solution.hermitian_eigensystem import hermitian_eigensystem
from geodiscord.solution.local_operations import apply_local_unitaries, swap_subsystems
from geodiscord.solution.pauli_representation import extract

DIM_PAIRS = [(2, 2), (2, 3), (3, 2), (3, 3)]


class TestGOperator(unittest.TestCase):
    """
    G = ((d2-1)/(d1 d2)) |r2><r2| + T^t T / 4
    """

    def test_maximally_mixed(self):
        G = g_operator(extract(DensityMatrix(np.eye(6) / 6, [2, 3])))
        self.assertEqual(G.shape, (8, 8))
        self.assertLess(np.max(np.abs(G)), 1e-15)

    def test_ghz(self):
        for d in range(2, 6):
            eta = hermitian_eigensystem(g_operator(extract(ghz_state(d)))).values
            np.testing.assert_allclose(eta, 1 / d ** 2, atol=1e-12)

    def test_pure_product_is_rank_one(self):
        for d in (2, 3, 4):
            eta = hermitian_eigensystem(g_operator(extract(random_product_state(d, d, 6)))).values
            self.assertAlmostEqual(eta[0], (d - 1) / d, delta=1e-10)
            self.assertLess(np.max(np.abs(eta[1:])), 1e-10)

    def test_positive_semidefinite(self):
        for d1, d2 in DIM_PAIRS:
            for seed in range(20):
                eta = hermitian_eigensystem(g_operator(extract(random_mixed(d1, d2, 2, seed)))).values
                self.assertGreaterEqual(eta[-1], -1e-12)


class TestGeometricDiscord(unittest.TestCase):
    """
    Closed-form values
    """

    def test_ghz(self):
        for d in range(2, 6):
            result = geometric_discord(ghz_state(d))
            self.assertAlmostEqual(result.value, (d - 1) / d, delta=1e-10)
            self.assertTrue(result.degenerate)

    def test_quantum_classical_is_zero(self):
        for d1, d2 in DIM_PAIRS:
            for seed in range(10):
                self.assertLess(geometric_discord(random_quantum_classical(d1, d2, seed)).value, 1e-10)

    def test_product_is_zero(self):
        for d1, d2 in DIM_PAIRS:
            self.assertLess(geometric_discord(random_product_state(d1, d2, 3, pure=False)).value, 1e-10)

    def test_pure_two_qubit(self):
        for seed in range(1000):
            psi = random_pure(2, 2, seed)
            c = concurrence_pure(psi)
            value = geometric_discord(psi).value
            self.assertAlmostEqual(value, c * c / 2, delta=1e-10)
            self.assertAlmostEqual(c, 2 * negativity(psi), delta=1e-10)

    def test_pure_two_qubit_example(self):
        psi = DensityMatrix.from_vector([np.sqrt(0.9), 0, 0, np.sqrt(0.1)], [2, 2])
        self.assertAlmostEqual(concurrence_pure(psi), 0.6, delta=1e-12)
        self.assertAlmostEqual(geometric_discord(psi).value, 0.18, delta=1e-12)
        self.assertAlmostEqual(pure_two_qubit_discord(psi), 0.18, delta=1e-12)

    def test_pure_two_qubit_formula(self):
        self.assertAlmostEqual(pure_two_qubit_discord(ghz_state(2)), 0.5, delta=1e-12)
        self.assertAlmostEqual(pure_two_qubit_discord(random_product_state(2, 2, 1)), 0.0, delta=1e-8)
        with self.assertRaises(PreconditionError):
            pure_two_qubit_discord(random_mixed(2, 2, 4, 1))
        with self.assertRaises(PreconditionError):
            pure_two_qubit_discord(ghz_state(3))

    def test_pure_two_qubit_correlation_spectrum(self):
        for seed in range(50):
            psi = random_pure(2, 2, seed)
            c = concurrence_pure(psi)
            tt = np.sort(np.linalg.eigvalsh(extract(psi).tt))[::-1]
            np.testing.assert_allclose(tt, [1, c * c, c * c], atol=1e-9)

    def test_formula_forms_agree(self):
        for d1, d2 in DIM_PAIRS:
            for seed in range(20):
                result = geometric_discord(random_mixed(d1, d2, d1 * d2, seed))
                trace_g, leading = result.formula_terms
                self.assertAlmostEqual(trace_g - leading, result.value, delta=1e-12)
                self.assertLessEqual(result.value, (d2 - 1) / d2 + 1e-12)

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(31)
        for d1, d2 in DIM_PAIRS:
            for seed in range(10):
                rho = random_mixed(d1, d2, 3, seed)
                rotated = apply_local_unitaries(rho, random_unitary(d1, rng), random_unitary(d2, rng))
                self.assertAlmostEqual(
                    geometric_discord(rho).value, geometric_discord(rotated).value, delta=1e-10
                )

    def test_basis_independence(self):
        rng = np.random.default_rng(12)
        q, _ = np.linalg.qr(rng.standard_normal((8, 8)))
        rotated = OperatorBasis(3, np.einsum("ij,jab->iab", q, gell_mann_basis(3).generators))
        rho = random_mixed(2, 3, 6, 2)
        self.assertAlmostEqual(
            geometric_discord(rho).value, geometric_discord(rho, basis_b=rotated).value, delta=1e-12
        )

    def test_invalid_state(self):
        with self.assertRaises(InvalidStateError) as context:
            geometric_discord(DensityMatrix(np.eye(4) / 2, [2, 2], validate=False))
        self.assertTrue(any(v.startswith("trace") for v in context.exception.violations))

    def test_not_bipartite(self):
        with self.assertRaises(PreconditionError):
            geometric_discord(DensityMatrix(np.eye(4) / 4))


class TestMeasuredSide(unittest.TestCase):
    """
    Measurement on either subsystem
    """

    def test_left_discord_of_classical_quantum_state(self):
        zero = DensityMatrix(np.diag([1.0, 0.0]))
        plus = DensityMatrix(np.full((2, 2), 0.5))
        rho = quantum_classical_state([zero, plus], [0.5, 0.5], np.eye(2))
        self.assertLess(geometric_discord(rho).value, 1e-12)
        self.assertAlmostEqual(left_geometric_discord(rho).value, 0.125, delta=1e-12)

    def test_left_is_swapped_right(self):
        rho = random_mixed(2, 3, 4, 9)
        self.assertEqual(
            left_geometric_discord(rho).value, geometric_discord(swap_subsystems(rho)).value
        )

    def test_pure_two_qubit_symmetric(self):
        for seed in range(20):
            psi = random_pure(2, 2, seed)
            self.assertAlmostEqual(
                geometric_discord(psi).value, left_geometric_discord(psi).value, delta=1e-10
            )


class TestMaximallyEntangled(unittest.TestCase):
    """
    (m-1)/m with m = min(d1, d2)
    """

    def test_values(self):
        self.assertAlmostEqual(maximally_entangled_discord(3, 3), 2 / 3, places=15)
        self.assertAlmostEqual(maximally_entangled_discord(2, 4), 0.5, places=15)
        with self.assertRaises(InvalidDimensionError):
            maximally_entangled_discord(1, 3)

    def test_larger_first_subsystem(self):
        for d1, d2 in ((3, 2), (4, 2), (4, 3)):
            value = geometric_discord(maximally_entangled_state(d1, d2)).value
            self.assertAlmostEqual(value, maximally_entangled_discord(d1, d2), delta=1e-10)


if __name__ == "__main__":
    unittest.main()

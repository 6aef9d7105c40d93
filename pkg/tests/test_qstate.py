"""
Test density matrices, partial traces, purities and the test-state generators.
"""
import unittest

import numpy as np

from geodiscord.entities.densityMatrix import DensityMatrix
from geodiscord.entities.eigenSystem import EigenSystem
from geodiscord.exceptions import (
    ContractViolationError,
    DimensionMismatchError,
    InvalidStateError,
    PreconditionError,
)
from geodiscord.initialize.ghz_state import ghz_state, maximally_entangled_state
from geodiscord.initialize.quantum_classical_state import quantum_classical_state
from geodiscord.initialize.random_states import (
    random_local_state,
    random_mixed,
    random_product_state,
    random_pure,
    random_separable,
    random_unitary,
)
from geodiscord.initialize.separable_mixture import separable_mixture
from geodiscord.solution.bloch_vector import bloch_vector
from geodiscord.solution.entanglement import (
    concurrence_from_bloch,
    concurrence_pure,
    negativity,
    normalized_concurrence,
)
from geodiscord.solution.geometric_discord import geometric_discord
from geodiscord.solution.hermitian_eigensystem import hermitian_eigensystem
from geodiscord.solution.local_operations import apply_local_unitaries, swap_subsystems
from geodiscord.solution.partial_trace import partial_trace
from geodiscord.solution.pauli_representation import extract
from geodiscord.solution.purity import hs_distance_sq, purity


def _basis_state(d, k):
    m = np.zeros((d, d))
    m[k, k] = 1
    return DensityMatrix(m)


class TestDensityMatrix(unittest.TestCase):
    """
    Validation of the state carrier
    """

    def test_valid_state(self):
        rho = DensityMatrix(np.eye(4) / 4, [2, 2])
        self.assertTrue(rho.is_valid())
        self.assertEqual(rho.dims, (2, 2))

    def test_trace_violation(self):
        with self.assertRaises(InvalidStateError) as context:
            DensityMatrix(np.eye(2), [2])
        self.assertTrue(any(v.startswith("trace") for v in context.exception.violations))

    def test_negative_eigenvalue(self):
        with self.assertRaises(InvalidStateError) as context:
            DensityMatrix(np.diag([1.5, -0.5]))
        self.assertTrue(any(v.startswith("positive") for v in context.exception.violations))

    def test_non_hermitian(self):
        with self.assertRaises(InvalidStateError):
            DensityMatrix(np.array([[0.5, 0.3], [0.0, 0.5]]))

    def test_dims_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            DensityMatrix(np.eye(4) / 4, [2, 3])

    def test_not_finite(self):
        for bad in (np.nan, np.inf):
            m = np.eye(4) / 4
            m[0, 0] = bad
            with self.assertRaises(InvalidStateError) as context:
                DensityMatrix(m, [2, 2])
            self.assertEqual(len(context.exception.violations), 1)
            self.assertTrue(context.exception.violations[0].startswith("finite"))

    def test_not_finite_unvalidated(self):
        m = np.eye(4) / 4
        m[0, 0] = np.nan
        rho = DensityMatrix(m, [2, 2], validate=False)
        self.assertFalse(rho.is_valid())

        with self.assertRaises(InvalidStateError) as context:
            geometric_discord(rho)

        self.assertTrue("finite" in str(context.exception))


class TestHermitianEigensystem(unittest.TestCase):
    """
    Sorted eigendecomposition
    """

    def test_identity(self):
        np.testing.assert_allclose(hermitian_eigensystem(np.eye(3)).values, [1, 1, 1])

    def test_descending_order(self):
        np.testing.assert_allclose(hermitian_eigensystem(np.diag([2.0, -1.0, 0.0])).values, [2, 0, -1])

    def test_pauli_x(self):
        system = hermitian_eigensystem(np.array([[0, 1], [1, 0]], dtype=complex))
        np.testing.assert_allclose(system.values, [1, -1], atol=1e-15)
        plus = np.array([1, 1]) / np.sqrt(2)
        minus = np.array([1, -1]) / np.sqrt(2)
        self.assertAlmostEqual(abs(np.vdot(plus, system.vectors[:, 0])), 1.0, places=12)
        self.assertAlmostEqual(abs(np.vdot(minus, system.vectors[:, 1])), 1.0, places=12)

    def test_non_hermitian_input(self):
        with self.assertRaises(ContractViolationError):
            hermitian_eigensystem(np.array([[0, 1], [0, 0]], dtype=complex))

    def test_reconstruction(self):
        rng = np.random.default_rng(5)
        for n in range(3, 10):
            for _ in range(100):
                x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
                H = x + x.conj().T
                system = hermitian_eigensystem(H)
                self.assertLess(np.linalg.norm(system.reconstruct() - H), 1e-10)
                gram = system.vectors.conj().T @ system.vectors
                self.assertLess(np.max(np.abs(gram - np.eye(n))), 1e-10)
                self.assertTrue(np.all(np.diff(system.values) <= 0))

    def test_deterministic(self):
        H = np.diag([1.0, 1.0, 2.0]) + 0.1
        first, second = hermitian_eigensystem(H), hermitian_eigensystem(H)
        self.assertTrue(np.array_equal(first.vectors, second.vectors))

    def test_eigensystem_surface(self):
        self.assertEqual(EigenSystem._fields, ("values", "vectors"))
        self.assertFalse(hasattr(EigenSystem, "top"))


class TestPartialTrace(unittest.TestCase):
    """
    Reduced states
    """

    def test_product_state(self):
        rho_a = random_local_state(2, 1)
        rho_b = random_local_state(3, 2)
        rho = DensityMatrix(np.kron(rho_a.matrix, rho_b.matrix), [2, 3])
        np.testing.assert_allclose(partial_trace(rho, 1).matrix, rho_a.matrix, atol=1e-12)
        np.testing.assert_allclose(partial_trace(rho, 2).matrix, rho_b.matrix, atol=1e-12)

    def test_ghz_reduced(self):
        np.testing.assert_allclose(partial_trace(ghz_state(2), 2).matrix, np.eye(2) / 2, atol=1e-15)

    def test_schmidt_purities(self):
        psi = random_pure(2, 3, 17)
        self.assertAlmostEqual(purity(partial_trace(psi, 1)), purity(partial_trace(psi, 2)), places=12)

    def test_trace_preserved(self):
        for seed in range(20):
            rho = random_mixed(3, 2, 4, seed)
            for keep in (1, 2):
                self.assertAlmostEqual(np.trace(partial_trace(rho, keep).matrix).real, 1.0, places=12)

    def test_keep_out_of_range(self):
        with self.assertRaises(PreconditionError):
            partial_trace(ghz_state(2), 3)

    def test_not_bipartite(self):
        with self.assertRaises(PreconditionError):
            partial_trace(DensityMatrix(np.eye(4) / 4), 1)

    def test_pure_state_bloch_equality(self):
        for d1, d2 in ((2, 2), (2, 3), (3, 3)):
            for seed in range(10):
                psi = random_pure(d1, d2, seed)
                r1 = bloch_vector(partial_trace(psi, 1))
                r2 = bloch_vector(partial_trace(psi, 2))
                left = 1 / d1 + (d1 - 1) / d1 * r1 @ r1
                right = 1 / d2 + (d2 - 1) / d2 * r2 @ r2
                self.assertAlmostEqual(left, right, delta=1e-10)


class TestPurityAndDistance(unittest.TestCase):
    """
    tr[rho^2] and tr[(A - B)^2]
    """

    def test_purity(self):
        self.assertAlmostEqual(purity(random_pure(2, 2, 3)), 1.0, delta=1e-12)
        self.assertAlmostEqual(purity(DensityMatrix(np.eye(5) / 5)), 0.2, places=15)
        self.assertAlmostEqual(purity(DensityMatrix(np.diag([0.75, 0.25]))), 0.625, places=15)

    def test_hs_distance(self):
        zero, one = _basis_state(2, 0), _basis_state(2, 1)
        mixed = DensityMatrix(np.eye(2) / 2)
        self.assertEqual(hs_distance_sq(zero, zero), 0.0)
        self.assertAlmostEqual(hs_distance_sq(zero, one), 2.0, places=15)
        self.assertAlmostEqual(hs_distance_sq(zero, mixed), 0.5, places=15)
        self.assertAlmostEqual(hs_distance_sq(one, zero), hs_distance_sq(zero, one), places=15)

    def test_hs_distance_dims(self):
        with self.assertRaises(DimensionMismatchError):
            hs_distance_sq(ghz_state(2), DensityMatrix(np.eye(4) / 4))


class TestGenerators(unittest.TestCase):
    """
    GHZ, random and structured states
    """

    def test_ghz(self):
        self.assertAlmostEqual(purity(ghz_state(2)), 1.0, places=14)
        rho = ghz_state(3)
        for keep in (1, 2):
            np.testing.assert_allclose(partial_trace(rho, keep).matrix, np.eye(3) / 3, atol=1e-15)
        singular_values = np.linalg.svd(extract(rho).T, compute_uv=False)
        np.testing.assert_allclose(singular_values, 2 / 3, atol=1e-12)

    def test_maximally_entangled_unequal(self):
        rho = maximally_entangled_state(2, 4)
        self.assertEqual(rho.dims, (2, 4))
        np.testing.assert_allclose(partial_trace(rho, 1).matrix, np.eye(2) / 2, atol=1e-15)

    def test_random_pure(self):
        for seed in range(5):
            self.assertAlmostEqual(purity(random_pure(3, 2, seed)), 1.0, delta=1e-12)
        self.assertTrue(np.array_equal(random_pure(2, 3, 9).matrix, random_pure(2, 3, 9).matrix))
        self.assertFalse(np.array_equal(random_pure(2, 3, 9).matrix, random_pure(2, 3, 10).matrix))

    def test_random_mixed(self):
        full = random_mixed(2, 3, 6, 4)
        self.assertEqual(np.linalg.matrix_rank(full.matrix, tol=1e-10), 6)
        self.assertLess(purity(full), 1.0)
        self.assertAlmostEqual(purity(random_mixed(2, 3, 1, 4)), 1.0, delta=1e-12)
        self.assertEqual(np.linalg.matrix_rank(random_mixed(3, 3, 4, 4).matrix, tol=1e-10), 4)
        self.assertTrue(np.array_equal(random_mixed(2, 3, 4, 7).matrix, random_mixed(2, 3, 4, 7).matrix))
        for rank in (0, 7):
            with self.assertRaises(PreconditionError):
                random_mixed(2, 3, rank, 1)

    def test_random_unitary(self):
        U = random_unitary(4, np.random.default_rng(2))
        np.testing.assert_allclose(U.conj().T @ U, np.eye(4), atol=1e-12)

    def test_separable_mixture(self):
        rho_a, rho_b = random_local_state(2, 1), random_local_state(2, 2)
        single = separable_mixture([(1.0, rho_a, rho_b)], [2, 2])
        np.testing.assert_allclose(single.matrix, np.kron(rho_a.matrix, rho_b.matrix), atol=1e-15)

        zero, one = _basis_state(2, 0), _basis_state(2, 1)
        classical = separable_mixture([(0.5, zero, zero), (0.5, one, one)], [2, 2])
        self.assertTrue(classical.is_valid())
        np.testing.assert_allclose(np.diag(classical.matrix).real, [0.5, 0, 0, 0.5])

    def test_separable_mixture_weights(self):
        zero = _basis_state(2, 0)
        with self.assertRaises(PreconditionError):
            separable_mixture([(0.5, zero, zero), (0.6, zero, zero)], [2, 2])
        with self.assertRaises(PreconditionError):
            separable_mixture([(1.5, zero, zero), (-0.5, zero, zero)], [2, 2])

    def test_separable_generators(self):
        rho = random_separable(3, 3, 5, 8)
        self.assertTrue(rho.is_valid())
        product = random_product_state(2, 3, 8)
        self.assertAlmostEqual(purity(product), 1.0, delta=1e-12)

    def test_quantum_classical_state(self):
        sigmas = [random_local_state(2, 1), random_local_state(2, 2)]
        chi = quantum_classical_state(sigmas, [0.3, 0.7], np.eye(2))
        r4 = chi.matrix.reshape(2, 2, 2, 2)
        # block diagonal in the second factor
        self.assertLess(np.max(np.abs(r4[:, 0, :, 1])), 1e-15)
        self.assertLess(np.max(np.abs(r4[:, 1, :, 0])), 1e-15)

        single = quantum_classical_state(sigmas, [1.0, 0.0], np.eye(2))
        expected = np.kron(sigmas[0].matrix, np.diag([1.0, 0.0]))
        np.testing.assert_allclose(single.matrix, expected, atol=1e-15)

    def test_quantum_classical_basis_check(self):
        sigmas = [random_local_state(2, 1), random_local_state(2, 2)]
        with self.assertRaises(PreconditionError):
            quantum_classical_state(sigmas, [0.5, 0.5], np.array([[1, 0], [1, 1]]))


class TestEntanglement(unittest.TestCase):
    """
    Concurrence and negativity
    """

    def test_concurrence(self):
        self.assertAlmostEqual(concurrence_pure(random_product_state(2, 2, 3)), 0.0, delta=1e-7)
        self.assertAlmostEqual(concurrence_pure(ghz_state(2)), 1.0, places=12)
        self.assertAlmostEqual(concurrence_pure(ghz_state(3)), 2 / np.sqrt(3), places=12)
        self.assertAlmostEqual(normalized_concurrence(ghz_state(3)), 1.0, places=12)

    def test_concurrence_from_bloch(self):
        psi = random_pure(3, 3, 21)
        r = bloch_vector(partial_trace(psi, 2))
        self.assertAlmostEqual(concurrence_from_bloch(r, 3), concurrence_pure(psi, 2), places=10)

    def test_concurrence_requires_pure(self):
        with self.assertRaises(PreconditionError):
            concurrence_pure(random_mixed(2, 2, 4, 0))

    def test_negativity(self):
        self.assertAlmostEqual(negativity(random_product_state(2, 2, 5)), 0.0, delta=1e-12)
        self.assertAlmostEqual(negativity(ghz_state(2)), 0.5, places=12)

    def test_concurrence_twice_negativity(self):
        for seed in range(50):
            psi = random_pure(2, 2, seed)
            self.assertAlmostEqual(concurrence_pure(psi), 2 * negativity(psi), delta=1e-10)


class TestLocalOperations(unittest.TestCase):
    """
    Swap and local unitaries
    """

    def test_swap(self):
        rho_a, rho_b = random_local_state(2, 1), random_local_state(3, 2)
        rho = DensityMatrix(np.kron(rho_a.matrix, rho_b.matrix), [2, 3])
        swapped = swap_subsystems(rho)
        self.assertEqual(swapped.dims, (3, 2))
        np.testing.assert_allclose(swapped.matrix, np.kron(rho_b.matrix, rho_a.matrix), atol=1e-15)

    def test_local_unitaries_keep_spectrum(self):
        rng = np.random.default_rng(3)
        rho = random_mixed(2, 3, 3, 1)
        rotated = apply_local_unitaries(rho, random_unitary(2, rng), random_unitary(3, rng))
        np.testing.assert_allclose(
            np.linalg.eigvalsh(rotated.matrix), np.linalg.eigvalsh(rho.matrix), atol=1e-12
        )

    def test_local_unitaries_shape(self):
        with self.assertRaises(DimensionMismatchError):
            apply_local_unitaries(ghz_state(2), np.eye(3), np.eye(2))
        with self.assertRaises(PreconditionError):
            apply_local_unitaries(ghz_state(2), 2 * np.eye(2), np.eye(2))


if __name__ == "__main__":
    unittest.main()

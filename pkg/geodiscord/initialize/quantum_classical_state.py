from typing import Sequence

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.modelConstants import ModelConstants
from ..exceptions import DimensionMismatchError, PreconditionError


def check_orthonormal_basis(basis: np.ndarray, tol: float = ModelConstants.STATE_TOL) -> np.ndarray:
    """
    Return ``basis`` as a complex square matrix whose columns are orthonormal,
    raising PreconditionError otherwise.
    """
    basis = np.asarray(basis, dtype=np.complex128)
    if basis.ndim != 2 or basis.shape[0] != basis.shape[1]:
        raise PreconditionError(f"basis must be a square matrix of column vectors, got {basis.shape}")
    deviation = float(np.max(np.abs(basis.conj().T @ basis - np.eye(basis.shape[0]))))
    if deviation > tol:
        raise PreconditionError(
            f"basis vectors must be orthonormal within {tol:.0e} (deviation {deviation:.3e})"
        )
    return basis


def quantum_classical_state(
    sigmas: Sequence[DensityMatrix],
    alphas: Sequence[float],
    basis_vectors: np.ndarray,
) -> DensityMatrix:
    """
    Function to assemble sum_k alpha_k sigma_k (x) |k><k|

    Arguments:

        sigmas (list): d2 states of the first subsystem

        alphas (list): d2 non-negative weights summing to 1

        basis_vectors (ndarray): unitary whose columns |k> are an orthonormal basis of the second subsystem

    Returns:

        chi (DensityMatrix): the quantum-classical state

    """
    basis = check_orthonormal_basis(basis_vectors)
    d2 = basis.shape[0]
    alphas = np.asarray(alphas, dtype=np.float64)

    if len(sigmas) != d2 or alphas.shape != (d2,):
        raise DimensionMismatchError(
            f"need one sigma and one weight per basis vector ({d2}), "
            f"got {len(sigmas)} sigmas and {alphas.size} weights"
        )
    if np.any(alphas < 0) or abs(alphas.sum() - 1) > ModelConstants.WEIGHT_TOL:
        raise PreconditionError("quantum-classical weights must be non-negative and sum to 1")

    d1 = sigmas[0].order
    if any(s.order != d1 for s in sigmas):
        raise DimensionMismatchError("all sigma_k must act on the same space")

    chi = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for alpha, sigma, k in zip(alphas, sigmas, basis.T):
        chi += alpha * np.kron(sigma.matrix, np.outer(k, k.conj()))
    return DensityMatrix(chi, [d1, d2])

"""
Closed-form inner optimum of the quantum-classical distance for a fixed
measurement basis {|k>} of the second subsystem:

    A_k = (I (x) <k|) rho (I (x) |k>),    chi = sum_k A_k (x) |k><k|
    tr[(rho - chi)^2] = tr[rho^2] - sum_k tr[A_k^2]
"""
import os

import numpy as np
from numba import njit

from ..entities.densityMatrix import DensityMatrix
from ..exceptions import ContractViolationError
from ..initialize.quantum_classical_state import check_orthonormal_basis
from .partial_trace import as_tensor
from .purity import hs_distance_sq, purity

CROSS_CHECK_TOL = 1e-10


def dephased_blocks(rho: DensityMatrix, basis: np.ndarray) -> np.ndarray:
    """
    Blocks A_k, shape (d2, d1, d1), for the basis given as columns of ``basis``.
    """
    r4 = as_tensor(rho)
    basis = check_orthonormal_basis(basis)
    if basis.shape[0] != rho.dims[1]:
        raise ContractViolationError(
            f"basis of order {basis.shape[0]} for a second subsystem of dimension {rho.dims[1]}"
        )
    return np.einsum("bk,abce,ek->kac", basis.conj(), r4, basis)


def dephase(rho: DensityMatrix, basis: np.ndarray) -> DensityMatrix:
    """
    Function to compute the closest quantum-classical state for a fixed basis

    Arguments:

        rho (DensityMatrix): bipartite state

        basis (ndarray): unitary whose columns are the basis |k> of the second subsystem

    Returns:

        chi (DensityMatrix): sum_k A_k (x) |k><k|

    """
    basis = check_orthonormal_basis(basis)
    blocks = dephased_blocks(rho, basis)
    d1, d2 = rho.dims
    chi = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for block, k in zip(blocks, basis.T):
        chi += np.kron(block, np.outer(k, k.conj()))
    return DensityMatrix(chi, rho.dims)


def disturbance(rho: DensityMatrix, basis: np.ndarray) -> float:
    """
    Function to compute tr[(rho - dephase(rho, basis))^2]

    Evaluated as tr[rho^2] - sum_k tr[A_k^2]. With DEVELOPMENT set the
    explicit distance is computed too and both must agree within 1e-10.

    Arguments:

        rho (DensityMatrix): bipartite state

        basis (ndarray): unitary whose columns are the measurement basis

    Returns:

        disturbance (float): squared distance to the dephased state, >= 0

    """
    blocks = dephased_blocks(rho, basis)
    value = max(purity(rho) - float(np.real(np.vdot(blocks, blocks))), 0.0)

    if os.getenv("DEVELOPMENT"):
        explicit = hs_distance_sq(rho, dephase(rho, basis))
        if abs(explicit - value) > CROSS_CHECK_TOL:
            raise ContractViolationError(
                f"disturbance forms disagree: {value:.15e} vs {explicit:.15e}"
            )
    return value


@njit(cache=True)
def block_purity_sums(r4, bases):
    """
    sum_k tr[A_k^2] for every basis in ``bases`` (shape (n, d2, d2), columns are |k>).
    """
    d1 = r4.shape[0]
    d2 = r4.shape[1]
    n = bases.shape[0]
    out = np.zeros(n)
    block = np.zeros((d1, d1), dtype=np.complex128)
    for m in range(n):
        total = 0.0
        for k in range(d2):
            for a in range(d1):
                for c in range(d1):
                    acc = 0.0 + 0.0j
                    for b in range(d2):
                        ub = np.conj(bases[m, b, k])
                        if ub == 0:
                            continue
                        for e in range(d2):
                            acc += ub * r4[a, b, c, e] * bases[m, e, k]
                    block[a, c] = acc
            for a in range(d1):
                for c in range(d1):
                    total += block[a, c].real ** 2 + block[a, c].imag ** 2
        out[m] = total
    return out


def disturbance_batch(rho: DensityMatrix, bases: np.ndarray) -> np.ndarray:
    """
    Disturbance of many bases at once, ``bases`` of shape (n, d2, d2).
    Orthonormality is not checked.
    """
    r4 = np.array(as_tensor(rho), dtype=np.complex128)
    bases = np.ascontiguousarray(bases, dtype=np.complex128)
    values = purity(rho) - block_purity_sums(r4, bases)
    return np.maximum(values, 0.0)

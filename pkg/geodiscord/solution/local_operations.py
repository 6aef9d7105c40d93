import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.modelConstants import ModelConstants
from ..exceptions import DimensionMismatchError, PreconditionError
from .partial_trace import as_tensor


def swap_subsystems(rho: DensityMatrix) -> DensityMatrix:
    """
    Exchange the two factors: rho on d1 (x) d2 becomes SWAP rho SWAP on d2 (x) d1.
    """
    d1, d2 = rho.dims
    swapped = as_tensor(rho).transpose(1, 0, 3, 2).reshape(d1 * d2, d1 * d2)
    return DensityMatrix(swapped, [d2, d1], validate=False)


def partial_transpose(rho: DensityMatrix) -> np.ndarray:
    """
    Partial transpose on the second subsystem. The result is Hermitian but not
    necessarily positive, so a plain array is returned.
    """
    d1, d2 = rho.dims
    return as_tensor(rho).transpose(0, 3, 2, 1).reshape(d1 * d2, d1 * d2)


def apply_local_unitaries(rho: DensityMatrix, U: np.ndarray, V: np.ndarray) -> DensityMatrix:
    """
    Function to apply (U (x) V) rho (U (x) V)^dagger

    Arguments:

        rho (DensityMatrix): bipartite state

        U (ndarray): unitary on the first subsystem

        V (ndarray): unitary on the second subsystem

    Returns:

        rotated (DensityMatrix): the rotated state

    """
    d1, d2 = rho.dims
    U = np.asarray(U, dtype=np.complex128)
    V = np.asarray(V, dtype=np.complex128)
    if U.shape != (d1, d1) or V.shape != (d2, d2):
        raise DimensionMismatchError(
            f"local unitaries of shapes {U.shape}, {V.shape} do not fit dims {list(rho.dims)}"
        )
    for name, W in (("U", U), ("V", V)):
        deviation = float(np.max(np.abs(W.conj().T @ W - np.eye(W.shape[0]))))
        if deviation > ModelConstants.STATE_TOL:
            raise PreconditionError(f"{name} is not unitary (deviation {deviation:.3e})")

    W = np.kron(U, V)
    return DensityMatrix(W @ rho.matrix @ W.conj().T, rho.dims, validate=False)

import numpy as np

from ..entities.eigenSystem import EigenSystem
from ..entities.modelConstants import ModelConstants
from ..exceptions import ContractViolationError


def hermitian_eigensystem(H: np.ndarray, tol: float = ModelConstants.STATE_TOL) -> EigenSystem:
    """
    Function to diagonalise a Hermitian (or real symmetric) matrix

    Arguments:

        H (ndarray): square matrix, Hermitian within ``tol``

        tol (float): accepted max |H - H^dagger|

    Returns:

        eigensystem (EigenSystem): eigenvalues descending, eigenvectors as columns

    """
    H = np.asarray(H)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ContractViolationError(f"eigensystem of a non-square array of shape {H.shape}")

    deviation = float(np.max(np.abs(H - H.conj().T))) if H.size else 0.0
    if deviation > tol:
        raise ContractViolationError(
            f"matrix is not Hermitian within {tol:.0e} (max |H - H^dagger| = {deviation:.3e})"
        )

    values, vectors = np.linalg.eigh(0.5 * (H + H.conj().T))
    return EigenSystem(values[::-1].copy(), vectors[:, ::-1].copy())

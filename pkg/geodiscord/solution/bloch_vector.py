from typing import Optional

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.operatorBasis import OperatorBasis
from ..exceptions import DimensionMismatchError
from ..initialize.gell_mann_basis import gell_mann_basis


def bloch_vector(rho: DensityMatrix, basis: Optional[OperatorBasis] = None) -> np.ndarray:
    """
    Function to compute the Bloch vector r_j = sqrt(d/(2(d-1))) tr[rho Y_j]

    Arguments:

        rho (DensityMatrix): state of a single d-dimensional system

        basis (OperatorBasis): generators, Gell-Mann of order d when omitted

    Returns:

        r (ndarray): real vector of length d^2-1, ||r|| <= 1 with equality for pure states

    """
    d = rho.order
    basis = gell_mann_basis(d) if basis is None else basis
    if basis.dim != d:
        raise DimensionMismatchError(f"basis of dimension {basis.dim} for a state of order {d}")
    return np.sqrt(d / (2.0 * (d - 1))) * basis.expectations(rho.matrix)


def basis_state_bloch_vectors(d: int, basis: Optional[OperatorBasis] = None) -> np.ndarray:
    """
    Bloch vectors of the computational basis states |0>, ..., |d-1>, one per row.
    They form a simplex frame.
    """
    basis = gell_mann_basis(d) if basis is None else basis
    vectors = []
    for k in range(d):
        projector = np.zeros((d, d), dtype=np.complex128)
        projector[k, k] = 1.0
        vectors.append(bloch_vector(DensityMatrix(projector, [d], validate=False), basis))
    return np.array(vectors)

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..exceptions import DimensionMismatchError


def purity(rho: DensityMatrix) -> float:
    """
    tr[rho^2], in [1/d, 1] for a state of order d.
    """
    m = rho.matrix
    return float(np.real(np.vdot(m, m)))


def hs_distance_sq(A: DensityMatrix, B: DensityMatrix) -> float:
    """
    Function to compute the squared Hilbert-Schmidt distance tr[(A - B)^2]

    Arguments:

        A (DensityMatrix): first operator

        B (DensityMatrix): second operator, same dims as A

    Returns:

        distance_sq (float): tr[(A - B)^2] >= 0

    """
    if tuple(A.dims) != tuple(B.dims):
        raise DimensionMismatchError(f"dims differ: {list(A.dims)} vs {list(B.dims)}")
    diff = A.matrix - B.matrix
    return float(np.real(np.vdot(diff, diff)))

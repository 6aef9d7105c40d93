import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..exceptions import InvalidDimensionError


def maximally_entangled_state(d1: int, d2: int) -> DensityMatrix:
    """
    Function to build (1/sqrt(m)) sum_{k<m} |k>|k> on d1 (x) d2 with m = min(d1, d2)

    Arguments:

        d1 (int): dimension of the first subsystem

        d2 (int): dimension of the second subsystem

    Returns:

        rho (DensityMatrix): rank-one state of Schmidt rank min(d1, d2)

    """
    for d in (d1, d2):
        if int(d) != d or d < 2:
            raise InvalidDimensionError(f"subsystem dimensions must be integers >= 2, got {d}")
    d1, d2 = int(d1), int(d2)

    psi = np.zeros(d1 * d2, dtype=np.complex128)
    for k in range(min(d1, d2)):
        psi[k * d2 + k] = 1.0
    return DensityMatrix.from_vector(psi, [d1, d2])


def ghz_state(d: int) -> DensityMatrix:
    """
    Function to build the GHZ state (1/sqrt(d)) sum_k |k>|k> on d (x) d

    Arguments:

        d (int): local dimension, at least 2

    Returns:

        rho (DensityMatrix): the pure GHZ state

    """
    return maximally_entangled_state(d, d)

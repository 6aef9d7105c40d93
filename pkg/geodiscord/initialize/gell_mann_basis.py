from functools import lru_cache

import numpy as np

from ..entities.operatorBasis import OperatorBasis
from ..exceptions import InvalidDimensionError


@lru_cache(maxsize=None)
def gell_mann_basis(d: int) -> OperatorBasis:
    """
    Function to build the generalized Gell-Mann basis of dimension d

    Generators are ordered as all symmetric off-diagonal matrices (j<k in
    lexicographic order), then the antisymmetric ones in the same order, then
    the d-1 diagonal matrices. Each satisfies tr[Y_i Y_j] = 2 delta_ij.

    Arguments:

        d (int): Hilbert space dimension, at least 2

    Returns:

        basis (OperatorBasis): the d^2-1 generators

    """
    if int(d) != d or d < 2:
        raise InvalidDimensionError(f"basis dimension must be an integer >= 2, got {d}")
    d = int(d)

    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    generators = []

    for j, k in pairs:
        g = np.zeros((d, d), dtype=np.complex128)
        g[j, k] = 1
        g[k, j] = 1
        generators.append(g)

    for j, k in pairs:
        g = np.zeros((d, d), dtype=np.complex128)
        g[j, k] = -1j
        g[k, j] = 1j
        generators.append(g)

    for l in range(1, d):
        diag = np.zeros(d)
        diag[:l] = 1
        diag[l] = -l
        generators.append(np.diag(diag * np.sqrt(2 / (l * (l + 1)))).astype(np.complex128))

    return OperatorBasis(d, generators)

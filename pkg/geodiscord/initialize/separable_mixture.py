from typing import Sequence, Tuple

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.modelConstants import ModelConstants
from ..exceptions import DimensionMismatchError, PreconditionError


def separable_mixture(
    components: Sequence[Tuple[float, DensityMatrix, DensityMatrix]],
    dims: Sequence[int],
) -> DensityMatrix:
    """
    Function to assemble sum_k beta_k rho_A^(k) (x) rho_B^(k)

    Arguments:

        components (list): (weight, rho_A, rho_B) triples, weights > 0

        dims (list): [d1, d2]

    Returns:

        rho (DensityMatrix): the separable state

    """
    d1, d2 = (int(d) for d in dims)
    if not components:
        raise PreconditionError("a separable mixture needs at least one component")

    weights = np.array([c[0] for c in components], dtype=np.float64)
    if np.any(weights <= 0):
        raise PreconditionError("separable mixture weights must be positive")
    if abs(weights.sum() - 1) > ModelConstants.WEIGHT_TOL:
        raise PreconditionError(
            f"separable mixture weights must sum to 1 within {ModelConstants.WEIGHT_TOL:.0e} "
            f"(got {weights.sum():.15f})"
        )

    rho = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for beta, rho_a, rho_b in components:
        if rho_a.order != d1 or rho_b.order != d2:
            raise DimensionMismatchError(
                f"component of orders ({rho_a.order}, {rho_b.order}) does not fit dims [{d1}, {d2}]"
            )
        rho += beta * np.kron(rho_a.matrix, rho_b.matrix)

    return DensityMatrix(rho, [d1, d2])

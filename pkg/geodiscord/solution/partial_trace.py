import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..exceptions import PreconditionError


def as_tensor(rho: DensityMatrix) -> np.ndarray:
    """
    View a bipartite state as rho[a, b, c, e] = <a b| rho |c e>.
    """
    if not rho.is_bipartite:
        raise PreconditionError(f"bipartite state required, got dims {list(rho.dims)}")
    d1, d2 = rho.dims
    return rho.matrix.reshape(d1, d2, d1, d2)


def partial_trace(rho: DensityMatrix, keep: int) -> DensityMatrix:
    """
    Function to compute the reduced state of one subsystem

    Arguments:

        rho (DensityMatrix): bipartite state

        keep (int): 1 to keep the first subsystem (trace out the second), 2 for the second

    Returns:

        reduced (DensityMatrix): reduced state of the kept subsystem

    """
    r4 = as_tensor(rho)
    if keep == 1:
        reduced = np.einsum("ajbj->ab", r4)
    elif keep == 2:
        reduced = np.einsum("iaib->ab", r4)
    else:
        raise PreconditionError(f"keep must be 1 or 2, got {keep}")
    return DensityMatrix(reduced, [reduced.shape[0]], validate=False)

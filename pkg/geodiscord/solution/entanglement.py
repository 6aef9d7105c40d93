"""
Entanglement measures used as cross-checks of the discord formulas.
"""
import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.modelConstants import ModelConstants
from ..exceptions import PreconditionError
from .local_operations import partial_transpose
from .partial_trace import partial_trace
from .purity import purity


def require_pure(psi: DensityMatrix) -> None:
    if not psi.is_bipartite:
        raise PreconditionError(f"bipartite state required, got dims {list(psi.dims)}")
    p = purity(psi)
    if abs(p - 1.0) > ModelConstants.PURITY_TOL:
        raise PreconditionError(
            f"pure state required: purity must equal 1 within {ModelConstants.PURITY_TOL:.0e} (got {p:.12f})"
        )


def concurrence_pure(psi: DensityMatrix, reduced: int = 1) -> float:
    """
    Function to compute the concurrence sqrt(2(1 - tr[rho_j^2])) of a pure bipartite state

    Either reduced state gives the same value for a pure state.

    Arguments:

        psi (DensityMatrix): pure bipartite state

        reduced (int): subsystem (1 or 2) whose reduced purity is used

    Returns:

        concurrence (float): value in [0, sqrt(2(m-1)/m)], m = min(d1, d2)

    """
    require_pure(psi)
    reduced_purity = purity(partial_trace(psi, reduced))
    return float(np.sqrt(max(0.0, 2.0 * (1.0 - reduced_purity))))


def normalized_concurrence(psi: DensityMatrix) -> float:
    """
    Concurrence rescaled to 1 on maximally entangled states, taken on the
    smaller subsystem.
    """
    d1, d2 = psi.dims
    m = min(d1, d2)
    keep = 1 if d1 <= d2 else 2
    return concurrence_pure(psi, keep) / np.sqrt(2.0 * (m - 1) / m)


def concurrence_from_bloch(r: np.ndarray, d: int) -> float:
    """
    Concurrence of a pure state from the Bloch vector r of one d-dimensional
    reduced state: C^2 = 2 (d-1)/d (1 - ||r||^2).
    """
    r = np.asarray(r, dtype=np.float64)
    return float(np.sqrt(max(0.0, 2.0 * (d - 1) / d * (1.0 - r @ r))))


def negativity(rho: DensityMatrix) -> float:
    """
    Function to compute the negativity of a bipartite state

    Arguments:

        rho (DensityMatrix): bipartite state

    Returns:

        negativity (float): sum of |negative eigenvalues| of the partial transpose

    """
    if not rho.is_bipartite:
        raise PreconditionError(f"bipartite state required, got dims {list(rho.dims)}")
    pt = partial_transpose(rho)
    eigenvalues = np.linalg.eigvalsh(0.5 * (pt + pt.conj().T))
    return float(-np.sum(eigenvalues[eigenvalues < 0]))

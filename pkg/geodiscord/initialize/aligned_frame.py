import numpy as np

from ..entities.eigenSystem import EigenSystem
from ..entities.modelConstants import ModelConstants
from ..entities.simplexFrame import SimplexFrame
from ..exceptions import PreconditionError
from .regular_simplex_frame import embed_frame, simplex_coordinates


def gram_schmidt(vectors: np.ndarray, tol: float = ModelConstants.GRAM_SCHMIDT_TOL) -> np.ndarray:
    """
    Orthonormalise the rows of ``vectors`` in index order, dropping rows whose
    residual norm falls below ``tol``.
    """
    basis = []
    for v in np.atleast_2d(vectors):
        w = np.array(v, dtype=np.float64)
        for b in basis:
            w = w - (b @ w) * b
        norm = np.linalg.norm(w)
        if norm > tol:
            basis.append(w / norm)
    return np.array(basis)


def aligned_frame(eigensystem: EigenSystem, d: int) -> SimplexFrame:
    """
    Function to build the simplex frame whose projector is the span of the d-1
    leading eigenvectors

    A seed frame on the first d-1 axes is rotated so that its span (taken by
    Gram-Schmidt over the seed vectors) lands on the leading eigenvectors.

    Arguments:

        eigensystem (EigenSystem): eigensystem of a symmetric matrix of order d^2-1, values descending

        d (int): number of frame vectors

    Returns:

        frame (SimplexFrame): frame with sum_k |y_k><y_k| = d/(d-1) sum_{n<d} |e_n><e_n|

    """
    vectors = np.asarray(eigensystem.vectors)
    n = vectors.shape[0]
    if vectors.ndim != 2 or vectors.shape[1] < d - 1:
        raise PreconditionError(
            f"aligned frame for d={d} needs {d - 1} eigenvectors, got {vectors.shape[1] if vectors.ndim == 2 else 0}"
        )
    if np.max(np.abs(vectors.imag)) > ModelConstants.FRAME_TOL:
        raise PreconditionError("aligned frame needs real eigenvectors")

    top = vectors[:, : d - 1].real.T
    seed = embed_frame(simplex_coordinates(d), ambient_dim=n)
    span = gram_schmidt(seed)
    # y' = sum_m (s_m . y) e_m
    rotated = (seed @ span.T) @ top
    return SimplexFrame(rotated)

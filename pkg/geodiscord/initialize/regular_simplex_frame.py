from functools import lru_cache
from typing import Optional

import numpy as np

from ..entities.modelConstants import ModelConstants
from ..entities.simplexFrame import SimplexFrame
from ..exceptions import InvalidDimensionError, PreconditionError


@lru_cache(maxsize=None)
def _simplex_coordinates(d: int) -> np.ndarray:
    # y_1 = e_1, the remaining vertices are a (d-1)-simplex shifted to -1/(d-1) on e_1
    if d == 2:
        return np.array([[1.0], [-1.0]])
    lower = _simplex_coordinates(d - 1)
    coords = np.zeros((d, d - 1))
    coords[0, 0] = 1.0
    coords[1:, 0] = -1.0 / (d - 1)
    coords[1:, 1:] = np.sqrt(1.0 - 1.0 / (d - 1) ** 2) * lower
    coords.setflags(write=False)
    return coords


def simplex_coordinates(d: int) -> np.ndarray:
    """
    Vertices of a regular simplex centred at the origin, one unit vector of
    R^(d-1) per row.
    """
    if int(d) != d or d < 2:
        raise InvalidDimensionError(f"frame dimension must be an integer >= 2, got {d}")
    return _simplex_coordinates(int(d)).copy()


def check_span_basis(span_basis: np.ndarray, count: int, tol: float = ModelConstants.FRAME_TOL) -> np.ndarray:
    """
    Return ``span_basis`` (one vector per row) after checking it holds
    ``count`` orthonormal vectors.
    """
    span_basis = np.atleast_2d(np.asarray(span_basis, dtype=np.float64))
    if span_basis.shape[0] != count:
        raise PreconditionError(f"need {count} spanning vectors, got {span_basis.shape[0]}")
    deviation = float(np.max(np.abs(span_basis @ span_basis.T - np.eye(count))))
    if deviation > tol:
        raise PreconditionError(
            f"spanning vectors must be orthonormal within {tol:.0e} (deviation {deviation:.3e})"
        )
    return span_basis


def embed_frame(
    coordinates: np.ndarray,
    ambient_dim: Optional[int] = None,
    span_basis: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    Function to place frame coordinates into a larger space

    Arguments:

        coordinates (ndarray): one row of m coordinates per vector

        ambient_dim (int): target dimension, coordinates go on its first m axes

        span_basis (ndarray): alternatively, m orthonormal rows the coordinates refer to

    Returns:

        vectors (ndarray): the embedded vectors, one per row

    """
    coordinates = np.atleast_2d(np.asarray(coordinates, dtype=np.float64))
    m = coordinates.shape[1]
    if span_basis is not None:
        return coordinates @ check_span_basis(span_basis, m)

    ambient_dim = m if ambient_dim is None else int(ambient_dim)
    if ambient_dim < m:
        raise PreconditionError(f"cannot embed {m} coordinates into R^{ambient_dim}")
    vectors = np.zeros((coordinates.shape[0], ambient_dim))
    vectors[:, :m] = coordinates
    return vectors


def regular_simplex_frame(d: int, span_basis: Optional[np.ndarray] = None) -> SimplexFrame:
    """
    Function to build a simplex frame of d vectors inside the span of d-1 orthonormal vectors

    Works for every d >= 2.

    Arguments:

        d (int): number of frame vectors

        span_basis (ndarray): d-1 orthonormal rows of R^(d^2-1); the first
            d-1 coordinate axes when omitted

    Returns:

        frame (SimplexFrame): the frame

    """
    coords = simplex_coordinates(d)
    if span_basis is None:
        vectors = embed_frame(coords, ambient_dim=int(d) ** 2 - 1)
    else:
        vectors = embed_frame(coords, span_basis=span_basis)
    return SimplexFrame(vectors)

"""
Frames whose coordinates on the spanning vectors are all +-1 up to a common scale.

For even d the d x (d-1) sign matrix alpha needs columns summing to zero and
rows with pairwise products sum_n alpha_k1n alpha_k2n = -1; appending a column of
ones turns it into a normalised Hadamard matrix of order d. For odd d one vector
is fixed to e_1 and the remaining d-1 carry a sign matrix of the even case one
order lower.

Hadamard matrices are built for orders 2^k (Sylvester) and 2^k (q + 1) with q a
prime, q = 3 mod 4 (Paley). Orders 2 mod 4 above 2 admit none; other orders
outside these families are reported as unsupported.
"""
import logging
from typing import Optional

import numpy as np
from scipy.linalg import hadamard

from ..entities.simplexFrame import FrameConstruction, SimplexFrame, frame_deviations
from ..exceptions import InvalidDimensionError
from .regular_simplex_frame import embed_frame

logger = logging.getLogger(__name__)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _paley(q: int) -> np.ndarray:
    """
    Hadamard matrix of order q + 1 for a prime q = 3 mod 4.
    """
    residues = np.array([0] + [1 if pow(a, (q - 1) // 2, q) == 1 else -1 for a in range(1, q)])
    idx = np.arange(q)
    jacobsthal = residues[(idx[None, :] - idx[:, None]) % q]

    skew = np.zeros((q + 1, q + 1), dtype=np.int64)
    skew[0, 1:] = 1
    skew[1:, 0] = -1
    skew[1:, 1:] = jacobsthal
    return np.eye(q + 1, dtype=np.int64) + skew


def hadamard_matrix(order: int) -> Optional[np.ndarray]:
    """
    Function to build a normalised Hadamard matrix (first row and column all +1)

    Arguments:

        order (int): matrix order

    Returns:

        H (ndarray or None): the matrix, or None when the order is outside the
            Sylvester and Paley families

    """
    if order & (order - 1) == 0:
        return hadamard(order).astype(np.float64)

    power = 1
    while order % power == 0:
        rest = order // power
        if rest == 1:
            H = hadamard(power)
        elif _is_prime(rest - 1) and (rest - 1) % 4 == 3:
            H = np.kron(hadamard(power), _paley(rest - 1))
        else:
            power *= 2
            continue

        H = H * np.sign(H[0])[None, :]
        H = H * np.sign(H[:, 0])[:, None]
        return H.astype(np.float64)
    return None


def _sign_matrix(order: int):
    """
    Return (alpha, failed_relation, reason) for a Hadamard matrix of ``order``.
    """
    if order % 4 == 2 and order > 2:
        return (
            None,
            "row_products",
            f"no +-1 matrix of order {order} has orthogonal rows (a Hadamard order must be 1, 2 or a multiple of 4)",
        )

    H = hadamard_matrix(order)
    if H is None:
        return (
            None,
            None,
            f"unsupported order {order}: no Sylvester or Paley Hadamard matrix is constructed for it",
        )

    alpha = H[:, 1:]
    # rows in descending lexicographic order, first row all +1
    order_idx = sorted(range(order), key=lambda k: tuple(-alpha[k]))
    return alpha[order_idx], None, ""


def paper_frame(d: int, top_eigvecs: Optional[np.ndarray] = None) -> FrameConstruction:
    """
    Function to build the +-1 coefficient simplex frame for dimension d

    Arguments:

        d (int): number of frame vectors

        top_eigvecs (ndarray): d-1 orthonormal rows e_1..e_{d-1} the frame is
            written on; the first d-1 axes of R^(d^2-1) when omitted

    Returns:

        construction (FrameConstruction): the frame, or why it cannot be built

    """
    if int(d) != d or d < 2:
        raise InvalidDimensionError(f"frame dimension must be an integer >= 2, got {d}")
    d = int(d)

    if d % 2 == 0:
        alpha, failed, reason = _sign_matrix(d)
        if alpha is not None:
            coords = alpha / np.sqrt(d - 1)
    else:
        alpha, failed, reason = _sign_matrix(d - 1)
        if alpha is not None:
            coords = np.zeros((d, d - 1))
            coords[0, 0] = 1.0
            coords[1:, 0] = -1.0 / (d - 1)
            coords[1:, 1:] = np.sqrt(d) / (d - 1) * alpha

    if alpha is None:
        logger.info("sign-pattern frame for d=%d is not built: %s", d, reason)
        return FrameConstruction(d, False, None, None, failed, reason)

    if top_eigvecs is None:
        vectors = embed_frame(coords, ambient_dim=d * d - 1)
    else:
        vectors = embed_frame(coords, span_basis=top_eigvecs)

    report = frame_deviations(vectors)
    if not report.passed:
        relation = report.failed_relations()[0]
        return FrameConstruction(d, False, None, alpha, relation, "sign matrix violates the simplex relations")

    return FrameConstruction(d, True, SimplexFrame(vectors, validate=False), alpha, None, "")

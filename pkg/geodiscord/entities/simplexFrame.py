"""
Simplex frame class module
"""
from typing import NamedTuple, Optional

import numpy as np

from ..exceptions import InfeasibleConstructionError, InvalidFrameError
from .modelConstants import ModelConstants


class FrameReport(NamedTuple):
    """
    Deviations of a vector set from the simplex relations

    Attributes:

        d (int): number of vectors

        sum_deviation (float): max |sum_k y_k| component

        norm_deviation (float): max | ||y_k|| - 1 |

        dot_deviation (float): max |y_i . y_j + 1/(d-1)| over i != j

        worst_pair (tuple or None): pair (i, j) attaining dot_deviation

        tolerance (float): tolerance used for ``passed``

        passed (bool): all deviations within tolerance

    """

    d: int
    sum_deviation: float
    norm_deviation: float
    dot_deviation: float
    worst_pair: Optional[tuple]
    tolerance: float
    passed: bool

    def failed_relations(self) -> list:
        failed = []
        if self.sum_deviation > self.tolerance:
            failed.append("sum")
        if self.norm_deviation > self.tolerance:
            failed.append("norm")
        if self.dot_deviation > self.tolerance:
            failed.append("pairwise_dot")
        return failed


def frame_deviations(vectors: np.ndarray, tol: float = ModelConstants.FRAME_TOL) -> FrameReport:
    """
    Measure how far ``vectors`` (one per row) are from a simplex frame.
    """
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.float64))
    d = vectors.shape[0]
    sum_dev = float(np.max(np.abs(vectors.sum(axis=0))))
    norm_dev = float(np.max(np.abs(np.linalg.norm(vectors, axis=1) - 1.0)))

    dot_dev, worst = 0.0, None
    if d >= 2:
        gram = vectors @ vectors.T
        target = -1.0 / (d - 1)
        off = np.abs(gram - target)
        np.fill_diagonal(off, 0.0)
        i, j = np.unravel_index(int(np.argmax(off)), off.shape)
        dot_dev = float(off[i, j])
        worst = (int(min(i, j)), int(max(i, j))) if dot_dev > 0 else None

    passed = d >= 2 and max(sum_dev, norm_dev, dot_dev) <= tol
    return FrameReport(d, sum_dev, norm_dev, dot_dev, worst, tol, passed)


class SimplexFrame:
    """
    d unit vectors summing to zero with pairwise scalar products -1/(d-1).

    Attributes:

        d (int): number of vectors (the qudit dimension)

        ambient_dim (int): length of each vector, d^2-1 for frames used by the discord

        vectors (ndarray): array of shape (d, ambient_dim), read only

    """

    def __init__(self, vectors: np.ndarray, validate: bool = True):
        vectors = np.array(vectors, dtype=np.float64)
        if vectors.ndim != 2 or vectors.shape[0] < 2:
            raise InvalidFrameError(f"a frame needs at least two vectors, got shape {vectors.shape}")

        if validate:
            report = frame_deviations(vectors)
            if not report.passed:
                raise InvalidFrameError(
                    "vectors violate the simplex relations: "
                    + ", ".join(report.failed_relations())
                    + f" (sum {report.sum_deviation:.2e}, norm {report.norm_deviation:.2e}, "
                    f"dot {report.dot_deviation:.2e})"
                )

        vectors.setflags(write=False)
        self._vectors = vectors

    @property
    def vectors(self) -> np.ndarray:
        return self._vectors

    @property
    def d(self) -> int:
        return self._vectors.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self._vectors.shape[1]

    def rotated(self, orthogonal: np.ndarray) -> "SimplexFrame":
        """Apply an orthogonal transform of the ambient space to every vector."""
        return SimplexFrame(self._vectors @ np.asarray(orthogonal).T)

    def __repr__(self) -> str:
        return f"SimplexFrame(d={self.d}, ambient_dim={self.ambient_dim})"


class FrameConstruction(NamedTuple):
    """
    Outcome of the sign-pattern frame construction

    Attributes:

        d (int): requested dimension

        feasible (bool): True when a frame was built

        frame (SimplexFrame or None): the frame when feasible

        coefficients (ndarray or None): the +-1 coefficient matrix used

        failed_relation (str or None): relation that cannot be met

        reason (str): explanation

    """

    d: int
    feasible: bool
    frame: Optional[SimplexFrame]
    coefficients: Optional[np.ndarray]
    failed_relation: Optional[str]
    reason: str

    def require(self) -> SimplexFrame:
        """Return the frame or raise InfeasibleConstructionError naming the failed relation."""
        if not self.feasible:
            raise InfeasibleConstructionError(
                f"no sign-pattern frame for d={self.d}: {self.reason}", self.failed_relation or ""
            )
        return self.frame

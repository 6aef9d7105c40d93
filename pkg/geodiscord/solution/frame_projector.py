from typing import Tuple, Union

import numpy as np

from ..entities.simplexFrame import SimplexFrame


def frame_projector(frame: Union[SimplexFrame, np.ndarray]) -> np.ndarray:
    """
    Function to build Pi = ((d-1)/d) sum_k |y_k><y_k|

    Arguments:

        frame (SimplexFrame or ndarray): frame, raw vectors are validated first

    Returns:

        projector (ndarray): orthogonal projector of rank d-1 on the ambient space

    """
    if not isinstance(frame, SimplexFrame):
        frame = SimplexFrame(frame)
    Y = frame.vectors
    d = frame.d
    projector = (d - 1) / d * (Y.T @ Y)
    return 0.5 * (projector + projector.T)


def projector_deviations(projector: np.ndarray, rank: int) -> Tuple[float, float]:
    """Return (max |Pi^2 - Pi|, |tr Pi - rank|)."""
    idempotence = float(np.max(np.abs(projector @ projector - projector)))
    return idempotence, float(abs(np.trace(projector) - rank))

from typing import Union

import numpy as np

from ..entities.modelConstants import ModelConstants
from ..entities.simplexFrame import FrameReport, SimplexFrame, frame_deviations


def validate_frame(
    vectors: Union[SimplexFrame, np.ndarray], tol: float = ModelConstants.FRAME_TOL
) -> FrameReport:
    """
    Function to report how far a vector set is from the simplex relations

    sum_k y_k = 0, ||y_k|| = 1 and y_i . y_j = -1/(d-1) for i != j.

    Arguments:

        vectors (SimplexFrame or ndarray): one vector per row

        tol (float): pass/fail tolerance

    Returns:

        report (FrameReport): maximum deviation per relation

    """
    if isinstance(vectors, SimplexFrame):
        vectors = vectors.vectors
    return frame_deviations(vectors, tol)

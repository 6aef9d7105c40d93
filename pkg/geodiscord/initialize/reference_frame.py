import numpy as np

from ..exceptions import InvalidDimensionError
from ..utils.data import get_data, list_data


def reference_frame_dimensions() -> list:
    """Dimensions for which a printed reference frame is bundled."""
    names = [f for f in list_data() if f.startswith("reference_frame_d")]
    return sorted(int(f[len("reference_frame_d"):-len(".txt")]) for f in names)


def reference_frame(d: int) -> np.ndarray:
    """
    Function to load the printed sign-pattern frame for dimension d

    The vectors are returned exactly as printed, one row of d-1 coordinates
    per vector; they are not guaranteed to satisfy the simplex relations.

    Arguments:

        d (int): dimension (3, 4, 5 or 6)

    Returns:

        vectors (ndarray): array of shape (d, d-1)

    """
    if d not in reference_frame_dimensions():
        raise InvalidDimensionError(
            f"no reference frame bundled for d={d}; available: {reference_frame_dimensions()}"
        )
    return np.atleast_2d(get_data(f"reference_frame_d{d}.txt", comments="#"))

import numpy as np

from ..entities.blochRepr import BlochRepr


def g_operator(representation: BlochRepr) -> np.ndarray:
    """
    Function to build G = ((d2-1)/(d1 d2)) |r2><r2| + (1/4) T^t T

    Arguments:

        representation (BlochRepr): (r1, r2, T) of the state

    Returns:

        G (ndarray): real symmetric positive semidefinite matrix of order d2^2-1

    """
    d1, d2 = representation.d1, representation.d2
    r2 = representation.r2
    G = (d2 - 1) / (d1 * d2) * np.outer(r2, r2) + 0.25 * representation.tt
    return 0.5 * (G + G.T)

from typing import NamedTuple

import numpy as np


class EigenSystem(NamedTuple):
    """
    Spectral decomposition of a Hermitian matrix

    Attributes:

        values (ndarray): real eigenvalues in descending order

        vectors (ndarray): orthonormal eigenvectors stored as columns, same order

    """

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.conj().T

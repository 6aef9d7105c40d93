"""
Operator basis class module
"""
from typing import NamedTuple, Sequence, Union

import numpy as np

from ..exceptions import DimensionMismatchError


class BasisViolation(NamedTuple):
    """
    One violated basis axiom.

    Attributes:

        invariant (str): 'count', 'hermitian', 'traceless', 'nonzero' or 'normalization'

        indices (tuple): generator index (or index pair) concerned

        magnitude (float): size of the deviation

    """

    invariant: str
    indices: tuple
    magnitude: float


class OperatorBasis:
    """
    The tuple of d^2-1 traceless Hermitian generators that, together with the
    identity, span the operators on a d-dimensional Hilbert space.

    ```
    basis = gell_mann_basis(3)
    basis.generators.shape  # (8, 3, 3)
    ```

    Attributes:

        dim (int): Hilbert space dimension d

        generators (ndarray): complex array of shape (d^2-1, d, d), read only

    """

    def __init__(self, dim: int, generators: Union[np.ndarray, Sequence[np.ndarray]]):
        self.dim = int(dim)
        gens = np.array(generators, dtype=np.complex128)
        if gens.ndim != 3 or gens.shape[1:] != (self.dim, self.dim):
            raise DimensionMismatchError(
                f"generators must have shape (n, {self.dim}, {self.dim}), got {gens.shape}"
            )
        gens.setflags(write=False)
        self._generators = gens

    @property
    def generators(self) -> np.ndarray:
        return self._generators

    @property
    def size(self) -> int:
        """Number of generators held."""
        return self._generators.shape[0]

    def combination(self, coefficients: np.ndarray) -> np.ndarray:
        """
        Return the operator sum_j c_j Y^(j).
        """
        coefficients = np.asarray(coefficients, dtype=np.float64)
        if coefficients.shape != (self.size,):
            raise DimensionMismatchError(
                f"expected {self.size} coefficients, got shape {coefficients.shape}"
            )
        return np.tensordot(coefficients, self._generators, axes=1)

    def expectations(self, operator: np.ndarray) -> np.ndarray:
        """
        Return the real parts of tr[X Y^(j)] for every generator.
        """
        return np.einsum("ij,kji->k", operator, self._generators).real

    def __repr__(self) -> str:
        return f"OperatorBasis(dim={self.dim}, size={self.size})"

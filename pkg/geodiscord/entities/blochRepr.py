"""
Generalized Pauli representation of a two-qudit state
"""
from typing import NamedTuple, Optional

import numpy as np

from ..exceptions import DimensionMismatchError


class BlochRepr:
    """
    Reduced Bloch vectors and correlation matrix of a bipartite state.

    Attributes:

        d1 (int): dimension of the first subsystem

        d2 (int): dimension of the second (measured) subsystem

        r1 (ndarray): Bloch vector of the first reduced state, length d1^2-1

        r2 (ndarray): Bloch vector of the second reduced state, length d2^2-1

        T (ndarray): correlation matrix, shape (d1^2-1, d2^2-1)

    """

    def __init__(self, d1: int, d2: int, r1: np.ndarray, r2: np.ndarray, T: np.ndarray):
        self.d1 = int(d1)
        self.d2 = int(d2)
        self.r1 = np.array(r1, dtype=np.float64)
        self.r2 = np.array(r2, dtype=np.float64)
        self.T = np.array(T, dtype=np.float64)

        n1, n2 = self.d1 ** 2 - 1, self.d2 ** 2 - 1
        if self.r1.shape != (n1,) or self.r2.shape != (n2,) or self.T.shape != (n1, n2):
            raise DimensionMismatchError(
                f"inconsistent shapes for d1={self.d1}, d2={self.d2}: "
                f"r1 {self.r1.shape}, r2 {self.r2.shape}, T {self.T.shape}"
            )
        for arr in (self.r1, self.r2, self.T):
            arr.setflags(write=False)

    @property
    def r1_norm_sq(self) -> float:
        return float(self.r1 @ self.r1)

    @property
    def r2_norm_sq(self) -> float:
        return float(self.r2 @ self.r2)

    @property
    def tt(self) -> np.ndarray:
        """T^t T on R^(d2^2-1)."""
        return self.T.T @ self.T

    @property
    def trace_tt(self) -> float:
        return float(np.sum(self.T * self.T))

    def purity_combination(self) -> float:
        """
        Left side of the purity inequality; it never exceeds
        (d1 d2 - 1)/(d1 d2) and equals it for pure states.
        """
        dd = self.d1 * self.d2
        return (
            (self.d1 - 1) / dd * self.r1_norm_sq
            + (self.d2 - 1) / dd * self.r2_norm_sq
            + 0.25 * self.trace_tt
        )

    def purity_ceiling(self) -> float:
        dd = self.d1 * self.d2
        return (dd - 1) / dd

    def equal_dim_combination(self) -> Optional[float]:
        """
        ||r1||^2 + ||r2||^2 + d^2/(4(d-1)) tr[T^t T], bounded by d+1 when d1 = d2 = d.
        None when the dimensions differ.
        """
        if self.d1 != self.d2:
            return None
        d = self.d1
        return self.r1_norm_sq + self.r2_norm_sq + d ** 2 / (4 * (d - 1)) * self.trace_tt

    def __repr__(self) -> str:
        return f"BlochRepr(d1={self.d1}, d2={self.d2})"


class Reconstruction(NamedTuple):
    """
    Operator assembled from a representation.

    Attributes:

        state (DensityMatrix): the assembled operator (not validated)

        is_state (bool): False when the operator is not positive semidefinite

        min_eigenvalue (float): smallest eigenvalue of the operator

    """

    state: "object"
    is_state: bool
    min_eigenvalue: float


class CorrelationNormReport(NamedTuple):
    """
    Norm relations of the correlation matrix.

    Attributes:

        operator_norm (float): largest singular value ||T||_0

        operator_norm_bound (float or None): 2(d-1)/d, None when d1 != d2

        operator_norm_ok (bool or None): ||T||_0 <= bound within 1e-9

        trace_tt (float): tr[T^t T]

        purity_combination (float): left side of the general purity inequality

        purity_ceiling (float): (d1 d2 - 1)/(d1 d2)

        purity_ok (bool): combination <= ceiling within 1e-9

        equal_dim_combination (float or None): left side of the d1 = d2 inequality

        equal_dim_ceiling (float or None): d + 1

        equal_dim_ok (bool or None): combination <= d + 1 within 1e-9

    """

    operator_norm: float
    operator_norm_bound: Optional[float]
    operator_norm_ok: Optional[bool]
    trace_tt: float
    purity_combination: float
    purity_ceiling: float
    purity_ok: bool
    equal_dim_combination: Optional[float]
    equal_dim_ceiling: Optional[float]
    equal_dim_ok: Optional[bool]


class ScalarProductCheck(NamedTuple):
    """
    Scalar product of the Bloch vectors of two states of the same dimension

    Attributes:

        scalar_product (float): r . r~

        lower_bound (float): -1/(d-1)

        overlap (float): tr[rho rho~] = 1/d + (d-1)/d r . r~

        within_bound (bool): r . r~ >= -1/(d-1) within 1e-9

        saturated (bool or None): for orthogonal states (overlap 0), r . r~ == -1/(d-1) within 1e-9

    """

    scalar_product: float
    lower_bound: float
    overlap: float
    within_bound: bool
    saturated: Optional[bool]

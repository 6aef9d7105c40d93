"""
Density matrix class module
"""
from typing import List, Optional, Sequence

import numpy as np

from ..exceptions import DimensionMismatchError, InvalidStateError
from .modelConstants import ModelConstants


def density_violations(matrix: np.ndarray, tol: float = ModelConstants.STATE_TOL) -> List[str]:
    """
    Return the violated density-matrix invariants of ``matrix`` (empty if none).

    Arguments:

        matrix (ndarray): square complex matrix

        tol (float): tolerance for hermiticity, unit trace and the eigenvalue floor

    Returns:

        violations (list): one message per violated invariant

    """
    if not np.all(np.isfinite(matrix)):
        bad = int(np.count_nonzero(~np.isfinite(matrix)))
        return [f"finite: {bad} entries are NaN or infinite"]

    violations = []
    hermitian_dev = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if hermitian_dev > tol:
        violations.append(f"hermitian: max |rho - rho^dagger| = {hermitian_dev:.3e} > {tol:.0e}")

    trace = np.trace(matrix)
    trace_dev = abs(trace - 1.0)
    if trace_dev > tol:
        violations.append(f"trace: |tr[rho] - 1| = {trace_dev:.3e} > {tol:.0e}")

    min_eig = float(np.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))[0])
    if min_eig < -tol:
        violations.append(f"positive: minimal eigenvalue {min_eig:.3e} < -{tol:.0e}")

    return violations


class DensityMatrix:
    """
    Complex Hermitian, positive semidefinite, trace-one matrix together with
    the dimensions of its subsystems.

    ```
    rho = DensityMatrix(np.eye(4) / 4, dims=[2, 2])
    ```

    Attributes:

        matrix (ndarray): the matrix, read only

        dims (tuple): subsystem dimensions, their product is the matrix order

    """

    def __init__(
        self,
        matrix: np.ndarray,
        dims: Optional[Sequence[int]] = None,
        validate: bool = True,
    ):
        m = np.array(matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"density matrix must be square, got shape {m.shape}")

        if dims is None:
            dims = (m.shape[0],)
        dims = tuple(int(d) for d in dims)
        if int(np.prod(dims)) != m.shape[0]:
            raise DimensionMismatchError(
                f"product of dims {list(dims)} does not match matrix order {m.shape[0]}"
            )

        if validate:
            violations = density_violations(m)
            if violations:
                raise InvalidStateError(
                    "matrix is not a valid density matrix: " + "; ".join(violations),
                    violations,
                )

        m.setflags(write=False)
        self._matrix = m
        self._dims = dims

    @classmethod
    def from_vector(cls, psi: np.ndarray, dims: Optional[Sequence[int]] = None) -> "DensityMatrix":
        """
        Build the rank-one state |psi><psi| of a normalised vector.
        """
        psi = np.asarray(psi, dtype=np.complex128).ravel()
        psi = psi / np.linalg.norm(psi)
        return cls(np.outer(psi, psi.conj()), dims)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dims(self) -> tuple:
        return self._dims

    @property
    def order(self) -> int:
        return self._matrix.shape[0]

    @property
    def is_bipartite(self) -> bool:
        return len(self._dims) == 2

    def violations(self) -> List[str]:
        return density_violations(self._matrix)

    def is_valid(self) -> bool:
        return not self.violations()

    def __repr__(self) -> str:
        return f"DensityMatrix(dims={list(self._dims)})"

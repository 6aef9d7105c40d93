"""
Generalized Pauli representation

    rho = I/(d1 d2) + sqrt((d1-1)/(2 d1)) (r1.Y) (x) I/d2 + sqrt((d2-1)/(2 d2)) I/d1 (x) (r2.Y)
          + 1/4 sum_ij T_ij Y_i (x) Y_j
"""
from typing import Optional

import numpy as np

from ..entities.blochRepr import BlochRepr, Reconstruction
from ..entities.densityMatrix import DensityMatrix
from ..entities.modelConstants import ModelConstants
from ..entities.operatorBasis import OperatorBasis
from ..exceptions import DimensionMismatchError
from ..initialize.gell_mann_basis import gell_mann_basis
from .partial_trace import as_tensor


def _bases(d1: int, d2: int, basis_a: Optional[OperatorBasis], basis_b: Optional[OperatorBasis]):
    basis_a = gell_mann_basis(d1) if basis_a is None else basis_a
    basis_b = gell_mann_basis(d2) if basis_b is None else basis_b
    if basis_a.dim != d1 or basis_b.dim != d2:
        raise DimensionMismatchError(
            f"bases of dimensions ({basis_a.dim}, {basis_b.dim}) for dims [{d1}, {d2}]"
        )
    return basis_a, basis_b


def extract(
    rho: DensityMatrix,
    basis_a: Optional[OperatorBasis] = None,
    basis_b: Optional[OperatorBasis] = None,
) -> BlochRepr:
    """
    Function to compute (r1, r2, T) of a bipartite state

    Arguments:

        rho (DensityMatrix): state on d1 (x) d2

        basis_a (OperatorBasis): generators of the first subsystem

        basis_b (OperatorBasis): generators of the second subsystem

    Returns:

        representation (BlochRepr): Bloch vectors of both reduced states and T_ij = tr[rho Y_i (x) Y_j]

    """
    r4 = as_tensor(rho)
    d1, d2 = rho.dims
    basis_a, basis_b = _bases(d1, d2, basis_a, basis_b)
    ga, gb = basis_a.generators, basis_b.generators

    rho1 = np.einsum("ajbj->ab", r4)
    rho2 = np.einsum("iaib->ab", r4)
    r1 = np.sqrt(d1 / (2.0 * (d1 - 1))) * basis_a.expectations(rho1)
    r2 = np.sqrt(d2 / (2.0 * (d2 - 1))) * basis_b.expectations(rho2)
    T = np.einsum("abce,ica,jeb->ij", r4, ga, gb).real

    return BlochRepr(d1, d2, r1, r2, T)


def reconstruct(
    representation: BlochRepr,
    basis_a: Optional[OperatorBasis] = None,
    basis_b: Optional[OperatorBasis] = None,
) -> Reconstruction:
    """
    Function to assemble the operator of a representation

    Not every (r1, r2, T) describes a state, so the result is flagged rather
    than rejected when it fails to be positive semidefinite.

    Arguments:

        representation (BlochRepr): (r1, r2, T)

        basis_a (OperatorBasis): generators of the first subsystem

        basis_b (OperatorBasis): generators of the second subsystem

    Returns:

        reconstruction (Reconstruction): operator, positivity flag and minimal eigenvalue

    """
    d1, d2 = representation.d1, representation.d2
    basis_a, basis_b = _bases(d1, d2, basis_a, basis_b)

    local_a = np.sqrt((d1 - 1) / (2.0 * d1)) * basis_a.combination(representation.r1)
    local_b = np.sqrt((d2 - 1) / (2.0 * d2)) * basis_b.combination(representation.r2)
    corr = np.einsum(
        "ij,iab,jce->acbe", representation.T, basis_a.generators, basis_b.generators
    ).reshape(d1 * d2, d1 * d2)

    matrix = (
        np.eye(d1 * d2) / (d1 * d2)
        + np.kron(local_a, np.eye(d2)) / d2
        + np.kron(np.eye(d1), local_b) / d1
        + 0.25 * corr
    )
    min_eigenvalue = float(np.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))[0])
    state = DensityMatrix(matrix, [d1, d2], validate=False)
    return Reconstruction(state, min_eigenvalue >= -ModelConstants.STATE_TOL, min_eigenvalue)

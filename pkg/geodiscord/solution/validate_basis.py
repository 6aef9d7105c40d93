from typing import List, Tuple

import numpy as np

from ..entities.modelConstants import ModelConstants
from ..entities.operatorBasis import BasisViolation, OperatorBasis


def validate_basis(basis: OperatorBasis, tol: float = ModelConstants.BASIS_TOL) -> List[BasisViolation]:
    """
    Function to check the generator axioms of an operator basis

    Checks the generator count d^2-1, hermiticity, tracelessness, that no
    generator vanishes and tr[Y_i Y_j] = 2 delta_ij.

    Arguments:

        basis (OperatorBasis): basis to check

        tol (float): tolerance of every check

    Returns:

        violations (list): BasisViolation entries, empty when the basis is valid

    """
    gens = basis.generators
    d = basis.dim
    violations = []

    expected = d * d - 1
    if basis.size != expected:
        violations.append(BasisViolation("count", (), float(abs(basis.size - expected))))

    for i, g in enumerate(gens):
        herm = float(np.max(np.abs(g - g.conj().T)))
        if herm > tol:
            violations.append(BasisViolation("hermitian", (i,), herm))
        trace = float(abs(np.trace(g)))
        if trace > tol:
            violations.append(BasisViolation("traceless", (i,), trace))
        if np.linalg.norm(g) <= tol:
            violations.append(BasisViolation("nonzero", (i,), float(np.linalg.norm(g))))

    gram = np.einsum("iab,jba->ij", gens, gens)
    deviation = np.abs(gram - 2.0 * np.eye(basis.size))
    for i, j in zip(*np.nonzero(deviation > tol)):
        if i <= j:
            violations.append(BasisViolation("normalization", (int(i), int(j)), float(deviation[i, j])))

    return violations


def casimir(basis: OperatorBasis) -> Tuple[float, float]:
    """
    Return (2(d^2-1)/d, max deviation of sum_i Y_i^2 from that multiple of the identity).
    """
    d = basis.dim
    coefficient = 2.0 * (d * d - 1) / d
    total = np.einsum("iab,ibc->ac", basis.generators, basis.generators)
    return coefficient, float(np.max(np.abs(total - coefficient * np.eye(d))))


def operator_norm_range(d: int) -> Tuple[float, float]:
    """Range [sqrt(2/d), sqrt(2(d-1)/d)] of ||r.Y||_0 for unit r."""
    return float(np.sqrt(2.0 / d)), float(np.sqrt(2.0 * (d - 1) / d))


def operator_norm_ratio(r: np.ndarray, basis: OperatorBasis) -> float:
    """
    ||r.Y||_0 / ||r|| with ||.||_0 the largest absolute eigenvalue.
    """
    r = np.asarray(r, dtype=np.float64)
    eigenvalues = np.linalg.eigvalsh(basis.combination(r))
    return float(np.max(np.abs(eigenvalues)) / np.linalg.norm(r))

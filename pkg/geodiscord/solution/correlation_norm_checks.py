import numpy as np

from ..entities.blochRepr import BlochRepr, CorrelationNormReport, ScalarProductCheck
from ..entities.densityMatrix import DensityMatrix
from ..entities.modelConstants import ModelConstants
from ..exceptions import DimensionMismatchError
from .bloch_vector import bloch_vector
from .hermitian_eigensystem import hermitian_eigensystem


def correlation_norm_checks(representation: BlochRepr, tol: float = ModelConstants.BOUND_TOL) -> CorrelationNormReport:
    """
    Function to check the norm relations of a representation

    The operator norm bound 2(d-1)/d and the d+1 ceiling only apply when
    d1 = d2 = d; otherwise those fields are None.

    Arguments:

        representation (BlochRepr): (r1, r2, T)

        tol (float): slack of every inequality

    Returns:

        report (CorrelationNormReport): norms and pass flags

    """
    tt_values = hermitian_eigensystem(representation.tt).values
    operator_norm = float(np.sqrt(max(tt_values[0], 0.0)))

    purity_combination = representation.purity_combination()
    purity_ceiling = representation.purity_ceiling()

    if representation.d1 == representation.d2:
        d = representation.d1
        norm_bound = 2.0 * (d - 1) / d
        norm_ok = operator_norm <= norm_bound + tol
        equal_dim = representation.equal_dim_combination()
        equal_ceiling = float(d + 1)
        equal_ok = equal_dim <= equal_ceiling + tol
    else:
        norm_bound = norm_ok = equal_dim = equal_ceiling = equal_ok = None

    return CorrelationNormReport(
        operator_norm=operator_norm,
        operator_norm_bound=norm_bound,
        operator_norm_ok=norm_ok,
        trace_tt=representation.trace_tt,
        purity_combination=purity_combination,
        purity_ceiling=purity_ceiling,
        purity_ok=purity_combination <= purity_ceiling + tol,
        equal_dim_combination=equal_dim,
        equal_dim_ceiling=equal_ceiling,
        equal_dim_ok=equal_ok,
    )


def bloch_scalar_product_check(
    rho: DensityMatrix, rho_other: DensityMatrix, tol: float = ModelConstants.BOUND_TOL
) -> ScalarProductCheck:
    """
    Compare r . r~ with its lower bound -1/(d-1), reached by orthogonal states.
    """
    if rho.order != rho_other.order:
        raise DimensionMismatchError(f"orders differ: {rho.order} vs {rho_other.order}")
    d = rho.order
    product = float(bloch_vector(rho) @ bloch_vector(rho_other))
    overlap = float(np.real(np.vdot(rho.matrix, rho_other.matrix)))
    lower = -1.0 / (d - 1)
    saturated = abs(product - lower) <= tol if abs(overlap) <= tol else None
    return ScalarProductCheck(product, lower, overlap, product >= lower - tol, saturated)

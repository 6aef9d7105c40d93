"""
Exact geometric discord

Measurement is on the second subsystem. With eta_1 >= eta_2 >= ... the
eigenvalues of G, the discord is sum_{n >= d2} eta_n = tr[G] - sum_{n < d2} eta_n.
"""
import logging
from typing import Optional

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.discordResult import DiscordResult
from ..entities.modelConstants import ModelConstants
from ..entities.operatorBasis import OperatorBasis
from ..exceptions import ContractViolationError, InvalidDimensionError, InvalidStateError, PreconditionError
from .entanglement import concurrence_pure, negativity
from .g_operator import g_operator
from .hermitian_eigensystem import hermitian_eigensystem
from .local_operations import swap_subsystems
from .pauli_representation import extract

logger = logging.getLogger(__name__)

FORMULA_TOL = 1e-12


def require_state(rho: DensityMatrix) -> None:
    """
    Raise unless ``rho`` is a valid bipartite density matrix.
    """
    if not rho.is_bipartite:
        raise PreconditionError(f"bipartite state required, got dims {list(rho.dims)}")
    violations = rho.violations()
    if violations:
        raise InvalidStateError("invalid state: " + "; ".join(violations), violations)


def geometric_discord(
    rho: DensityMatrix,
    basis_a: Optional[OperatorBasis] = None,
    basis_b: Optional[OperatorBasis] = None,
) -> DiscordResult:
    """
    Function to compute the geometric discord of a bipartite state

    Arguments:

        rho (DensityMatrix): valid state on d1 (x) d2

        basis_a (OperatorBasis): generators of the first subsystem

        basis_b (OperatorBasis): generators of the second subsystem

    Returns:

        result (DiscordResult): value, spectrum of G and both forms of the formula

    """
    require_state(rho)
    representation = extract(rho, basis_a, basis_b)
    d2 = representation.d2

    G = g_operator(representation)
    eta = hermitian_eigensystem(G).values
    if eta[-1] < -ModelConstants.STATE_TOL:
        raise ContractViolationError(f"G is not positive semidefinite (eigenvalue {eta[-1]:.3e})")

    trace_g = float(np.trace(G))
    leading = float(np.sum(eta[: d2 - 1]))
    trailing = float(np.sum(eta[d2 - 1:]))
    if abs((trace_g - leading) - trailing) > FORMULA_TOL:
        raise ContractViolationError(
            f"discord forms disagree: tr[G] - leading = {trace_g - leading:.15e}, trailing = {trailing:.15e}"
        )

    value = max(trailing, 0.0)
    ceiling = (d2 - 1) / d2
    if value > ceiling + ModelConstants.STATE_TOL:
        raise ContractViolationError(f"discord {value:.12f} exceeds the ceiling {ceiling:.12f}")

    degenerate = bool(abs(eta[d2 - 2] - eta[d2 - 1]) < ModelConstants.DEGENERACY_TOL)
    logger.debug("discord %.12g for dims %s (degenerate=%s)", value, list(rho.dims), degenerate)

    return DiscordResult(
        value=value,
        g_eigenvalues=eta,
        trace_g=trace_g,
        formula_terms=(trace_g, leading),
        degenerate=degenerate,
        representation=representation,
        g_matrix=G,
    )


def left_geometric_discord(rho: DensityMatrix) -> DiscordResult:
    """
    Discord with the measurement on the first subsystem.
    """
    require_state(rho)
    return geometric_discord(swap_subsystems(rho))


def pure_two_qubit_discord(psi: DensityMatrix) -> float:
    """
    Function to compute C^2/2 for a pure two-qubit state

    Arguments:

        psi (DensityMatrix): pure state on 2 (x) 2

    Returns:

        discord (float): half the squared concurrence, equal to 2 N^2

    """
    if tuple(psi.dims) != (2, 2):
        raise PreconditionError(f"two-qubit state required, got dims {list(psi.dims)}")
    c = concurrence_pure(psi)
    value = 0.5 * c * c

    n = negativity(psi)
    if abs(value - 2.0 * n * n) > 1e-10:
        raise ContractViolationError(f"C^2/2 = {value:.12g} differs from 2N^2 = {2 * n * n:.12g}")
    return value


def maximally_entangled_discord(d1: int, d2: int) -> float:
    """
    (m-1)/m with m = min(d1, d2), the discord of a maximally entangled pure state.
    """
    for d in (d1, d2):
        if int(d) != d or d < 2:
            raise InvalidDimensionError(f"subsystem dimensions must be integers >= 2, got {d}")
    m = min(int(d1), int(d2))
    return (m - 1) / m

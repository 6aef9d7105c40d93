"""
Closest quantum-classical candidate

For the optimal frame {y_k} (aligned with the d2-1 leading eigenvectors of G)
the inner optimum is

    alpha_k     = 1/d2 + ((d2-1)/d2) r2 . y_k
    alpha_k x_k = r1/d2 + s * 1/2 sqrt(d1 (d2-1) / (d2 (d1-1))) T y_k

and chi = sum_k A_k (x) P_k with

    A_k = alpha_k I/d1 + sqrt((d1-1)/(2 d1)) (alpha_k x_k) . Y
    P_k = I/d2 + sqrt((d2-1)/(2 d2)) y_k . Y

Both signs s = +1, -1 are evaluated and the closer chi is kept.
"""
import logging
from typing import Optional

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.discordResult import ClosestStateResult
from ..entities.modelConstants import ModelConstants
from ..entities.operatorBasis import OperatorBasis
from ..initialize.aligned_frame import aligned_frame
from ..initialize.gell_mann_basis import gell_mann_basis
from .geometric_discord import geometric_discord
from .hermitian_eigensystem import hermitian_eigensystem
from .purity import hs_distance_sq

logger = logging.getLogger(__name__)

PROJECTOR_TOL = 1e-8


def _projectors_valid(projectors: np.ndarray) -> bool:
    # P_j P_k = delta_jk P_k with unit trace
    for j, p in enumerate(projectors):
        if abs(np.trace(p).real - 1.0) > PROJECTOR_TOL:
            return False
        for k, q in enumerate(projectors):
            target = p if j == k else 0.0
            if np.max(np.abs(p @ q - target)) > PROJECTOR_TOL:
                return False
    return True


def _candidate(rho, representation, Y, sign, basis_a, basis_b):
    d1, d2 = representation.d1, representation.d2
    r1, r2, T = representation.r1, representation.r2, representation.T

    alphas = 1.0 / d2 + (d2 - 1) / d2 * (Y @ r2)
    scale = 0.5 * np.sqrt(d1 * (d2 - 1) / (d2 * (d1 - 1)))
    alpha_x = r1[None, :] / d2 + sign * scale * (Y @ T.T)

    coeff_a = np.sqrt((d1 - 1) / (2.0 * d1))
    coeff_b = np.sqrt((d2 - 1) / (2.0 * d2))
    local_a = [a * np.eye(d1) / d1 + coeff_a * basis_a.combination(ax) for a, ax in zip(alphas, alpha_x)]
    projectors = np.array([np.eye(d2) / d2 + coeff_b * basis_b.combination(y) for y in Y])

    chi = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for a_k, p_k in zip(local_a, projectors):
        chi += np.kron(a_k, p_k)
    chi = DensityMatrix(chi, [d1, d2], validate=False)

    sigma_min = []
    for a, a_k in zip(alphas, local_a):
        min_eig = float(np.linalg.eigvalsh(a_k)[0])
        sigma_min.append(min_eig / a if a > ModelConstants.WEIGHT_TOL else min_eig)

    return chi, hs_distance_sq(rho, chi), alphas, sigma_min, projectors


def closest_qc_state(
    rho: DensityMatrix,
    basis_a: Optional[OperatorBasis] = None,
    basis_b: Optional[OperatorBasis] = None,
) -> ClosestStateResult:
    """
    Function to build the quantum-classical state attaining the discord formula

    For d2 = 2 the candidate is a genuine quantum-classical state at distance
    equal to the discord. For d2 > 2 the optimal frame need not consist of
    Bloch vectors of orthogonal pure states, which the positivity and
    projector diagnostics expose.

    Arguments:

        rho (DensityMatrix): valid bipartite state

        basis_a (OperatorBasis): generators of the first subsystem

        basis_b (OperatorBasis): generators of the second subsystem

    Returns:

        result (ClosestStateResult): candidate chi with its feasibility diagnostics

    """
    d1, d2 = rho.dims
    basis_a = gell_mann_basis(d1) if basis_a is None else basis_a
    basis_b = gell_mann_basis(d2) if basis_b is None else basis_b

    discord = geometric_discord(rho, basis_a, basis_b)
    representation = discord.representation
    frame = aligned_frame(hermitian_eigensystem(discord.g_matrix), d2)

    candidates = {
        sign: _candidate(rho, representation, frame.vectors, sign, basis_a, basis_b)
        for sign in (1, -1)
    }
    distances = {sign: c[1] for sign, c in candidates.items()}
    sign = 1 if distances[1] <= distances[-1] else -1
    chi, distance, alphas, sigma_min, projectors = candidates[sign]

    projectors_ok = _projectors_valid(projectors)
    feasible = bool(
        np.all(alphas >= -ModelConstants.STATE_TOL)
        and min(sigma_min) >= -ModelConstants.SIGMA_PSD_TOL
        and projectors_ok
    )
    if not feasible:
        logger.info(
            "closest candidate for dims %s is not quantum-classical (min sigma eigenvalue %.3e, projectors %s)",
            list(rho.dims), min(sigma_min), projectors_ok,
        )

    return ClosestStateResult(
        chi=chi,
        achieved_distance_sq=distance,
        sigma_positivity=sigma_min,
        alphas=alphas,
        feasible=feasible,
        projectors_valid=projectors_ok,
        sign=sign,
        distances_by_sign=distances,
        degenerate=discord.degenerate,
    )

"""
Brute-force geometric discord: the minimum of the disturbance over
measurement bases of the second subsystem.

d2 = 2: exhaustive grid over the Bloch hemisphere followed by a Nelder-Mead
polish of the two angles.
d2 >= 3: restarted random local descent on the unitary group. Restart 0
starts from the eigenbasis of the reduced state rho_2, restart 1 from the
computational basis and the rest from Haar-random unitaries; restart r draws
from default_rng([seed, r]), so a longer schedule extends a shorter one.
"""
import logging
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize as scipy_minimize

from ..entities.densityMatrix import DensityMatrix
from ..entities.oracleConfig import OracleConfig
from ..entities.oracleResult import OracleComparison, OracleResult
from ..exceptions import ContractViolationError
from ..initialize.random_states import random_unitary
from .closest_qc_state import closest_qc_state
from .dephase import disturbance_batch
from .geometric_discord import geometric_discord, require_state
from .hermitian_eigensystem import hermitian_eigensystem
from .partial_trace import partial_trace
from .purity import purity

logger = logging.getLogger(__name__)

GAP_TOL = 1e-6
INITIAL_STEP = 0.3
STEP_GROWTH = 1.2
REJECT_STREAK = 8
REORTHONORMALIZE_EVERY = 100
IMPROVEMENT_WINDOW = 50


def qubit_bases(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """
    Unitaries whose first column is the Bloch-sphere point (theta, phi).
    """
    theta = np.atleast_1d(theta)
    phi = np.atleast_1d(phi)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    bases = np.empty((theta.size, 2, 2), dtype=np.complex128)
    bases[:, 0, 0] = c
    bases[:, 1, 0] = np.exp(1j * phi) * s
    bases[:, 0, 1] = -np.exp(-1j * phi) * s
    bases[:, 1, 1] = c
    return bases


def _unitary_polish(U: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(U)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def _qubit_search(rho: DensityMatrix, config: OracleConfig) -> OracleResult:
    theta = np.arange(0.0, np.pi / 2 + 0.5 * config.grid_resolution, config.grid_resolution)
    phi = np.arange(0.0, 2 * np.pi, config.grid_resolution)
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    values = disturbance_batch(rho, qubit_bases(tt.ravel(), pp.ravel()))
    best = int(np.argmin(values))
    start = np.array([tt.ravel()[best], pp.ravel()[best]])

    def objective(angles):
        return float(disturbance_batch(rho, qubit_bases(angles[0], angles[1]))[0])

    scale = purity(rho)
    res = scipy_minimize(
        objective,
        start,
        method="Nelder-Mead",
        options={
            "xatol": 1e-10,
            "fatol": config.tol * scale,
            "maxiter": config.max_iters,
            "initial_simplex": np.array(
                [start, start + [config.grid_resolution, 0.0], start + [0.0, config.grid_resolution]]
            ),
        },
    )

    if res.fun < values[best]:
        value, angles = float(res.fun), res.x
    else:
        value, angles = float(values[best]), start
    logger.debug("qubit grid %.3e, polished %.3e (%s)", values[best], res.fun, res.message)

    return OracleResult(
        value=value,
        best_basis=qubit_bases(angles[0], angles[1])[0],
        restarts_used=1,
        converged=bool(res.success),
        per_restart_values=[value],
        per_restart_iterations=[int(res.nit)],
    )


def _descent(
    rho: DensityMatrix, U: np.ndarray, rng: np.random.Generator, config: OracleConfig
) -> Tuple[float, np.ndarray, bool, int]:
    d2 = U.shape[0]

    def f(V):
        return float(disturbance_batch(rho, V[None])[0])

    value = f(U)
    window_start = value
    step = INITIAL_STEP
    rejects = 0
    for iteration in range(config.max_iters):
        if step < config.min_step or value == 0.0:
            return value, U, True, iteration

        X = rng.standard_normal((d2, d2)) + 1j * rng.standard_normal((d2, d2))
        H = 0.5 * (X + X.conj().T)
        H /= np.linalg.norm(H)
        candidate = U @ expm(1j * step * H)
        candidate_value = f(candidate)

        if candidate_value < value:
            U, value = candidate, candidate_value
            step *= STEP_GROWTH
            rejects = 0
        else:
            rejects += 1
            if rejects >= REJECT_STREAK:
                step *= 0.5
                rejects = 0

        if (iteration + 1) % REORTHONORMALIZE_EVERY == 0:
            U = _unitary_polish(U)
            value = f(U)

        # relative improvement over the last window
        if (iteration + 1) % IMPROVEMENT_WINDOW == 0:
            if window_start - value <= config.tol * window_start:
                return value, U, True, iteration + 1
            window_start = value

    return value, U, step < config.min_step or value == 0.0, config.max_iters


def _start_basis(rho: DensityMatrix, restart: int, rng: np.random.Generator) -> np.ndarray:
    d2 = rho.dims[1]
    if restart == 0:
        return hermitian_eigensystem(partial_trace(rho, 2).matrix).vectors.astype(np.complex128)
    if restart == 1:
        return np.eye(d2, dtype=np.complex128)
    return random_unitary(d2, rng)


def _unitary_search(rho: DensityMatrix, config: OracleConfig) -> OracleResult:
    best_value, best_basis = np.inf, None
    per_restart, iterations, converged = [], [], True

    for restart in range(config.restarts):
        rng = np.random.default_rng([config.seed, restart])
        U0 = _start_basis(rho, restart, rng)
        value, U, ok, n_iter = _descent(rho, U0, rng, config)
        per_restart.append(value)
        iterations.append(n_iter)
        converged = converged and ok
        logger.debug("restart %d: %.12g (converged=%s)", restart, value, ok)
        if value < best_value:
            best_value, best_basis = value, U

    return OracleResult(
        value=float(best_value),
        best_basis=best_basis,
        restarts_used=config.restarts,
        converged=converged,
        per_restart_values=per_restart,
        per_restart_iterations=iterations,
    )


def minimize(rho: DensityMatrix, config: Optional[OracleConfig] = None) -> OracleResult:
    """
    Function to minimise the distance to quantum-classical states numerically

    Arguments:

        rho (DensityMatrix): valid bipartite state

        config (OracleConfig): search settings, defaults when omitted

    Returns:

        result (OracleResult): best disturbance found and the basis attaining it

    """
    require_state(rho)
    config = OracleConfig() if config is None else config

    if rho.dims[1] == 2:
        result = _qubit_search(rho, config)
    else:
        result = _unitary_search(rho, config)

    if not result.converged:
        logger.warning(
            "oracle for dims %s stopped on max_iters=%d before converging",
            list(rho.dims), config.max_iters,
        )
    logger.info("oracle value %.12g for dims %s", result.value, list(rho.dims))
    return result


def compare(
    rho: DensityMatrix, config: Optional[OracleConfig] = None, strict: bool = True
) -> OracleComparison:
    """
    Function to set the exact formula against the oracle

    Arguments:

        rho (DensityMatrix): valid bipartite state

        config (OracleConfig): oracle settings

        strict (bool): raise ContractViolationError when the oracle falls more
            than 1e-6 below the formula

    Returns:

        comparison (OracleComparison): formula, oracle, gap and closest-state diagnostics

    """
    formula = geometric_discord(rho).value
    oracle_result = minimize(rho, config)
    gap = oracle_result.value - formula

    if gap < -GAP_TOL:
        message = f"oracle {oracle_result.value:.12g} is below the formula {formula:.12g} (gap {gap:.3e})"
        if strict:
            raise ContractViolationError(message)
        logger.warning(message)

    return OracleComparison(
        formula=formula,
        oracle=oracle_result.value,
        gap=gap,
        oracle_result=oracle_result,
        feasibility=closest_qc_state(rho),
        upper_bound_only=rho.dims[1] >= 4,
    )

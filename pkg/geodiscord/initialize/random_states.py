"""
Seeded generators of test states.

Every generator takes its seed explicitly and builds a fresh
``numpy.random.Generator`` from it, so identical seeds give identical output
and no random state is shared between calls.
"""
from typing import List, Tuple

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..exceptions import InvalidDimensionError, PreconditionError
from .separable_mixture import separable_mixture


def _check_dims(*dims: int) -> None:
    for d in dims:
        if int(d) != d or d < 2:
            raise InvalidDimensionError(f"subsystem dimensions must be integers >= 2, got {d}")


def _ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """
    Haar-distributed unitary of order d (QR of a Ginibre matrix with the
    phases of R's diagonal moved into Q).
    """
    q, r = np.linalg.qr(_ginibre(d, d, rng))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def _random_density(n: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    g = _ginibre(n, rank, rng)
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def random_pure(d1: int, d2: int, seed: int) -> DensityMatrix:
    """
    Rank-one state drawn from the unitarily invariant measure on d1*d2 vectors.
    """
    _check_dims(d1, d2)
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(d1 * d2) + 1j * rng.standard_normal(d1 * d2)
    return DensityMatrix.from_vector(psi, [d1, d2])


def random_mixed(d1: int, d2: int, rank: int, seed: int) -> DensityMatrix:
    """
    Ginibre-induced state G G^dagger / tr[G G^dagger] with G of shape (d1 d2, rank).
    """
    _check_dims(d1, d2)
    n = d1 * d2
    if int(rank) != rank or not 1 <= rank <= n:
        raise PreconditionError(f"rank must be an integer in [1, {n}], got {rank}")
    rng = np.random.default_rng(seed)
    return DensityMatrix(_random_density(n, int(rank), rng), [d1, d2])


def random_local_state(d: int, seed: int, rank: int = None) -> DensityMatrix:
    """
    Single-qudit state; full rank unless ``rank`` is given (rank 1 is pure).
    """
    _check_dims(d)
    rank = d if rank is None else rank
    if not 1 <= rank <= d:
        raise PreconditionError(f"rank must be in [1, {d}], got {rank}")
    rng = np.random.default_rng(seed)
    return DensityMatrix(_random_density(d, int(rank), rng), [d])


def random_product_state(d1: int, d2: int, seed: int, pure: bool = True) -> DensityMatrix:
    """
    rho_A (x) rho_B with independent local factors.
    """
    components = random_separable_components(d1, d2, 1, seed, pure_components=pure)
    return separable_mixture(components, [d1, d2])


def random_separable_components(
    d1: int, d2: int, n_components: int, seed: int, pure_components: bool = False
) -> List[Tuple[float, DensityMatrix, DensityMatrix]]:
    """
    Components (beta_k, rho_A^(k), rho_B^(k)) of a random separable mixture.

    Weights are Dirichlet(1, ..., 1); local factors are pure when
    ``pure_components`` is set and full-rank Ginibre states otherwise.
    """
    _check_dims(d1, d2)
    if n_components < 1:
        raise PreconditionError("a separable mixture needs at least one component")

    rng = np.random.default_rng(seed)
    if n_components == 1:
        weights = np.ones(1)
    else:
        weights = rng.dirichlet(np.ones(n_components))
        weights = weights / weights.sum()

    components = []
    for beta in weights:
        rank_a = 1 if pure_components else d1
        rank_b = 1 if pure_components else d2
        rho_a = DensityMatrix(_random_density(d1, rank_a, rng), [d1])
        rho_b = DensityMatrix(_random_density(d2, rank_b, rng), [d2])
        components.append((float(beta), rho_a, rho_b))
    return components


def random_separable(
    d1: int, d2: int, n_components: int, seed: int, pure_components: bool = False
) -> DensityMatrix:
    components = random_separable_components(d1, d2, n_components, seed, pure_components)
    return separable_mixture(components, [d1, d2])

from typing import Optional

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..exceptions import PreconditionError
from .ghz_state import ghz_state, maximally_entangled_state
from .quantum_classical_state import quantum_classical_state
from .random_states import (
    random_local_state,
    random_mixed,
    random_product_state,
    random_pure,
    random_separable,
    random_unitary,
)

FAMILIES = ("ghz", "pure", "mixed", "separable", "qc", "product", "me")


def random_quantum_classical(d1: int, d2: int, seed: int) -> DensityMatrix:
    """
    sum_k alpha_k sigma_k (x) |k><k| with full-rank sigma_k, Dirichlet weights
    and a Haar-random basis |k>.
    """
    rng = np.random.default_rng(seed)
    sigma_seeds = rng.integers(0, 2 ** 63 - 1, size=d2)
    sigmas = [random_local_state(d1, int(s)) for s in sigma_seeds]
    alphas = rng.dirichlet(np.ones(d2))
    alphas = alphas / alphas.sum()
    return quantum_classical_state(sigmas, alphas, random_unitary(d2, rng))


def generate_state(
    family: str,
    d1: int,
    d2: int,
    seed: int,
    rank: Optional[int] = None,
    components: Optional[int] = None,
) -> DensityMatrix:
    """
    Function to draw one state of a named family

    Arguments:

        family (str): one of ghz, pure, mixed, separable, qc, product, me

        d1 (int): dimension of the first subsystem

        d2 (int): dimension of the second subsystem

        seed (int): seed of the draw, ignored by ghz and me

        rank (int): rank of mixed states, full rank when omitted

        components (int): number of terms of separable mixtures, d1*d2 when omitted

    Returns:

        rho (DensityMatrix): the state

    """
    if family == "ghz":
        if d1 != d2:
            raise PreconditionError(f"ghz needs equal dimensions, got {d1} and {d2}")
        return ghz_state(d1)
    if family == "me":
        return maximally_entangled_state(d1, d2)
    if family == "pure":
        return random_pure(d1, d2, seed)
    if family == "mixed":
        return random_mixed(d1, d2, d1 * d2 if rank is None else rank, seed)
    if family == "separable":
        return random_separable(d1, d2, d1 * d2 if components is None else components, seed)
    if family == "qc":
        return random_quantum_classical(d1, d2, seed)
    if family == "product":
        return random_product_state(d1, d2, seed)
    raise PreconditionError(f"unknown state family {family!r}; choose from {', '.join(FAMILIES)}")

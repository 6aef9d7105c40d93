"""
Result records of the discord computations
"""
from typing import List, NamedTuple, Optional

import numpy as np

from .blochRepr import BlochRepr
from .densityMatrix import DensityMatrix


class DiscordResult(NamedTuple):
    """
    Exact geometric discord of a bipartite state

    Attributes:

        value (float): the discord, sum of the trailing eigenvalues of G

        g_eigenvalues (ndarray): eigenvalues of G in descending order

        trace_g (float): tr[G]

        formula_terms (tuple): (tr[G], sum of the d2-1 leading eigenvalues)

        degenerate (bool): leading and trailing blocks touch within 1e-10

        representation (BlochRepr): representation the value was computed from

        g_matrix (ndarray): the G operator

    """

    value: float
    g_eigenvalues: np.ndarray
    trace_g: float
    formula_terms: tuple
    degenerate: bool
    representation: BlochRepr
    g_matrix: np.ndarray


class BoundsReport(NamedTuple):
    """
    Upper and lower bounds on the discord

    Attributes:

        value (float): exact value the bounds refer to

        lower_spectral (float): (tr[T^tT] - sum of d2-1 leading eigenvalues of T^tT)/4

        upper_spectral (float): min of the two correlation-spectrum upper bounds

        upper_refined (float): ((d2-1)/d2)(1 - ||r2||^2/(d2+1))

        upper_ceiling (float): (d2-1)/d2

        j1 (float): purity bound with both Bloch vectors

        j2 (float): purity bound with the correlation spectrum

        tt_eigenvalues (ndarray): eigenvalues of T^tT in descending order

    """

    value: float
    lower_spectral: float
    upper_spectral: float
    upper_refined: float
    upper_ceiling: float
    j1: float
    j2: float
    tt_eigenvalues: np.ndarray

    @property
    def tightest_upper(self) -> float:
        return min(self.upper_spectral, self.upper_refined, self.j1, self.j2)

    def brackets(self, tol: float = 1e-9) -> bool:
        """True when lower - tol <= value <= every upper bound + tol."""
        return self.lower_spectral - tol <= self.value <= self.tightest_upper + tol


class ClosestStateResult(NamedTuple):
    """
    Closest quantum-classical candidate built from the optimal frame

    Attributes:

        chi (DensityMatrix): sum_k A_k (x) P_k, not validated

        achieved_distance_sq (float): tr[(rho - chi)^2]

        sigma_positivity (list): minimal eigenvalue of every reconstructed sigma_k

        alphas (ndarray): weights alpha_k

        feasible (bool): alphas >= 0, every sigma_k and P_k a state, P_k orthogonal projectors

        projectors_valid (bool): every P_k is a rank-one orthogonal projector

        sign (int): sign of the T y_k term that gave the smaller distance (+1 or -1)

        distances_by_sign (dict): achieved distance for each sign

        degenerate (bool): optimal frame not unique

    """

    chi: DensityMatrix
    achieved_distance_sq: float
    sigma_positivity: List[float]
    alphas: np.ndarray
    feasible: bool
    projectors_valid: bool
    sign: int
    distances_by_sign: dict
    degenerate: bool


class SeparableBoundReport(NamedTuple):
    """
    Separable-state ceiling check

    Attributes:

        value (float): discord of the mixture

        ceiling (float): ((d-1)/d)^2

        within_ceiling (bool): value <= ceiling + 1e-9

        pure_product (bool): single pure product component

        zero_ok (bool or None): value == 0 within 1e-9 for pure products, None otherwise

    """

    value: float
    ceiling: float
    within_ceiling: bool
    pure_product: bool
    zero_ok: Optional[bool]

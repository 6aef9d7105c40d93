from typing import List, NamedTuple, Optional

import numpy as np


class OracleResult(NamedTuple):
    """
    Best quantum-classical distance found by direct search

    Attributes:

        value (float): minimal disturbance found, an upper bound on the discord

        best_basis (ndarray): unitary whose columns are the optimal measurement basis

        restarts_used (int): number of descents (1 for the d2 = 2 grid)

        converged (bool): every descent stopped on its tolerance, not on max_iters

        per_restart_values (list): best value of each descent, in schedule order

        per_restart_iterations (list): iterations each descent ran before stopping

    """

    value: float
    best_basis: np.ndarray
    restarts_used: int
    converged: bool
    per_restart_values: List[float]
    per_restart_iterations: List[int]


class OracleComparison(NamedTuple):
    """
    Closed-form value against the oracle

    Attributes:

        formula (float): exact-formula value

        oracle (float): oracle value

        gap (float): oracle - formula

        oracle_result (OracleResult): full oracle output

        feasibility (ClosestStateResult or None): diagnostics of the closest candidate

        upper_bound_only (bool): d2 >= 4, where the oracle may sit in a local minimum

    """

    formula: float
    oracle: float
    gap: float
    oracle_result: OracleResult
    feasibility: Optional[object]
    upper_bound_only: bool

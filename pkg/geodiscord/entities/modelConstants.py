"""
    Constants Class
"""
import math


class ModelConstants:
    """
        This class is responsible for storing the tolerances and defaults
    shared by every computation.
    """

    # generator axioms tr[Y_i Y_j] = 2 delta_ij
    BASIS_TOL = 1e-12
    # hermiticity, unit trace, eigenvalue floor of a density matrix
    STATE_TOL = 1e-10
    # simplex frame relations and projector checks
    FRAME_TOL = 1e-10
    # mixture weights must sum to one
    WEIGHT_TOL = 1e-12
    # purity == 1 test for pure-state formulas
    PURITY_TOL = 1e-8
    # eta_{d2-1} vs eta_{d2} boundary tie
    DEGENERACY_TOL = 1e-10
    # minimal eigenvalue accepted for the closest-state sigma_k
    SIGMA_PSD_TOL = 1e-8
    # Gram-Schmidt residual below which a vector is dropped
    GRAM_SCHMIDT_TOL = 1e-12
    # bound bracketing and representation inequalities
    BOUND_TOL = 1e-9

    DEFAULT_SEED = 20240601

    ORACLE_RESTARTS = 32
    ORACLE_MAX_ITERS = 2000
    ORACLE_TOL = 1e-12
    ORACLE_GRID_RESOLUTION = math.pi / 400
    ORACLE_MIN_STEP = 1e-9

    REPORT_SCHEMA_VERSION = 1
    STATE_SCHEMA_VERSION = 1

from ..exceptions import PreconditionError
from .modelConstants import ModelConstants


class OracleConfig:
    """
    Settings of the brute-force discord oracle

    ```
    config = OracleConfig(restarts=8, seed=7)
    ```

    Attributes:

        restarts (int): number of local descents for d2 >= 3

        seed (int): master seed, each restart derives its own stream from it

        grid_resolution (float): angular step (radians) of the d2 = 2 grid

        max_iters (int): iteration cap of one descent (and of the d2 = 2 polish)

        tol (float): for d2 >= 3 a descent stops once a 50-step window improves
            the value by no more than tol times its value at the window start;
            for d2 = 2 the polish fatol is tol * tr[rho^2]

        min_step (float): step size below which a descent is declared converged

    """

    def __init__(
        self,
        restarts: int = ModelConstants.ORACLE_RESTARTS,
        seed: int = ModelConstants.DEFAULT_SEED,
        grid_resolution: float = ModelConstants.ORACLE_GRID_RESOLUTION,
        max_iters: int = ModelConstants.ORACLE_MAX_ITERS,
        tol: float = ModelConstants.ORACLE_TOL,
        min_step: float = ModelConstants.ORACLE_MIN_STEP,
    ):
        if restarts < 1:
            raise PreconditionError("restarts must be at least 1.")
        if not 0 < grid_resolution < 1:
            raise PreconditionError("grid_resolution must lie in (0, 1) radians.")
        if max_iters < 1:
            raise PreconditionError("max_iters must be at least 1.")
        if tol <= 0 or min_step <= 0:
            raise PreconditionError("tol and min_step must be positive.")

        self.restarts = int(restarts)
        self.seed = int(seed)
        self.grid_resolution = float(grid_resolution)
        self.max_iters = int(max_iters)
        self.tol = float(tol)
        self.min_step = float(min_step)

    def as_dict(self) -> dict:
        return dict(self.__dict__)

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.__dict__.items())
        return f"OracleConfig({args})"

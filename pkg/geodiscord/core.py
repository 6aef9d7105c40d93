"""
This file contains the DiscordAnalysis class that runs every computation for one state.
"""
import time
import os
import logging
from typing import Dict, Optional, Union, TYPE_CHECKING

if TYPE_CHECKING:
    # Important: classes are only imported when types are checked, not in production.
    from geodiscord.entities.discordResult import BoundsReport, ClosestStateResult, DiscordResult
    from geodiscord.entities.oracleResult import OracleComparison


if os.getenv("DEVELOPMENT"):
    logging.basicConfig(level=logging.INFO)
    logging.info("Running geodiscord in development mode, debug cross-checks enabled.")

logger = logging.getLogger(__name__)


# pylint: disable=wrong-import-position
from ._version import __version__
from .entities.densityMatrix import DensityMatrix
from .entities.oracleConfig import OracleConfig
from .entities.report import DiscordReport
from .exceptions import PreconditionError
from .solution.closest_qc_state import closest_qc_state
from .solution.discord_bounds import discord_bounds
from .solution.geometric_discord import geometric_discord, require_state
from .solution.oracle import compare
from .utils.state_io import state_digest


class DiscordAnalysis:
    """
    This is the main class of geodiscord.
    It computes the geometric discord of a bipartite state together with the
    requested bounds, closest-state diagnostics and oracle comparison.

    ```
    analysis = DiscordAnalysis(ghz_state(3), oracle=True)
    analysis.run_analysis()
    analysis.get_discord_result().value  # 2/3
    ```

    Parameters:

        state (DensityMatrix): valid bipartite state, measurement on the second subsystem

        bounds (bool): evaluate the upper and lower bounds

        closest (bool): build the closest quantum-classical candidate

        oracle (bool): run the numerical oracle and compare

        oracle_config (OracleConfig): oracle settings, defaults when omitted

        strict (bool): raise when the oracle falls below the formula

    """

    __has_analysis_executed: bool = False
    __start_execution: float = 0.0
    __end_execution: float = 0.0

    def __init__(
        self,
        state: DensityMatrix,
        bounds: bool = True,
        closest: bool = False,
        oracle: bool = False,
        oracle_config: Optional[OracleConfig] = None,
        strict: bool = True,
    ) -> None:

        self.state = state
        self.bounds = bounds
        self.closest = closest
        self.oracle = oracle
        self.strict = strict
        self.oracle_config = oracle_config

        if oracle_config is None:
            self.oracle_config = OracleConfig()

        self._discord: Optional["DiscordResult"] = None
        self._bounds: Optional["BoundsReport"] = None
        self._closest: Optional["ClosestStateResult"] = None
        self._comparison: Optional["OracleComparison"] = None

    @property
    def state(self) -> DensityMatrix:
        """
        Return the analysed state
        """
        return self._state

    @state.setter
    def state(self, value: DensityMatrix) -> None:
        """
        Check that the state is a valid bipartite density matrix.
        """
        if not isinstance(value, DensityMatrix):
            raise PreconditionError("state must be a DensityMatrix.")
        require_state(value)
        self._state = value
        self.__has_analysis_executed = False

    def run_analysis(self) -> bool:
        """
        This function is responsible for executing the requested computations.

        Returns:
            True when finished
        """
        self.__start_execution = time.time()

        self._discord = geometric_discord(self.state)
        self._bounds = discord_bounds(self.state) if self.bounds else None
        self._comparison = None
        self._closest = None

        if self.oracle:
            self._comparison = compare(self.state, self.oracle_config, strict=self.strict)
            self._closest = self._comparison.feasibility
        elif self.closest:
            self._closest = closest_qc_state(self.state)

        self.__end_execution = time.time()
        self.__has_analysis_executed = True
        logger.info(
            "discord %.12g for dims %s in %.3fs",
            self._discord.value, list(self.state.dims), self.__end_execution - self.__start_execution,
        )
        return True

    def _require_executed(self) -> None:
        if not self.__has_analysis_executed:
            raise PreconditionError(
                "You cannot get results without running the analysis. "
                + "Please execute the run_analysis() method."
            )

    def get_discord_result(self) -> "DiscordResult":
        """
        Return the exact discord and the spectrum of G
        """
        self._require_executed()
        return self._discord

    def get_bounds(self) -> Optional["BoundsReport"]:
        """
        Return the bounds report (None when bounds were not requested)
        """
        self._require_executed()
        return self._bounds

    def get_closest_state(self) -> Optional["ClosestStateResult"]:
        """
        Return the closest quantum-classical candidate (None when not requested)
        """
        self._require_executed()
        return self._closest

    def get_oracle_comparison(self) -> Optional["OracleComparison"]:
        """
        Return the formula against oracle comparison (None when not requested)
        """
        self._require_executed()
        return self._comparison

    def get_report(self) -> DiscordReport:
        """
        Return every computed quantity as a DiscordReport
        """
        self._require_executed()
        return DiscordReport(
            dims=self.state.dims,
            input_digest=state_digest(self.state),
            tool_version=__version__,
            discord=self._discord,
            bounds=self._bounds,
            closest=self._closest,
            oracle=self._comparison,
            oracle_config=self.oracle_config if self.oracle else None,
        )

    def get_additional_information(self) -> Dict[str, Union[bool, float]]:
        """
        Additional run information.

        Returns:
            dict: {has_analysis_executed, execution_time}

        """
        self._require_executed()
        return {
            "has_analysis_executed": self.__has_analysis_executed,
            "execution_time": self.__end_execution - self.__start_execution,
        }

"""
Machine-readable discord report
"""
from typing import Optional

import numpy as np

from .discordResult import BoundsReport, ClosestStateResult, DiscordResult
from .modelConstants import ModelConstants
from .oracleConfig import OracleConfig
from .oracleResult import OracleComparison


def _floats(values) -> list:
    return [float(v) for v in np.ravel(values)]


class DiscordReport:
    """
    Everything computed for one state

    Attributes:

        dims (list): [d1, d2]

        input_digest (str): digest of the analysed state

        tool_version (str): package version that produced the report

        discord (DiscordResult): exact value and spectrum of G

        bounds (BoundsReport or None): bounds, when requested

        closest (ClosestStateResult or None): closest-state diagnostics, when requested

        oracle (OracleComparison or None): oracle comparison, when requested

        oracle_config (OracleConfig or None): settings of the oracle run

    """

    def __init__(
        self,
        dims,
        input_digest: str,
        tool_version: str,
        discord: DiscordResult,
        bounds: Optional[BoundsReport] = None,
        closest: Optional[ClosestStateResult] = None,
        oracle: Optional[OracleComparison] = None,
        oracle_config: Optional[OracleConfig] = None,
    ):
        self.dims = [int(d) for d in dims]
        self.input_digest = input_digest
        self.tool_version = tool_version
        self.discord = discord
        self.bounds = bounds
        self.closest = closest
        self.oracle = oracle
        self.oracle_config = oracle_config

    @property
    def value(self) -> float:
        return self.discord.value

    def to_dict(self) -> dict:
        doc = {
            "schema_version": ModelConstants.REPORT_SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
            "dims": self.dims,
            "discord": {
                "value": float(self.discord.value),
                "g_eigenvalues": _floats(self.discord.g_eigenvalues),
                "trace_g": float(self.discord.trace_g),
                "leading_sum": float(self.discord.formula_terms[1]),
                "degenerate": bool(self.discord.degenerate),
            },
        }

        if self.bounds is not None:
            b = self.bounds
            doc["bounds"] = {
                "lower_spectral": float(b.lower_spectral),
                "upper_spectral": float(b.upper_spectral),
                "upper_refined": float(b.upper_refined),
                "upper_ceiling": float(b.upper_ceiling),
                "j1": float(b.j1),
                "j2": float(b.j2),
                "tightest_upper": float(b.tightest_upper),
                "brackets": bool(b.brackets(ModelConstants.BOUND_TOL)),
            }

        if self.closest is not None:
            c = self.closest
            doc["closest_state"] = {
                "achieved_distance_sq": float(c.achieved_distance_sq),
                "sigma_positivity": _floats(c.sigma_positivity),
                "alphas": _floats(c.alphas),
                "feasible": bool(c.feasible),
                "projectors_valid": bool(c.projectors_valid),
                "sign": int(c.sign),
                "distances_by_sign": {str(k): float(v) for k, v in sorted(c.distances_by_sign.items())},
                "degenerate": bool(c.degenerate),
            }

        if self.oracle is not None:
            o = self.oracle
            doc["oracle"] = {
                "value": float(o.oracle),
                "gap": float(o.gap),
                "converged": bool(o.oracle_result.converged),
                "restarts_used": int(o.oracle_result.restarts_used),
                "per_restart_values": _floats(o.oracle_result.per_restart_values),
                "upper_bound_only": bool(o.upper_bound_only),
                "config": self.oracle_config.as_dict() if self.oracle_config is not None else None,
            }

        return doc

    def __repr__(self) -> str:
        return f"DiscordReport(dims={self.dims}, value={self.value:.12g})"

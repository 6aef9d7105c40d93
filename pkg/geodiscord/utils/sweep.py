"""
Benchmark sweeps over seeded random states.

Every cell (d1, d2, index) draws its state from a seed derived from the
master seed and its coordinates, so the table does not depend on the number
of workers or the order in which cells finish.
"""
import json
import logging
import time
from multiprocessing import Pool
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from ..entities.modelConstants import ModelConstants
from ..entities.oracleConfig import OracleConfig
from ..initialize.state_family import generate_state
from ..solution.discord_bounds import discord_bounds
from ..solution.oracle import compare
from .state_io import state_digest

logger = logging.getLogger(__name__)

COLUMNS = [
    "family", "d1", "d2", "index", "seed", "digest", "formula",
    "lower", "tightest_upper", "brackets", "oracle", "gap",
    "oracle_converged", "closest_feasible", "upper_bound_only", "runtime",
]


def cell_seed(seed: int, d1: int, d2: int, index: int) -> int:
    """Seed of one sweep cell, derived from the master seed and the cell coordinates."""
    state = np.random.SeedSequence([seed, d1, d2, index]).generate_state(1, dtype=np.uint64)
    return int(state[0]) >> 1


def _evaluate_cell(task: Tuple) -> dict:
    family, d1, d2, index, seed, config_kwargs = task
    start = time.perf_counter()
    state_seed = cell_seed(seed, d1, d2, index)
    rho = generate_state(family, d1, d2, state_seed)

    bounds = discord_bounds(rho)
    row = {
        "family": family,
        "d1": d1,
        "d2": d2,
        "index": index,
        "seed": state_seed,
        "digest": state_digest(rho),
        "formula": bounds.value,
        "lower": bounds.lower_spectral,
        "tightest_upper": bounds.tightest_upper,
        "brackets": bounds.brackets(ModelConstants.BOUND_TOL),
        "oracle": np.nan,
        "gap": np.nan,
        "oracle_converged": None,
        "closest_feasible": None,
        "upper_bound_only": d2 >= 4,
    }
    if config_kwargs is not None:
        comparison = compare(rho, OracleConfig(**config_kwargs), strict=False)
        row.update(
            oracle=comparison.oracle,
            gap=comparison.gap,
            oracle_converged=comparison.oracle_result.converged,
            closest_feasible=comparison.feasibility.feasible,
        )
    row["runtime"] = time.perf_counter() - start
    return row


def parse_dims(text: str) -> Tuple[int, int]:
    """'2x3' -> (2, 3)"""
    left, _, right = text.lower().partition("x")
    return int(left), int(right)


def run_sweep(
    dims: Iterable[Tuple[int, int]],
    count: int,
    seed: int = ModelConstants.DEFAULT_SEED,
    family: str = "mixed",
    oracle_config: Optional[OracleConfig] = None,
    use_oracle: bool = True,
    workers: int = 1,
    progress: bool = True,
) -> pd.DataFrame:
    """
    Function to evaluate the formula, bounds and oracle on many seeded states

    Arguments:

        dims (list): (d1, d2) pairs, one cell group per pair

        count (int): states per pair

        seed (int): master seed

        family (str): state family drawn in every cell

        oracle_config (OracleConfig): oracle settings

        use_oracle (bool): run the oracle comparison

        workers (int): number of worker processes

        progress (bool): show a progress bar

    Returns:

        table (DataFrame): one row per state sorted by (d1, d2, index)

    """
    config_kwargs = None
    if use_oracle:
        config_kwargs = (oracle_config or OracleConfig()).as_dict()

    tasks = [
        (family, int(d1), int(d2), index, int(seed), config_kwargs)
        for d1, d2 in dims
        for index in range(count)
    ]
    logger.info("sweep of %d states (%s), %d worker(s)", len(tasks), family, workers)

    if workers > 1:
        with Pool(workers) as pool:
            rows = list(tqdm(pool.imap_unordered(_evaluate_cell, tasks), total=len(tasks), disable=not progress))
    else:
        rows = [_evaluate_cell(t) for t in tqdm(tasks, disable=not progress)]

    table = pd.DataFrame(rows, columns=COLUMNS)
    return table.sort_values(["d1", "d2", "index"], kind="mergesort").reset_index(drop=True)


def sweep_summary(table: pd.DataFrame) -> dict:
    """
    Summary statistics: max |gap| over d2 = 2 cells, min gap overall and the
    largest formula value.
    """
    gaps = table["gap"].dropna()
    qubit_gaps = table.loc[table["d2"] == 2, "gap"].dropna()
    return {
        "states": int(len(table)),
        "max_abs_gap_d2_2": float(qubit_gaps.abs().max()) if len(qubit_gaps) else None,
        "min_gap": float(gaps.min()) if len(gaps) else None,
        "max_formula": float(table["formula"].max()) if len(table) else None,
        "all_bracketed": bool(table["brackets"].all()),
    }


def sweep_to_csv(table: pd.DataFrame, summary: dict) -> str:
    summary_row = pd.DataFrame([{"family": "summary", **{k: v for k, v in summary.items() if k != "states"}}])
    return pd.concat([table, summary_row], ignore_index=True).to_csv(index=False, float_format="%.17g")


def _plain(value):
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        return None if np.isnan(value) else float(value)
    return value


def sweep_to_json(table: pd.DataFrame, summary: dict) -> str:
    doc = {
        "schema_version": ModelConstants.REPORT_SCHEMA_VERSION,
        "rows": [{k: _plain(v) for k, v in row.items()} for row in table.to_dict(orient="records")],
        "summary": summary,
    }
    return json.dumps(doc, indent=2)


def dims_from_strings(values: Sequence[str]) -> List[Tuple[int, int]]:
    return [parse_dims(v) for v in values]

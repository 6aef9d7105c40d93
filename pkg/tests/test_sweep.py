"""
Test the seeded benchmark sweep and the state families it draws from.
"""
import unittest

import pandas as pd

from geodiscord.entities.oracleConfig import OracleConfig
from geodiscord.exceptions import PreconditionError
from geodiscord.initialize.state_family import FAMILIES, generate_state
from geodiscord.utils.sweep import (
    COLUMNS,
    cell_seed,
    parse_dims,
    run_sweep,
    sweep_summary,
    sweep_to_json,
)


class TestStateFamilies(unittest.TestCase):
    """
    Every family yields a valid state of the requested dims
    """

    def test_all_families(self):
        for family in FAMILIES:
            d2 = 2 if family == "ghz" else 3
            rho = generate_state(family, 2, d2, 7)
            self.assertEqual(rho.dims, (2, d2))
            self.assertTrue(rho.is_valid())

    def test_unknown_family(self):
        with self.assertRaises(PreconditionError) as context:
            generate_state("werner", 2, 2, 0)
        self.assertTrue("unknown state family" in str(context.exception))


class TestSweep(unittest.TestCase):
    """
    Tables, seeds and summaries
    """

    def test_parse_dims(self):
        self.assertEqual(parse_dims("2x3"), (2, 3))
        self.assertEqual(parse_dims("4X4"), (4, 4))

    def test_cell_seed(self):
        self.assertEqual(cell_seed(1, 2, 2, 0), cell_seed(1, 2, 2, 0))
        self.assertNotEqual(cell_seed(1, 2, 2, 0), cell_seed(1, 2, 2, 1))
        self.assertNotEqual(cell_seed(1, 2, 2, 0), cell_seed(2, 2, 2, 0))
        self.assertGreaterEqual(cell_seed(1, 2, 2, 0), 0)

    def test_table(self):
        table = run_sweep([(2, 2), (2, 3)], 3, seed=4, oracle_config=OracleConfig(restarts=2, max_iters=100), progress=False)
        self.assertEqual(list(table.columns), COLUMNS)
        self.assertEqual(len(table), 6)
        self.assertEqual(list(table["index"]), [0, 1, 2, 0, 1, 2])
        self.assertTrue(table["brackets"].all())
        self.assertTrue((table["gap"] >= -1e-6).all())

        summary = sweep_summary(table)
        self.assertEqual(summary["states"], 6)
        self.assertLess(summary["max_abs_gap_d2_2"], 1e-6)
        self.assertIn('"summary"', sweep_to_json(table, summary))

    def test_independent_of_workers(self):
        kwargs = dict(count=3, seed=9, use_oracle=False, progress=False)
        serial = run_sweep([(2, 2), (3, 3)], workers=1, **kwargs)
        parallel = run_sweep([(2, 2), (3, 3)], workers=2, **kwargs)
        pd.testing.assert_frame_equal(serial.drop(columns="runtime"), parallel.drop(columns="runtime"))

    def test_without_oracle(self):
        table = run_sweep([(2, 2)], 2, use_oracle=False, progress=False)
        self.assertTrue(table["oracle"].isna().all())
        self.assertIsNone(sweep_summary(table)["min_gap"])


if __name__ == "__main__":
    unittest.main()

"""DataFrame transformation classes for sbihari outputs.

This module turns evaluation results, simulation samples, experiment
ladders and Monte Carlo reports into Pandas DataFrames with a fixed column
order, ready to be written as CSV.
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from sbihari.objects import McReport
from sbihari.utils import ext_to_display

logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = "%.12g"


class DataFrameTransformer:
    """Base class for transforming results into DataFrames."""

    _COLUMN_ORDER: List[str] = []

    # Columns that may hold +-inf and are written as "infinity"/"-infinity"
    _EXT_COLUMNS: List[str] = []

    def _format_ext_columns(self, df: pd.DataFrame) -> pd.DataFrame:
        """Replaces infinite values of the extended-real columns by their display strings.

        Args:
            df: DataFrame with extended-real columns.

        Returns:
            DataFrame with object columns for the extended reals that are not finite.
        """
        for col in self._EXT_COLUMNS:
            if col in df.columns and not np.all(np.isfinite(df[col].astype(float))):
                df[col] = df[col].apply(ext_to_display)
        return df

    def _ensure_columns(self, df: pd.DataFrame, columns: List[str]) -> pd.DataFrame:
        """Ensures all specified columns exist in DataFrame.

        Args:
            df: DataFrame to check.
            columns: List of column names that should exist.

        Returns:
            DataFrame with all specified columns (adds None for missing).
        """
        for col in columns:
            if col not in df.columns:
                df[col] = None
        return df

    def _reorder_columns(self, df: pd.DataFrame, column_order: List[str]) -> pd.DataFrame:
        """Reorders DataFrame columns to match specified order.

        Args:
            df: DataFrame to reorder.
            column_order: Desired column order.

        Returns:
            DataFrame with columns in specified order (only existing columns).
        """
        existing_cols = [col for col in column_order if col in df.columns]
        return df[existing_cols]

    def _finish(self, df: pd.DataFrame) -> pd.DataFrame:
        df = self._format_ext_columns(df)
        df = self._ensure_columns(df, self._COLUMN_ORDER)
        return self._reorder_columns(df, self._COLUMN_ORDER)

    def from_rows(self, rows: Sequence[Dict]) -> pd.DataFrame:
        """Builds the DataFrame from a list of row dictionaries."""
        if not rows:
            return pd.DataFrame(columns=self._COLUMN_ORDER)
        return self._finish(pd.DataFrame(list(rows)))

    @staticmethod
    def to_csv(df: pd.DataFrame, path: Optional[str] = None) -> str:
        """Writes df as CSV (header row, no index, fixed float format).

        Returns:
            The CSV text (also written to `path` when given).
        """
        text = df.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
        if path:
            with open(path, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            logger.debug(f"Wrote {len(df)} row(s) to {path}")
        return text


class TransformTableTransformer(DataFrameTransformer):
    """Evaluations of G, its inverse and their cross-checks at a list of points."""

    _TABLES = {
        "eval": ["x", "G", "G_inv_roundtrip"],
        "invert": ["y", "G_inv", "G_roundtrip"],
        "quadrature": ["x", "tilde_G_p", "quadrature", "abs_diff"],
        "explosion": ["H", "G", "explosion_level"],
    }

    def __init__(self, operation: str):
        """Initialize transformer for one transform operation.

        Args:
            operation: 'eval', 'invert', 'quadrature' or 'explosion'.

        Raises:
            KeyError: If the operation is unknown.
        """
        self.operation = operation
        self._COLUMN_ORDER = self._TABLES[operation]
        self._EXT_COLUMNS = self._COLUMN_ORDER

    def transform(self, columns: Dict[str, Sequence[float]]) -> pd.DataFrame:
        """Builds one row per evaluated point from equally long value columns."""
        return self._finish(pd.DataFrame({name: list(values) for name, values in columns.items()}))


class SimulationTransformer(DataFrameTransformer):
    """Per-trial summaries and optional full paths of Euler runs."""

    _COLUMN_ORDER = ["trial", "seed", "exit_flag", "sup_abs_X", "X_T"]

    def transform(self, samples: Dict[str, np.ndarray], seed: int) -> pd.DataFrame:
        """Builds the trial table from `simulate_trials` output.

        Args:
            samples: Per-trial arrays with exit_flag, sup_abs_X and X_T.
            seed: Base seed of the run.
        """
        df = pd.DataFrame(
            {
                "trial": np.arange(len(samples["X_T"])),
                "exit_flag": samples["exit_flag"],
                "sup_abs_X": samples["sup_abs_X"],
                "X_T": samples["X_T"],
            }
        )
        df["seed"] = seed
        return self._finish(df)

    def paths(self, paths: np.ndarray, step: float) -> pd.DataFrame:
        """Long table trial, node, t, x_1..x_d of full paths (trial, node, d)."""
        n_trials, n_nodes, d = paths.shape
        df = pd.DataFrame(
            {
                "trial": np.repeat(np.arange(n_trials), n_nodes),
                "node": np.tile(np.arange(n_nodes), n_trials),
                "t": np.tile(step * np.arange(n_nodes), n_trials),
            }
        )
        for i in range(d):
            df[f"x_{i + 1}"] = paths[:, :, i].ravel()
        return df


class LadderTransformer(DataFrameTransformer):
    """Rows of the convergence experiments (Cauchy, truncation, Osgood, order)."""

    _LADDERS = {
        "cauchy": ["n", "m", "p_exceed", "std_error"],
        "truncation": ["R", "p_capped", "std_error"],
        "osgood": ["n", "H", "p_exceed", "std_error"],
        "order": ["n", "X_T", "error", "observed_order"],
    }

    def __init__(self, ladder: str):
        """Initialize transformer for one ladder kind.

        Args:
            ladder: 'cauchy', 'truncation', 'osgood' or 'order'.

        Raises:
            KeyError: If the ladder kind is unknown.
        """
        self.ladder = ladder
        self._COLUMN_ORDER = self._LADDERS[ladder]


class CounterexampleTransformer(DataFrameTransformer):
    """Closed-form and Monte Carlo values of the counterexample ratio."""

    _COLUMN_ORDER = [
        "p",
        "gamma",
        "T",
        "ratio_p_pow_p",
        "lower_bound_at_Tn",
        "mc_estimate",
        "mc_std_error",
        "n_trials",
        "verdict",
    ]

    def transform(
        self, closed_rows: Sequence[Dict], reports: Sequence[Optional[McReport]]
    ) -> pd.DataFrame:
        """Joins closed-form rows {p, gamma, T, ratio_p_pow_p, lower_bound_at_Tn} with their reports."""
        rows = []
        for closed, report in zip(closed_rows, reports):
            row = dict(closed)
            if report is not None:
                row.update(
                    {
                        "mc_estimate": report.estimate,
                        "mc_std_error": report.std_error,
                        "n_trials": report.n_trials,
                        "verdict": report.verdict,
                    }
                )
            rows.append(row)
        return self.from_rows(rows)


class ReportTransformer(DataFrameTransformer):
    """Monte Carlo reports as a table."""

    _COLUMN_ORDER = [
        "quantity_tag",
        "estimate",
        "std_error",
        "n_trials",
        "ci_level",
        "theoretical_bound",
        "slack",
        "verdict",
        "seed",
    ]
    _EXT_COLUMNS = ["estimate", "std_error", "theoretical_bound"]

    def transform(self, reports: Sequence[McReport]) -> pd.DataFrame:
        """One row per report (warnings and details are left to the JSON output)."""
        rows = [
            {col: getattr(report, col) for col in self._COLUMN_ORDER} for report in reports
        ]
        return self.from_rows(rows)

"""DataFrame transformation utilities for sbihari.

This module contains classes that turn results and Monte Carlo reports
into Pandas DataFrames for CSV output.
"""

from sbihari.transformers.dataframe_transformer import (
    CounterexampleTransformer,
    DataFrameTransformer,
    LadderTransformer,
    ReportTransformer,
    SimulationTransformer,
    TransformTableTransformer,
)

__all__ = [
    "CounterexampleTransformer",
    "DataFrameTransformer",
    "LadderTransformer",
    "ReportTransformer",
    "SimulationTransformer",
    "TransformTableTransformer",
]

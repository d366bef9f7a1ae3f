# Mock draft accuracy metrics and consensus aggregation.
#
# This code is released under the
# Apache License Version 2.0 http://www.apache.org/licenses/.
from draftrank._core import (
    BordaResult,
    DraftDataset,
    Error,
    FinalMockSelection,
    PercentileRow,
    PercentileTable,
    RankedList,
    RcaRound,
    RcaTrace,
    SlopeGraph,
    SlopeSegment,
    TieGroup,
    TimeseriesCell,
    __version__,
    borda,
    error_timeseries,
    load_dataset,
    mae,
    overlap_at_depth,
    percentile_table,
    prefix_weight,
    rbd,
    rca,
    rolling_consensus,
    select_final_mocks,
    slopegraph,
)

__all__ = [
    "BordaResult",
    "DraftDataset",
    "Error",
    "FinalMockSelection",
    "PercentileRow",
    "PercentileTable",
    "RankedList",
    "RcaRound",
    "RcaTrace",
    "SlopeGraph",
    "SlopeSegment",
    "TieGroup",
    "TimeseriesCell",
    "__version__",
    "borda",
    "error_timeseries",
    "load_dataset",
    "mae",
    "overlap_at_depth",
    "percentile_table",
    "prefix_weight",
    "rbd",
    "rca",
    "rolling_consensus",
    "select_final_mocks",
    "slopegraph",
]

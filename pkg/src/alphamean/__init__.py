"""Recursive weighted averages, windowed variants, and the EMA/MACD stack."""

from alphamean.averages import (
    AverageSeries,
    ExpandedWeights,
    GeometricState,
    WeightSchedule,
    alpha_average,
    alpha_average_expanded,
    binomial_family_schedule,
    expanded_weights,
    geometric_mean,
    geometric_mean_update,
)
from alphamean.comparison import (
    AdmissibilityReport,
    ReversedSeries,
    check_admissibility,
    ea_mea_difference,
    ea_mea_difference_factored,
    limit_ea,
    relative_error_bound,
    reverse,
    rho_bound_check,
)
from alphamean.indicators import (
    BUY,
    FLAT,
    LONG,
    SELL,
    SHORT,
    CloseSeries,
    EmaStreamState,
    IndicatorConfig,
    MacdSeries,
    SignalEvent,
    classify_days,
    crossover_events,
    ema,
    ema_series,
    ema_stream_update,
    macd,
    signal_line,
)
from alphamean.ingest import (
    CloseRecord,
    IndicatorReport,
    ReportRow,
    build_report,
    read_closes,
    write_closes,
    write_report,
)
from alphamean.moving import MovingAverageSeries, mea, moving_alpha_average, window_alpha_average
from alphamean.oracles import (
    OracleCase,
    brute_force_average,
    closed_form_linear,
    decaying_sequence_value,
)

__version__ = "0.1.0"

__all__ = [
    "AverageSeries",
    "ExpandedWeights",
    "GeometricState",
    "WeightSchedule",
    "alpha_average",
    "alpha_average_expanded",
    "binomial_family_schedule",
    "expanded_weights",
    "geometric_mean",
    "geometric_mean_update",
    "MovingAverageSeries",
    "window_alpha_average",
    "moving_alpha_average",
    "mea",
    "ReversedSeries",
    "AdmissibilityReport",
    "reverse",
    "limit_ea",
    "ea_mea_difference",
    "ea_mea_difference_factored",
    "check_admissibility",
    "relative_error_bound",
    "rho_bound_check",
    "SHORT",
    "LONG",
    "FLAT",
    "BUY",
    "SELL",
    "CloseSeries",
    "IndicatorConfig",
    "MacdSeries",
    "SignalEvent",
    "EmaStreamState",
    "ema",
    "ema_series",
    "ema_stream_update",
    "macd",
    "signal_line",
    "classify_days",
    "crossover_events",
    "CloseRecord",
    "ReportRow",
    "IndicatorReport",
    "read_closes",
    "write_closes",
    "build_report",
    "write_report",
    "OracleCase",
    "closed_form_linear",
    "brute_force_average",
    "decaying_sequence_value",
    "__version__",
]

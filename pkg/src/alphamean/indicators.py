"""EMA, MACD and crossover signals on daily close series.

Closes are stored youngest-first, matching how feeds deliver them: index
0 is today's close and appending a day shifts every older index by one.

The N-day EMA here is, despite the customary name, not a windowed
average: it is the exponential average of the *entire* available history
with blending weight ``rho/(N+1)`` (``rho = 2`` by default).  The length
``N`` only parameterizes the weight; the windowed object it approximates
lives in :mod:`alphamean.moving`, and the approximation error is bounded
in :mod:`alphamean.comparison`.

The MACD is the short-length EMA minus the long-length EMA of the
closes.  Its own EMA (the signal line) splits days into "long" (MACD
above its signal line) and "short" (below); crossings of the two are the
buy and sell events.  Because the EMA seeds itself with the first value,
day one always ties, so a third "flat" state covers exact ties; flat
days emit no event and do not reset the last committed position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

from alphamean.averages import _blend
from alphamean.comparison import ReversedSeries

__all__ = [
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
]

SHORT = "short"
LONG = "long"
FLAT = "flat"
BUY = "buy"
SELL = "sell"


@dataclass(frozen=True)
class CloseSeries:
    """Daily closes, youngest-first, with optional parallel metadata.

    ``labels`` are opaque date strings and ``texts`` the verbatim close
    literals as read from a file; both are aligned with ``closes`` and
    are carried through for reporting only.
    """

    closes: ReversedSeries
    labels: tuple[str, ...] | None = None
    texts: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        for i, v in enumerate(self.closes.values):
            if v < 0.0:
                raise ValueError(f"close at depth {i} is negative: {v}")
        for name, field in (("labels", self.labels), ("texts", self.texts)):
            if field is not None and len(field) != len(self.closes):
                raise ValueError(
                    f"{name} length {len(field)} does not match {len(self.closes)} closes"
                )

    @classmethod
    def from_chronological(
        cls, closes: Sequence[float], labels: Sequence[str] | None = None
    ) -> "CloseSeries":
        """Build from oldest-first values (and labels, if given)."""
        series = ReversedSeries(tuple(reversed([float(v) for v in closes])))
        lab = tuple(reversed([str(s) for s in labels])) if labels is not None else None
        return cls(series, labels=lab)

    def with_today(self, close: float, label: str | None = None) -> "CloseSeries":
        """Append a new day's close, shifting all prior depths by one."""
        values = (float(close),) + self.closes.values
        labels = self.labels
        if labels is not None:
            labels = (label if label is not None else "",) + labels
        elif label is not None:
            labels = (label,) + ("",) * len(self.closes)
        return CloseSeries(ReversedSeries(values), labels=labels, texts=None)

    def __len__(self) -> int:
        return len(self.closes)


@dataclass(frozen=True)
class IndicatorConfig:
    """Moving lengths and weight-model parameter for the MACD stack.

    ``n1``/``n2`` are the short and long EMA lengths of the MACD,
    ``n0`` the length of its signal line, ``rho`` the weight model
    (``alpha = rho/(N+1)``).  Defaults are the common (12, 26, 9)
    combination with ``rho = 2``.
    """

    n1: int = 12
    n2: int = 26
    n0: int = 9
    rho: float = 2.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho", float(self.rho))
        for name, value in (("n1", self.n1), ("n2", self.n2), ("n0", self.n0)):
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be an integer >= 1, got {value}")
        if self.n1 >= self.n2:
            raise ValueError(f"short length must be below long length, got n1={self.n1}, n2={self.n2}")
        shortest = min(self.n0, self.n1, self.n2)
        if not math.isfinite(self.rho) or not 0.0 < self.rho <= shortest + 1:
            raise ValueError(
                f"rho must lie in (0, {shortest + 1}] so every weight stays in (0, 1], got {self.rho}"
            )


@dataclass(frozen=True)
class MacdSeries:
    """Per-day MACD values, youngest-first, grown like a close series."""

    values: ReversedSeries

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SignalEvent:
    """A committed position flip; ``day_index`` is 1-based chronological."""

    day_index: int
    kind: str
    position_before: str
    position_after: str


@dataclass(frozen=True)
class EmaStreamState:
    """Running EMA that needs only the previous average and the new close."""

    n: int
    alpha: float
    current: float | None = None
    count: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"length must be >= 1, got {self.n}")
        if not math.isfinite(self.alpha) or not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"weight must lie in (0, 1], got {self.alpha}")
        if self.count < 0:
            raise ValueError(f"count must be >= 0, got {self.count}")

    @classmethod
    def fresh(cls, n: int, rho: float = 2.0) -> "EmaStreamState":
        """Empty state for an N-day EMA under the ``rho/(N+1)`` weight model."""
        return cls(n=n, alpha=_weight_for_length(n, rho))


def _weight_for_length(N: int, rho: float) -> float:
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"length must be an integer >= 1, got {N}")
    r = float(rho)
    if not math.isfinite(r) or r <= 0.0:
        raise ValueError(f"rho must be positive, got {rho}")
    alpha = r / (N + 1.0)
    if alpha > 1.0:
        raise ValueError(f"weight rho/(N+1) = {alpha} exceeds 1; lower rho or raise the length")
    return alpha


def _prefix_emas(chronological: Sequence[float], alpha: float) -> list[float]:
    # Shares the single recursion step with the batch average machinery
    # and the streaming updater, so all paths are bit-identical.
    out: list[float] = []
    avg = 0.0
    for i, v in enumerate(chronological):
        avg = v if i == 0 else _blend(avg, alpha, v)
        out.append(avg)
    return out


def ema(c: CloseSeries, N: int, rho: float = 2.0) -> float:
    """N-day EMA of the full close history.

    Uses every available close, not a length-``N`` window; ``N`` enters
    only through the blending weight ``rho/(N+1)``.
    """
    alpha = _weight_for_length(N, rho)
    return _prefix_emas(c.closes.to_chronological(), alpha)[-1]


def ema_series(c: CloseSeries, N: int, rho: float = 2.0) -> ReversedSeries:
    """Per-day EMA trace, youngest-first.

    Entry at depth ``i`` is the EMA of the history that was available
    ``i`` days ago.
    """
    alpha = _weight_for_length(N, rho)
    emas = _prefix_emas(c.closes.to_chronological(), alpha)
    return ReversedSeries(tuple(reversed(emas)))


def ema_stream_update(state: EmaStreamState, close: float) -> EmaStreamState:
    """Absorb one close into a streaming EMA state.

    The first update seeds the average with the close itself; later
    updates run one blending step.  Replaying a history through this
    function matches :func:`ema` on the same history exactly.
    """
    value = float(close)
    if not math.isfinite(value):
        raise ValueError(f"close must be finite, got {close}")
    if state.count == 0:
        return replace(state, current=value, count=1)
    assert state.current is not None
    return replace(state, current=_blend(state.current, state.alpha, value), count=state.count + 1)


def macd(c: CloseSeries, config: IndicatorConfig) -> MacdSeries:
    """Short EMA minus long EMA of the closes, per day, youngest-first."""
    short = ema_series(c, config.n1, config.rho)
    long_ = ema_series(c, config.n2, config.rho)
    values = tuple(s - l for s, l in zip(short.values, long_.values))
    return MacdSeries(ReversedSeries(values))


def signal_line(m: MacdSeries, n0: int, rho: float = 2.0) -> ReversedSeries:
    """Per-day ``n0``-day EMA of the MACD itself, youngest-first."""
    alpha = _weight_for_length(n0, rho)
    return ReversedSeries(tuple(reversed(_prefix_emas(m.values.to_chronological(), alpha))))


def classify_days(m: MacdSeries, n0: int, rho: float = 2.0) -> list[str]:
    """Label each day short, long, or flat, oldest day first.

    A day is long when its MACD value exceeds the signal line (the
    ``n0``-day EMA of the MACD itself), short when below, and flat on an
    exact tie.  Day one is always flat because the signal line starts at
    the MACD value itself.
    """
    alpha = _weight_for_length(n0, rho)
    chronological = m.values.to_chronological()
    signal = _prefix_emas(chronological, alpha)
    states = []
    for value, line in zip(chronological, signal):
        diff = value - line
        states.append(LONG if diff > 0.0 else SHORT if diff < 0.0 else FLAT)
    return states


def crossover_events(states: Sequence[str]) -> list[SignalEvent]:
    """Extract buy/sell events from a chronological run of day states.

    A buy fires on a committed short-to-long flip, a sell on the
    opposite.  Flat days neither emit nor reset: short, flat, long still
    yields one buy.  The first committed position emits nothing.
    """
    if not states:
        raise ValueError("day states must be non-empty")
    events: list[SignalEvent] = []
    committed = FLAT
    for day, state in enumerate(states, start=1):
        if state not in (SHORT, LONG, FLAT):
            raise ValueError(f"day {day}: unknown state {state!r}")
        if state == FLAT:
            continue
        if committed == FLAT:
            committed = state
        elif state != committed:
            kind = BUY if state == LONG else SELL
            events.append(
                SignalEvent(day_index=day, kind=kind, position_before=committed, position_after=state)
            )
            committed = state
    return events

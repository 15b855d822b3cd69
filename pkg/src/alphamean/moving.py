"""Windowed (limited-memory) variants of the recursive averages.

A length-``N`` window ending at position ``n`` is averaged with the same
blending recursion as the full series, but restarted from the window's
first element.  Because the initial condition changes with every step,
the windowed series cannot reuse the running fold; each window is folded
independently (O(N) per output value).

For a constant blending weight there is a closed summation form, the
moving exponential average, which is implemented separately and serves
as an independent cross-check of the generic windowed recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from alphamean.averages import ScheduleLike, _coerce_schedule, _coerce_series, alpha_average

__all__ = [
    "MovingAverageSeries",
    "window_alpha_average",
    "moving_alpha_average",
    "mea",
]


@dataclass(frozen=True)
class MovingAverageSeries:
    """Windowed averages for every full window, oldest window first.

    ``values[i]`` is the average of the window ending at chronological
    position ``window_length + i`` (1-based).  No partial-window warm-up
    values are reported.
    """

    window_length: int
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.window_length < 1:
            raise ValueError(f"window length must be >= 1, got {self.window_length}")
        if not self.values:
            raise ValueError("moving average series must be non-empty")

    @property
    def limit(self) -> float:
        """Value of the most recent full window."""
        return self.values[-1]

    def __len__(self) -> int:
        return len(self.values)


def window_alpha_average(x: Sequence[float], n: int, N: int, alpha: ScheduleLike) -> float:
    """Average of the length-``N`` window of ``x`` ending at position ``n``.

    ``n`` is 1-based chronological.  The schedule is restarted inside the
    window, so it must provide ``N - 1`` weights.
    """
    values = _coerce_series(x)
    if N < 1:
        raise ValueError(f"window length must be >= 1, got {N}")
    if n < N:
        raise ValueError(f"window of length {N} does not fit before position {n}")
    if n > len(values):
        raise ValueError(f"position {n} is past the end of the series (length {len(values)})")
    return alpha_average(values[n - N : n], alpha).limit


def moving_alpha_average(x: Sequence[float], N: int, alpha: ScheduleLike) -> MovingAverageSeries:
    """Windowed average of ``x`` for every full window of length ``N``."""
    values = _coerce_series(x)
    if N < 1:
        raise ValueError(f"window length must be >= 1, got {N}")
    if len(values) < N:
        raise ValueError(f"series of length {len(values)} is shorter than the window {N}")
    schedule = _coerce_schedule(alpha)
    out = [alpha_average(values[n - N : n], schedule).limit for n in range(N, len(values) + 1)]
    return MovingAverageSeries(N, tuple(out))


def mea(x: Sequence[float], N: int, alpha: float) -> MovingAverageSeries:
    """Moving exponential average via the direct summation form.

    The window value is ``(1-a)**(N-1) * x[n-N+1] + a * sum_{s=0}^{N-2}
    (1-a)**s * x[n-s]``, the closed form of the windowed recursion under
    a constant schedule.  Both routes agree up to rounding and are
    compared in tests.
    """
    values = _coerce_series(x)
    a = float(alpha)
    if not 0.0 <= a < 1.0:
        raise ValueError(f"constant weight must lie in [0, 1), got {a}")
    if N < 1:
        raise ValueError(f"window length must be >= 1, got {N}")
    if len(values) < N:
        raise ValueError(f"series of length {len(values)} is shorter than the window {N}")
    oldest_weight = (1.0 - a) ** (N - 1)
    out = []
    for n in range(N, len(values) + 1):
        # chronological position n is values[n-1]
        acc = oldest_weight * values[n - N]
        power = 1.0
        for s in range(N - 1):
            acc += a * power * values[n - 1 - s]
            power *= 1.0 - a
        out.append(acc)
    return MovingAverageSeries(N, tuple(out))

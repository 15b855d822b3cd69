"""Limit exponential average versus its windowed counterpart.

This module works on series stored youngest-first (index 0 is the newest
observation), which is how market data usually arrives.  With a constant
blending weight ``a``, the terminal average of the full history and the
terminal value of the length-``N`` windowed average differ by

    full - windowed = (1-a)**N * (tail_average - y[N-1])

where ``tail_average`` is the terminal average of the history deeper
than the window.  Both sides of this identity are computed over finite
data by giving the oldest element the remaining retention weight
``(1-a)**(m-1)``; dropping that terminal weight would leave coefficients
that sum below one, i.e. not an average at all, so it is never dropped
here.

The factor ``(1-a)**N`` bounds the relative error of replacing the
windowed average by the full-history one whenever the sequence "does not
spread widely": its deep tail averages out near the overall level and no
single value dwarfs it.  With the weight model ``a = rho/(N+1)`` the
bound is below ``exp(-rho)`` for the customary parameter choices
(``rho = 2`` gives less than 13.5%, ``rho >= 4.7`` less than 1%), though
the ``exp(-rho)`` comparison is not valid for every ``rho``; see
:func:`rho_bound_check`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from alphamean.averages import _blend, _coerce_series
from alphamean.moving import mea

__all__ = [
    "ReversedSeries",
    "AdmissibilityReport",
    "reverse",
    "limit_ea",
    "ea_mea_difference",
    "ea_mea_difference_factored",
    "check_admissibility",
    "relative_error_bound",
    "rho_bound_check",
]


@dataclass(frozen=True)
class ReversedSeries:
    """Observations ordered youngest-first (index 0 is the newest)."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.values:
            raise ValueError("series must be non-empty")
        for i, v in enumerate(self.values):
            if not math.isfinite(v):
                raise ValueError(f"value at depth {i} is not finite: {v}")

    def to_chronological(self) -> list[float]:
        """Return the values oldest first."""
        return list(reversed(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, depth: int) -> float:
        return self.values[depth]


def reverse(x: Union[Sequence[float], ReversedSeries]) -> Union[ReversedSeries, list[float]]:
    """Flip between chronological order and youngest-first order.

    A chronological sequence becomes a :class:`ReversedSeries`; a
    :class:`ReversedSeries` becomes a chronological list.  Applying the
    function twice restores the original ordering.
    """
    if isinstance(x, ReversedSeries):
        return x.to_chronological()
    return ReversedSeries(tuple(reversed(_coerce_series(x))))


def _check_constant_weight(alpha: float) -> float:
    a = float(alpha)
    if not math.isfinite(a) or not 0.0 <= a < 1.0:
        raise ValueError(f"constant weight must lie in [0, 1), got {alpha}")
    return a


def limit_ea(y: ReversedSeries, alpha: float) -> float:
    """Terminal exponential average of the full history.

    Equivalent to folding the chronological series with the constant
    blending weight ``alpha``; on finite data the oldest element keeps
    the whole remaining retention weight ``(1-alpha)**(len(y)-1)``.
    """
    a = _check_constant_weight(alpha)
    avg = None
    for v in reversed(y.values):
        avg = v if avg is None else _blend(avg, a, v)
    assert avg is not None
    return avg


def _difference_both_routes(y: ReversedSeries, N: int, alpha: float) -> tuple[float, float]:
    a = _check_constant_weight(alpha)
    if N < 1:
        raise ValueError(f"window length must be >= 1, got {N}")
    if len(y) < N:
        raise ValueError(f"series of length {len(y)} is shorter than the window {N}")
    if len(y) == N:
        # The window covers the whole history, so both averages coincide
        # and the factored form has an empty tail.
        return 0.0, 0.0
    direct = limit_ea(y, a) - mea(y.to_chronological(), N, a).limit
    tail = ReversedSeries(y.values[N:])
    factored = (1.0 - a) ** N * (limit_ea(tail, a) - y.values[N - 1])
    return direct, factored


def ea_mea_difference(y: ReversedSeries, N: int, alpha: float) -> float:
    """Full-history average minus the length-``N`` windowed average.

    The value is computed both directly and through the factored
    identity ``(1-a)**N * (tail_average - y[N-1])``; the two routes must
    agree, which guards against orientation or truncation mistakes.
    """
    direct, factored = _difference_both_routes(y, N, alpha)
    scale = max(1.0, abs(direct), abs(factored))
    if abs(direct - factored) > 1e-10 * scale:
        raise ArithmeticError(
            f"difference identity violated: direct {direct!r} vs factored {factored!r}"
        )
    return direct


def ea_mea_difference_factored(y: ReversedSeries, N: int, alpha: float) -> float:
    """The factored route of :func:`ea_mea_difference`, exposed for tests."""
    return _difference_both_routes(y, N, alpha)[1]


@dataclass(frozen=True)
class AdmissibilityReport:
    """Diagnostics for the "does not spread widely" test.

    ``tail_average`` is the terminal average of the history deeper than
    the window, ``delta_bar`` the terminal average of the whole history.
    ``relative_gap_tail`` compares the two; ``relative_gap_yn`` compares
    ``delta_bar`` with the single value at depth ``N``.  The sequence is
    admissible when the tail gap is within the chosen tolerance and the
    single-value gap stays below one.
    """

    tail_average: float
    delta_bar: float
    relative_gap_tail: float
    relative_gap_yn: float
    admissible: bool


def check_admissibility(
    y: ReversedSeries, N: int, alpha: float, epsilon: float = 0.05
) -> AdmissibilityReport:
    """Test whether the error bound's assumptions hold for ``y``.

    ``epsilon`` is the relative tolerance that stands in for "the tail
    averages out near the overall level".  Requires more history than
    the window (``len(y) > N``) and a non-zero overall average, since
    both criteria are relative.
    """
    a = _check_constant_weight(alpha)
    if N < 1:
        raise ValueError(f"window length must be >= 1, got {N}")
    if len(y) <= N:
        raise ValueError(
            f"admissibility needs history beyond the window: length {len(y)}, window {N}"
        )
    if not math.isfinite(epsilon) or epsilon <= 0.0:
        raise ValueError(f"tolerance must be positive, got {epsilon}")
    delta_bar = limit_ea(y, a)
    if delta_bar == 0.0:
        raise ValueError("overall average is zero; relative criteria are undefined")
    tail_average = limit_ea(ReversedSeries(y.values[N:]), a)
    relative_gap_tail = abs(tail_average - delta_bar) / abs(delta_bar)
    relative_gap_yn = abs(delta_bar - y.values[N]) / abs(delta_bar)
    return AdmissibilityReport(
        tail_average=tail_average,
        delta_bar=delta_bar,
        relative_gap_tail=relative_gap_tail,
        relative_gap_yn=relative_gap_yn,
        admissible=relative_gap_tail <= epsilon and relative_gap_yn < 1.0,
    )


def relative_error_bound(alpha: float, N: int) -> float:
    """Relative-error bound ``(1-alpha)**N`` for admissible sequences.

    Strictly decreasing in both arguments.
    """
    a = _check_constant_weight(alpha)
    if N < 1:
        raise ValueError(f"window length must be >= 1, got {N}")
    return (1.0 - a) ** N


def rho_bound_check(rho: float, N: int) -> bool:
    """Check ``(1 - rho/(N+1))**N <= exp(-rho)`` numerically.

    Under the weight model ``alpha = rho/(N+1)`` this compares the exact
    error bound with its ``exp(-rho)`` simplification.  The comparison
    holds for ``rho >= 2`` (and in particular for the customary choices
    2 and 4.7) but fails for small ``rho``, e.g. ``rho = 1``, where the
    exact bound is slightly larger; hence a checked predicate instead of
    an assumption.
    """
    r = float(rho)
    if N < 1:
        raise ValueError(f"window length must be >= 1, got {N}")
    if not math.isfinite(r) or r <= 0.0:
        raise ValueError(f"rho must be positive, got {rho}")
    if r > N + 1:
        raise ValueError(
            f"rho must not exceed N + 1 = {N + 1} so the weight stays in (0, 1], got {rho}"
        )
    return (1.0 - r / (N + 1.0)) ** N <= math.exp(-r)

"""Recursive weighted averages driven by a schedule of blending weights.

The running average of a series is built by folding each new observation
into the previous value:

    avg[1]   = x[1]
    avg[n+1] = (1 - a[n]) * avg[n] + a[n] * x[n+1]

where every blending weight ``a[n]`` lies in ``[0, 1]``.  Unrolling the
fold writes ``avg[n]`` as a convex combination of ``x[1..n]`` whose
coefficients (the "expanded weights") always sum to one.  Standard weight
schedules recover familiar averages:

* ``a[s] = 1/(s+1)``: the running arithmetic mean,
* ``a[s] = 2/(s+2)``: the linearly weighted mean (weight of ``x[r]``
  proportional to ``r``),
* constant ``a < 1``: the exponential average, where recent values carry
  geometrically larger weight.

The first two are members of a two-parameter family ``a[s] =
(mu - nu + 1) / (s + mu + 1)`` with ``0 <= nu <= mu``.

The geometric mean does not fit the blending recursion above; it has its
own update rule and lives here as a small value-type companion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "WeightSchedule",
    "AverageSeries",
    "ExpandedWeights",
    "GeometricState",
    "ScheduleLike",
    "alpha_average",
    "alpha_average_expanded",
    "expanded_weights",
    "binomial_family_schedule",
    "geometric_mean_update",
    "geometric_mean",
]

_KINDS = ("arithmetic", "weighted-arithmetic", "binomial-family", "constant", "explicit")


@dataclass(frozen=True)
class WeightSchedule:
    """Blending weights ``a[1], a[2], ...``, each in ``[0, 1]``.

    Instances are created through the factory classmethods; ``params``
    holds the kind-specific parameters (``(mu, nu)`` for the binomial
    family, ``(value,)`` for a constant, the full weight tuple for an
    explicit list, empty otherwise).
    """

    kind: str
    params: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown schedule kind {self.kind!r}; expected one of {_KINDS}")
        if self.kind in ("arithmetic", "weighted-arithmetic"):
            if self.params:
                raise ValueError(f"{self.kind} schedule takes no parameters")
        elif self.kind == "binomial-family":
            if len(self.params) != 2:
                raise ValueError("binomial-family schedule needs parameters (mu, nu)")
            mu, nu = self.params
            if not (math.isfinite(mu) and math.isfinite(nu)):
                raise ValueError("mu and nu must be finite")
            if nu < 0 or mu < 0:
                raise ValueError(f"mu and nu must be non-negative, got mu={mu}, nu={nu}")
            if nu > mu:
                raise ValueError(f"nu must not exceed mu, got mu={mu}, nu={nu}")
        elif self.kind == "constant":
            if len(self.params) != 1:
                raise ValueError("constant schedule needs a single weight")
            value = self.params[0]
            if not math.isfinite(value) or not 0.0 <= value < 1.0:
                raise ValueError(f"constant weight must lie in [0, 1), got {value}")
        else:  # explicit
            for i, value in enumerate(self.params, start=1):
                if not math.isfinite(value) or not 0.0 <= value <= 1.0:
                    raise ValueError(f"explicit weight #{i} must lie in [0, 1], got {value}")

    @classmethod
    def arithmetic(cls) -> "WeightSchedule":
        """Schedule ``a[s] = 1/(s+1)``, the running arithmetic mean."""
        return cls("arithmetic")

    @classmethod
    def weighted_arithmetic(cls) -> "WeightSchedule":
        """Schedule ``a[s] = 2/(s+2)``, the linearly weighted mean."""
        return cls("weighted-arithmetic")

    @classmethod
    def binomial_family(cls, mu: float, nu: float) -> "WeightSchedule":
        """Schedule ``a[s] = (mu - nu + 1)/(s + mu + 1)`` with ``0 <= nu <= mu``."""
        return cls("binomial-family", (float(mu), float(nu)))

    @classmethod
    def constant(cls, value: float) -> "WeightSchedule":
        """Constant schedule ``a[s] = value`` with ``0 <= value < 1``."""
        return cls("constant", (float(value),))

    @classmethod
    def explicit(cls, values: Iterable[float]) -> "WeightSchedule":
        """Finite schedule given as an explicit list of weights in ``[0, 1]``."""
        return cls("explicit", tuple(float(v) for v in values))

    def alpha(self, s: int) -> float:
        """Return the blending weight ``a[s]`` (1-based index)."""
        if s < 1:
            raise ValueError(f"schedule index must be >= 1, got {s}")
        if self.kind == "arithmetic":
            return 1.0 / (s + 1.0)
        if self.kind == "weighted-arithmetic":
            return 2.0 / (s + 2.0)
        if self.kind == "binomial-family":
            mu, nu = self.params
            return (mu - nu + 1.0) / (s + mu + 1.0)
        if self.kind == "constant":
            return self.params[0]
        if s > len(self.params):
            raise ValueError(
                f"explicit schedule has only {len(self.params)} weights, "
                f"but weight #{s} was requested"
            )
        return self.params[s - 1]

    def head(self, count: int) -> list[float]:
        """Return ``[a[1], ..., a[count]]``."""
        return [self.alpha(s) for s in range(1, count + 1)]


ScheduleLike = Union[WeightSchedule, Sequence[float]]


@dataclass(frozen=True)
class AverageSeries:
    """Running averages produced by the blending recursion."""

    deltas: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.deltas:
            raise ValueError("average series must be non-empty")

    @property
    def limit(self) -> float:
        """Terminal value of the running average."""
        return self.deltas[-1]

    def __len__(self) -> int:
        return len(self.deltas)


@dataclass(frozen=True)
class ExpandedWeights:
    """Coefficients placing avg[n] as a convex combination of x[1..n]."""

    n: int
    weights: tuple[float, ...]


@dataclass(frozen=True)
class GeometricState:
    """Running geometric mean of ``n`` positive observations."""

    n: int = 0
    gamma: float = 1.0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"observation count must be >= 0, got {self.n}")
        if not math.isfinite(self.gamma) or self.gamma <= 0.0:
            raise ValueError(f"geometric mean must be a positive finite number, got {self.gamma}")


def _blend(previous: float, alpha: float, value: float) -> float:
    # One recursion step.  The incremental form keeps constant series
    # exactly fixed (the correction term is exactly zero), which the
    # exact-tie rules downstream rely on; the guard keeps a full weight
    # returning the new value exactly.
    if alpha == 1.0:
        return value
    return previous + alpha * (value - previous)


def _coerce_series(x: Sequence[float]) -> list[float]:
    values = [float(v) for v in x]
    if not values:
        raise ValueError("series must be non-empty")
    for i, v in enumerate(values, start=1):
        if not math.isfinite(v):
            raise ValueError(f"series value #{i} is not finite: {v}")
    return values


def _coerce_schedule(alpha: ScheduleLike) -> WeightSchedule:
    if isinstance(alpha, WeightSchedule):
        return alpha
    return WeightSchedule.explicit(alpha)


def alpha_average(x: Sequence[float], alpha: ScheduleLike) -> AverageSeries:
    """Fold a series into its running weighted averages.

    ``x`` is chronological (oldest first).  ``alpha`` is a
    :class:`WeightSchedule` or a plain sequence of weights, which must
    provide at least ``len(x) - 1`` values.  The first average equals the
    first observation; every later step blends the next observation in
    with weight ``a[n]``.
    """
    values = _coerce_series(x)
    schedule = _coerce_schedule(alpha)
    avg = values[0]
    deltas = [avg]
    for i in range(1, len(values)):
        avg = _blend(avg, schedule.alpha(i), values[i])
        deltas.append(avg)
    return AverageSeries(tuple(deltas))


def expanded_weights(alpha: ScheduleLike, n: int) -> ExpandedWeights:
    """Expand the first ``n`` steps of the recursion into coefficients.

    The coefficient of the oldest value is the product of all retention
    factors ``(1 - a[s])`` for ``s = 1..n-1``; the coefficient of ``x[r]``
    for ``r >= 2`` is ``a[r-1]`` times the retention factors that come
    after it.  The coefficients sum to one.
    """
    if n < 1:
        raise ValueError(f"weight expansion needs n >= 1, got {n}")
    schedule = _coerce_schedule(alpha)
    weights = [0.0] * n
    tail = 1.0  # product of (1 - a[s]) for s = r..n-1, starting from the empty product
    for r in range(n, 1, -1):
        a = schedule.alpha(r - 1)
        weights[r - 1] = a * tail
        tail *= 1.0 - a
    weights[0] = tail
    return ExpandedWeights(n, tuple(weights))


def alpha_average_expanded(x: Sequence[float], alpha: ScheduleLike) -> float:
    """Terminal average computed from the expanded coefficients.

    Equals ``alpha_average(x, alpha).limit`` up to rounding; the two
    routes are compared in tests.
    """
    values = _coerce_series(x)
    weights = expanded_weights(alpha, len(values)).weights
    return sum(w * v for w, v in zip(weights, values))


def binomial_family_schedule(mu: float, nu: float) -> WeightSchedule:
    """Schedule ``a[s] = (mu - nu + 1)/(s + mu + 1)``.

    ``mu = nu = 0`` reproduces the arithmetic schedule and ``mu = 1,
    nu = 0`` the linearly weighted one.  Parameters may be real; for
    integer values the expanded weights have binomial-coefficient closed
    forms, which the tests use as oracles.
    """
    return WeightSchedule.binomial_family(mu, nu)


def geometric_mean_update(state: GeometricState, x: float) -> GeometricState:
    """Absorb one positive observation into a running geometric mean.

    The update is computed in log space, ``exp(((n-1) ln g + ln x) / n)``,
    which avoids overflow of ``g**(n-1)`` for long histories.
    """
    value = float(x)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"geometric mean requires positive finite inputs, got {value}")
    n = state.n + 1
    log_gamma = ((n - 1) * math.log(state.gamma) + math.log(value)) / n
    return GeometricState(n, math.exp(log_gamma))


def geometric_mean(x: Sequence[float]) -> float:
    """Geometric mean of a non-empty sequence of positive numbers."""
    values = _coerce_series(x)
    state = GeometricState()
    for value in values:
        state = geometric_mean_update(state, value)
    return state.gamma

"""Independent reference values for the averaging machinery.

Two kinds of oracle live here: exact closed forms for the ramp series
``x[s] = s`` under the standard schedules, and a brute-force summation
that recomputes every expansion coefficient from scratch and totals the
products with compensated summation.  The brute-force route shares no
code with the recursion or with the suffix-product weight expansion, so
agreement between the three is meaningful.

For the decaying series ``x[s] = (1/s) * (1-beta)**s`` there is no
closed form trusted to full precision (the known series expansions are
truncations with unquantified error), so averages of it are validated
against :func:`brute_force_average` only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from alphamean.averages import ScheduleLike, _coerce_schedule, _coerce_series

__all__ = [
    "OracleCase",
    "closed_form_linear",
    "brute_force_average",
    "decaying_sequence_value",
]

_FAMILIES = ("arithmetic", "weighted", "exponential")
_SEQUENCE_KINDS = ("linear", "decaying")


@dataclass(frozen=True)
class OracleCase:
    """One reference scenario: a schedule family applied to a test sequence.

    ``sequence_kind`` is "linear" (``x[s] = s``) or "decaying"
    (``x[s] = (1/s) * (1-beta)**s`` with ``0 < beta < 1``).
    """

    family: str
    sequence_kind: str
    n: int
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {_FAMILIES}")
        if self.sequence_kind not in _SEQUENCE_KINDS:
            raise ValueError(
                f"unknown sequence kind {self.sequence_kind!r}; expected one of {_SEQUENCE_KINDS}"
            )
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.sequence_kind == "decaying":
            if self.beta is None or not 0.0 < self.beta < 1.0:
                raise ValueError(f"decaying sequence needs 0 < beta < 1, got {self.beta}")

    def sequence(self) -> list[float]:
        """The first ``n`` values of the test sequence."""
        if self.sequence_kind == "linear":
            return [float(s) for s in range(1, self.n + 1)]
        assert self.beta is not None
        return [decaying_sequence_value(s, self.beta) for s in range(1, self.n + 1)]


def closed_form_linear(family: str, n: int, alpha: float | None = None) -> float:
    """Exact terminal average of ``x = (1, 2, ..., n)`` for a schedule family.

    * arithmetic:  ``(n + 1) / 2``
    * weighted:    ``(2n + 1) / 3``
    * exponential: ``n - ((1-a)/a) * (1 - (1-a)**(n-1))`` for ``0 < a < 1``
    """
    if family == "weighted-arithmetic":
        family = "weighted"
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {_FAMILIES}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if family == "arithmetic":
        return (n + 1.0) / 2.0
    if family == "weighted":
        return (2.0 * n + 1.0) / 3.0
    if alpha is None:
        raise ValueError("exponential family needs a weight alpha")
    a = float(alpha)
    if not math.isfinite(a) or not 0.0 < a < 1.0:
        raise ValueError(f"exponential family needs 0 < alpha < 1, got {alpha}")
    return n - (1.0 - a) / a * (1.0 - (1.0 - a) ** (n - 1))


def brute_force_average(x: Sequence[float], alpha: ScheduleLike) -> float:
    """Terminal average by explicit coefficient expansion.

    Each coefficient is the product of its retention factors, computed
    independently per position (no shared suffix products), and the
    weighted terms are totalled with ``math.fsum``.  O(n^2); meant as a
    test oracle, not for production-sized data.
    """
    values = _coerce_series(x)
    schedule = _coerce_schedule(alpha)
    n = len(values)
    alphas = schedule.head(n - 1)
    retentions = [1.0 - a for a in alphas]
    terms = []
    for r in range(1, n + 1):
        if r == 1:
            weight = math.prod(retentions)
        else:
            weight = alphas[r - 2] * math.prod(retentions[r - 1 :])
        terms.append(weight * values[r - 1])
    return math.fsum(terms)


def decaying_sequence_value(s: int, beta: float) -> float:
    """Value ``(1/s) * (1-beta)**s`` of the decaying test sequence."""
    if s < 1:
        raise ValueError(f"index must be >= 1, got {s}")
    b = float(beta)
    if not math.isfinite(b) or not 0.0 < b < 1.0:
        raise ValueError(f"beta must lie in (0, 1), got {beta}")
    return (1.0 - b) ** s / s

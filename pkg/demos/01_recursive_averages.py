"""Recursive weighted averages and their expansion coefficients.

Every average here is the same two-line fold:

    avg[1]   = x[1]
    avg[n+1] = avg[n] + a[n] * (x[n+1] - avg[n])

What changes between the arithmetic mean, the linearly weighted mean and
the exponential average is only the weight schedule a[1], a[2], ...
"""

from alphamean import (
    WeightSchedule,
    alpha_average,
    alpha_average_expanded,
    binomial_family_schedule,
    expanded_weights,
    geometric_mean,
)

xs = [3.0, 1.0, 4.0, 1.5, 9.0, 2.5]
print(f"series (oldest first): {xs}\n")

schedules = [
    ("arithmetic mean      a[s] = 1/(s+1)", WeightSchedule.arithmetic()),
    ("weighted mean        a[s] = 2/(s+2)", WeightSchedule.weighted_arithmetic()),
    ("exponential a = 0.5", WeightSchedule.constant(0.5)),
    ("binomial mu=2 nu=1   a[s] = 2/(s+3)", binomial_family_schedule(2, 1)),
]

for title, schedule in schedules:
    series = alpha_average(xs, schedule)
    print(title)
    print("  running averages:", " ".join(f"{d:8.4f}" for d in series.deltas))
    weights = expanded_weights(schedule, len(xs)).weights
    print("  coefficients:    ", " ".join(f"{w:8.4f}" for w in weights),
          f" (sum = {sum(weights):.12f})")
    print(f"  fold = {series.limit:.10f}   coefficient form = "
          f"{alpha_average_expanded(xs, schedule):.10f}\n")

print("The arithmetic schedule spreads weight evenly; the weighted one")
print("grows linearly with recency; a constant schedule decays the old")
print("coefficients geometrically, so recent values dominate.\n")

positive = [2.0, 8.0, 4.0]
print(f"geometric mean of {positive} (own update rule, not a blend fold):"
      f" {geometric_mean(positive):.6f}")

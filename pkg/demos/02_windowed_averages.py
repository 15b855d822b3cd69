"""Windowed averages: limited memory, restarted recursion.

A window of length N forgets everything older than its first element.
Because the initial condition moves with the window, each window is
folded independently; there is no rolling shortcut for a general weight
schedule.
"""

from alphamean import WeightSchedule, mea, moving_alpha_average, window_alpha_average

xs = [float(s) for s in range(1, 13)]  # the ramp 1, 2, ..., 12
N = 4

print(f"series: {xs}")
print(f"window length N = {N}\n")

for title, schedule in [
    ("arithmetic", WeightSchedule.arithmetic()),
    ("weighted", WeightSchedule.weighted_arithmetic()),
    ("exponential a=0.5", WeightSchedule.constant(0.5)),
]:
    series = moving_alpha_average(xs, N, schedule)
    print(f"{title:18s}", " ".join(f"{v:7.4f}" for v in series.values))

print("\nOn the ramp every windowed series climbs by exactly 1 per step:")
series = moving_alpha_average(xs, N, WeightSchedule.weighted_arithmetic())
steps = [round(b - a, 12) for a, b in zip(series.values, series.values[1:])]
print("  steps:", steps, "\n")

print("A single window is just the plain average of its slice:")
print("  window ending at 7:",
      window_alpha_average(xs, n=7, N=N, alpha=WeightSchedule.arithmetic()),
      "= mean of", xs[7 - N : 7], "\n")

print("For a constant weight the window value also has a summation form")
print("(the moving exponential average); both routes agree:")
direct = mea(xs, N, 0.5).values
recursion = moving_alpha_average(xs, N, WeightSchedule.constant(0.5)).values
worst = max(abs(u - v) for u, v in zip(direct, recursion))
print(f"  summation: {[round(v, 6) for v in direct[:5]]} ...")
print(f"  recursion: {[round(v, 6) for v in recursion[:5]]} ...")
print(f"  worst gap: {worst:.2e}")

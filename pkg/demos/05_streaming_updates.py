"""Streaming EMA updates match the batch computation bit for bit.

Because the blending weight is constant, tomorrow's average needs only
today's close and the old average; no history, no position counter.
"""

import random

from alphamean import CloseSeries, EmaStreamState, ema, ema_stream_update

rng = random.Random(2024)
closes = [round(rng.uniform(95, 105), 2) for _ in range(10)]

state = EmaStreamState.fresh(n=5, rho=2.0)
print(f"5-day EMA, weight = 2/(5+1) = {state.alpha:.4f}\n")
print(f"{'day':>4} {'close':>8} {'streaming EMA':>14}")
for day, close in enumerate(closes, start=1):
    state = ema_stream_update(state, close)
    print(f"{day:>4} {close:>8.2f} {state.current:>14.8f}")

batch = ema(CloseSeries.from_chronological(closes), 5, 2.0)
print(f"\nbatch over the same history: {batch:.8f}")
print(f"bit-identical: {state.current == batch}")

big = [rng.uniform(10, 1000) for _ in range(100_000)]
state = EmaStreamState.fresh(n=12)
for close in big:
    state = ema_stream_update(state, close)
print(f"\n100000-step replay, streaming == batch: "
      f"{state.current == ema(CloseSeries.from_chronological(big), 12)}")

"""The full MACD pipeline on a synthetic close series.

Builds five alternating 30-day trend legs, runs the (12, 26, 9) stack,
prints the buy/sell events and writes a plot-ready CSV next to this
script.  If matplotlib is installed a PNG chart is rendered as well.
"""

from pathlib import Path

from alphamean import (
    CloseSeries,
    IndicatorConfig,
    build_report,
    classify_days,
    crossover_events,
    macd,
    write_report,
)

closes = [100.0]
slope = 2.0
for _ in range(5):
    for _ in range(30):
        closes.append(closes[-1] + slope)
    slope = -slope

series = CloseSeries.from_chronological(closes)
config = IndicatorConfig(n1=12, n2=26, n0=9, rho=2.0)

states = classify_days(macd(series, config), config.n0, config.rho)
events = crossover_events(states)

print(f"{len(closes)} synthetic closes, five alternating 30-day trend legs")
print(f"config: short {config.n1}, long {config.n2}, signal {config.n0}, rho {config.rho}\n")
print("events (day, kind):", [(e.day_index, e.kind) for e in events])
print("positions:", " -> ".join([events[0].position_before] + [e.position_after for e in events]), "\n")

report = build_report(series, config)
out_csv = Path(__file__).with_name("macd_demo_report.csv")
out_csv.write_bytes(write_report(report, format="csv"))
print(f"wrote {out_csv.name} ({len(report.rows)} rows, plot-ready, oldest first)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the chart")
else:
    days = range(1, len(report.rows) + 1)
    fig, (top, bottom) = plt.subplots(2, 1, sharex=True, figsize=(9, 6))
    top.plot(days, [r.close for r in report.rows], label="close", color="black", lw=1)
    top.plot(days, [r.ema_short for r in report.rows], label=f"EMA {config.n1}")
    top.plot(days, [r.ema_long for r in report.rows], label=f"EMA {config.n2}")
    top.legend(loc="upper left")
    bottom.plot(days, [r.macd for r in report.rows], label="MACD")
    bottom.plot(days, [r.signal_ema for r in report.rows], label=f"signal EMA {config.n0}")
    bottom.axhline(0, color="grey", lw=0.5)
    for event in events:
        color = "green" if event.kind == "buy" else "red"
        bottom.axvline(event.day_index, color=color, ls="--", lw=1)
    bottom.legend(loc="upper left")
    out_png = Path(__file__).with_name("macd_demo_chart.png")
    fig.savefig(out_png, dpi=120, bbox_inches="tight")
    print(f"wrote {out_png.name}")

"""Reading close series and writing indicator reports.

CSV close files have a mandatory ``date,close`` header, UTF-8 text, dot
decimal separator and no thousands separators.  JSON close files are an
array of ``{"date": ..., "close": ...}`` objects where ``close`` is a
number literal.  In both formats the close must be a plain non-negative
decimal (no sign, no exponent); the literal text is preserved and echoed
verbatim on output.  Files may be oldest-first (the usual chart export)
or youngest-first; internally everything is youngest-first.

Reports are emitted oldest-first for plotting, one row per input day,
with indicator values formatted to six fractional digits so that output
bytes are stable across runs and platforms.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass
from typing import IO, Union

from alphamean.indicators import (
    CloseSeries,
    IndicatorConfig,
    classify_days,
    crossover_events,
    ema_series,
    macd,
    signal_line,
)
from alphamean.comparison import ReversedSeries

__all__ = [
    "CloseRecord",
    "ReportRow",
    "IndicatorReport",
    "read_closes",
    "write_closes",
    "build_report",
    "write_report",
]

FORMATS = ("csv", "json")
ORIENTATIONS = ("oldest-first", "youngest-first")

_CLOSE_RE = re.compile(r"[0-9]+(?:\.[0-9]+)?")
_REPORT_COLUMNS = ("label", "close", "ema_short", "ema_long", "macd", "signal_ema", "state", "event")


@dataclass(frozen=True)
class CloseRecord:
    """One parsed input row: opaque date label, close value, verbatim text."""

    label: str
    close: float
    text: str


@dataclass(frozen=True)
class ReportRow:
    """One output day of the indicator pipeline."""

    label: str
    close: float
    close_text: str
    ema_short: float
    ema_long: float
    macd: float
    signal_ema: float
    state: str
    event: str


@dataclass(frozen=True)
class IndicatorReport:
    """Chronological per-day indicator rows plus the config that made them."""

    config: IndicatorConfig
    rows: tuple[ReportRow, ...]


Source = Union[bytes, str, IO[bytes], IO[str]]


def _decode(source: Source) -> str:
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ValueError(f"input is not valid UTF-8: {exc}") from None
    if isinstance(data, str):
        return data
    raise TypeError(f"unsupported source type {type(data).__name__}")


def _check_choice(value: str, choices: tuple[str, ...], name: str) -> str:
    if value not in choices:
        raise ValueError(f"unknown {name} {value!r}; expected one of {choices}")
    return value


def _close_from_text(text: str, where: str) -> float:
    if _CLOSE_RE.fullmatch(text):
        value = float(text)
        if not math.isfinite(value):
            raise ValueError(f"{where}: close {text!r} overflows a double")
        return value
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"{where}: malformed close {text!r}") from None
    if value < 0:
        raise ValueError(f"{where}: negative close {text!r}")
    raise ValueError(f"{where}: close must be a plain non-negative decimal, got {text!r}")


def _canonical_close_text(value: float, where: str) -> str:
    text = repr(float(value))
    if not _CLOSE_RE.fullmatch(text):
        raise ValueError(f"{where}: close {value!r} has no plain decimal representation")
    return text


class _NumberLiteral(str):
    """Marks text that came from a JSON number literal."""


def _parse_csv(text: str) -> list[CloseRecord]:
    reader = csv.reader(io.StringIO(text))
    rows = []
    for row in reader:
        if row:
            rows.append((reader.line_num, [cell.strip() for cell in row]))
    if not rows:
        raise ValueError("empty input: no header row")
    header_line, header = rows[0]
    if header != ["date", "close"]:
        raise ValueError(f"line {header_line}: header must be exactly 'date,close', got {header!r}")
    records = []
    for line_num, cells in rows[1:]:
        if len(cells) != 2:
            raise ValueError(f"line {line_num}: expected 2 fields, got {len(cells)}")
        label, close_text = cells
        close = _close_from_text(close_text, f"line {line_num}")
        records.append(CloseRecord(label=label, close=close, text=close_text))
    return records


def _parse_json(text: str) -> list[CloseRecord]:
    try:
        data = json.loads(text, parse_float=_NumberLiteral, parse_int=_NumberLiteral)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(data, list):
        raise ValueError("JSON input must be a top-level array of {date, close} objects")
    records = []
    for i, item in enumerate(data, start=1):
        where = f"row {i}"
        if not isinstance(item, dict):
            raise ValueError(f"{where}: expected an object, got {type(item).__name__}")
        if "date" not in item or "close" not in item:
            raise ValueError(f"{where}: object needs 'date' and 'close' keys")
        label = item["date"]
        if not isinstance(label, str) or isinstance(label, _NumberLiteral):
            raise ValueError(f"{where}: 'date' must be a string")
        close_text = item["close"]
        if not isinstance(close_text, _NumberLiteral):
            raise ValueError(f"{where}: 'close' must be a number literal")
        close = _close_from_text(str(close_text), where)
        records.append(CloseRecord(label=label, close=close, text=str(close_text)))
    return records


def read_closes(source: Source, format: str = "csv", orientation: str = "oldest-first") -> CloseSeries:
    """Parse a close file into the canonical youngest-first series.

    Malformed rows raise ``ValueError`` naming the offending line (CSV)
    or row (JSON); negative closes and empty inputs are rejected.
    """
    _check_choice(format, FORMATS, "format")
    _check_choice(orientation, ORIENTATIONS, "orientation")
    text = _decode(source)
    records = _parse_csv(text) if format == "csv" else _parse_json(text)
    if not records:
        raise ValueError("empty input: no close records")
    if orientation == "oldest-first":
        records.reverse()
    return CloseSeries(
        ReversedSeries(tuple(r.close for r in records)),
        labels=tuple(r.label for r in records),
        texts=tuple(r.text for r in records),
    )


def _records_chronological(c: CloseSeries) -> list[CloseRecord]:
    n = len(c)
    closes = c.closes.to_chronological()
    labels = list(reversed(c.labels)) if c.labels is not None else [str(i) for i in range(1, n + 1)]
    if c.texts is not None:
        texts = list(reversed(c.texts))
    else:
        texts = [_canonical_close_text(v, f"day {i}") for i, v in enumerate(closes, start=1)]
    return [CloseRecord(label=l, close=v, text=t) for l, v, t in zip(labels, closes, texts)]


def write_closes(c: CloseSeries, format: str = "csv", orientation: str = "oldest-first") -> bytes:
    """Serialize a close series; inverse of :func:`read_closes`.

    Missing labels become 1-based day numbers; missing verbatim texts
    fall back to the shortest exact decimal form of the value.
    """
    _check_choice(format, FORMATS, "format")
    _check_choice(orientation, ORIENTATIONS, "orientation")
    records = _records_chronological(c)
    if orientation == "youngest-first":
        records.reverse()
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["date", "close"])
        for r in records:
            writer.writerow([r.label, r.text])
        return buf.getvalue().encode("utf-8")
    lines = ["["]
    for i, r in enumerate(records):
        comma = "," if i < len(records) - 1 else ""
        lines.append(f'  {{"date": {json.dumps(r.label)}, "close": {r.text}}}{comma}')
    lines.append("]")
    return ("\n".join(lines) + "\n").encode("utf-8")


def build_report(closes: CloseSeries, config: IndicatorConfig) -> IndicatorReport:
    """Run the full MACD pipeline and collect one row per input day."""
    records = _records_chronological(closes)
    e_short = list(reversed(ema_series(closes, config.n1, config.rho).values))
    e_long = list(reversed(ema_series(closes, config.n2, config.rho).values))
    m = macd(closes, config)
    m_chron = m.values.to_chronological()
    line = list(reversed(signal_line(m, config.n0, config.rho).values))
    states = classify_days(m, config.n0, config.rho)
    kind_by_day = {e.day_index: e.kind for e in crossover_events(states)}
    rows = tuple(
        ReportRow(
            label=rec.label,
            close=rec.close,
            close_text=rec.text,
            ema_short=e_short[i],
            ema_long=e_long[i],
            macd=m_chron[i],
            signal_ema=line[i],
            state=states[i],
            event=kind_by_day.get(i + 1, ""),
        )
        for i, rec in enumerate(records)
    )
    return IndicatorReport(config=config, rows=rows)


def write_report(report: IndicatorReport, format: str = "csv") -> bytes:
    """Serialize a report deterministically (stable bytes across runs).

    Indicator values carry exactly six fractional digits; closes are
    echoed verbatim; rows are oldest-first.
    """
    _check_choice(format, FORMATS, "format")
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_REPORT_COLUMNS)
        for row in report.rows:
            writer.writerow(
                [
                    row.label,
                    row.close_text,
                    f"{row.ema_short:.6f}",
                    f"{row.ema_long:.6f}",
                    f"{row.macd:.6f}",
                    f"{row.signal_ema:.6f}",
                    row.state,
                    row.event,
                ]
            )
        return buf.getvalue().encode("utf-8")
    cfg = report.config
    lines = [
        "{",
        f'  "meta": {{"n1": {cfg.n1}, "n2": {cfg.n2}, "n0": {cfg.n0}, "rho": {cfg.rho!r}}},',
        '  "rows": [',
    ]
    for i, row in enumerate(report.rows):
        comma = "," if i < len(report.rows) - 1 else ""
        lines.append(
            "    {"
            f'"label": {json.dumps(row.label)}, '
            f'"close": {row.close_text}, '
            f'"ema_short": {row.ema_short:.6f}, '
            f'"ema_long": {row.ema_long:.6f}, '
            f'"macd": {row.macd:.6f}, '
            f'"signal_ema": {row.signal_ema:.6f}, '
            f'"state": {json.dumps(row.state)}, '
            f'"event": {json.dumps(row.event)}'
            f"}}{comma}"
        )
    lines.append("  ]")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")

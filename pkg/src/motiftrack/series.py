"""Time-series container, normalization, and the Euclidean distance primitive."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """An ordered sequence of finite real (or integer-valued) observations."""

    values: np.ndarray
    label: str | None = None

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("empty input")
        if not np.all(np.isfinite(arr)):
            raise ValueError("values must be finite")
        arr = arr + 0.0  # fold -0.0 into +0.0 so equal values hash equally
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True, eq=False)
class NormalizedSeries:
    """A z-normalized series plus the statistics that produced it."""

    values: np.ndarray
    mean_used: float
    std_used: float

    def __len__(self) -> int:
        return int(self.values.size)


def z_normalize(series: TimeSeries) -> NormalizedSeries:
    """Globally z-normalize a series.

    Uses the population standard deviation (divide by m, not m-1).  A
    constant series maps to all zeros and reports std_used = 0 rather than
    erroring; a constant run is valid input and yields a single repeated
    symbol downstream.
    """
    arr = series.values
    mean = float(arr.mean())
    std = float(arr.std())
    if std == 0.0:
        out = np.zeros_like(arr)
    else:
        out = (arr - mean) / std
    out.flags.writeable = False
    return NormalizedSeries(out, mean, std if std > 0.0 else 0.0)


def euclidean_distance(x, y) -> float:
    """Plain Euclidean distance between two equal-length vectors."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError("dimension mismatch")
    return float(np.sqrt(np.sum((x - y) ** 2)))


def load_series_text(text: str, label: str | None = None) -> TimeSeries:
    """Parse the one-number-per-line series format.

    Blank lines and lines starting with '#' are ignored.  Values may be
    integers or decimals.
    """
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ValueError(f"line {lineno}: not a number: {line!r}") from None
    if not values:
        raise ValueError("empty input")
    return TimeSeries(np.array(values, dtype=np.float64), label=label)


def load_series_file(path) -> TimeSeries:
    with open(path, "r", encoding="utf-8") as fh:
        return load_series_text(fh.read(), label=str(path))


def dump_series_text(values) -> str:
    """Render values in the series file format, integers without a decimal point."""
    lines = []
    for v in np.asarray(values, dtype=np.float64):
        f = float(v)
        lines.append(str(int(f)) if f.is_integer() else repr(f))
    return "\n".join(lines) + "\n"

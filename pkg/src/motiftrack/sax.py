"""Symbol-matrix construction.

A normalized series is discretized one sliding window at a time: the mean of
each length-s window is bucketed against equiprobable Gaussian breakpoints
and rendered as a single alphabet symbol.  Multi-symbol words are assembled
later by the tracker engine, so there is no frame-wise PAA step here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import norm

from .series import NormalizedSeries

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class SaxConfig:
    """symbol_length is the number of points per symbol window."""

    symbol_length: int
    alphabet_size: int

    def __post_init__(self):
        if self.symbol_length < 1:
            raise ValueError("symbol length must be positive")
        if self.alphabet_size < 2:
            raise ValueError("alphabet too small")
        if self.alphabet_size > len(ALPHABET):
            raise ValueError("alphabet too large (symbols render as a-z)")


@dataclass(frozen=True)
class Breakpoints:
    cuts: tuple[float, ...]


def gaussian_breakpoints(alphabet_size: int) -> Breakpoints:
    """Breakpoints carving N(0,1) into alphabet_size equal-probability areas.

    cut[i] is the (i+1)/a quantile of the standard normal distribution.
    """
    if alphabet_size < 2:
        raise ValueError("alphabet too small")
    qs = np.arange(1, alphabet_size) / alphabet_size
    return Breakpoints(tuple(float(c) for c in norm.ppf(qs)))


def window_symbol(window, cuts: Breakpoints) -> int:
    """Bucket index of the window mean; bucket 0 is lowest.

    A mean sitting exactly on a cut goes to the higher bucket, so the index
    is the count of cuts <= mean.  The tie rule must be fixed globally:
    integer-valued data lands exactly on breakpoints after normalization.
    """
    mean = float(np.mean(np.asarray(window, dtype=np.float64)))
    return int(np.searchsorted(cuts.cuts, mean, side="right"))


@dataclass(frozen=True)
class SymbolMatrix:
    """One symbol per sliding window; symbols[i] encodes the window at point i."""

    symbols: str
    config: SaxConfig
    series_length: int

    def __len__(self) -> int:
        return len(self.symbols)


def build_symbol_matrix(norm_series: NormalizedSeries, config: SaxConfig) -> SymbolMatrix:
    """Symbolize every length-s sliding window of a normalized series.

    Produces exactly m - s + 1 symbols.  Window means are computed per
    window (not via running sums) so that element-wise equal windows always
    produce bit-identical means and therefore identical symbols.
    """
    s = config.symbol_length
    values = norm_series.values
    m = len(values)
    if m < s:
        raise ValueError("series shorter than symbol length")
    cuts = np.asarray(gaussian_breakpoints(config.alphabet_size).cuts)
    windows = np.lib.stride_tricks.sliding_window_view(values, s)
    means = windows.mean(axis=1)
    idx = np.searchsorted(cuts, means, side="right")
    symbols = "".join(ALPHABET[int(k)] for k in idx)
    return SymbolMatrix(symbols, config, m)

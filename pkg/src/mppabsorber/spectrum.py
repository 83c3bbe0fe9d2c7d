"""Absorption spectra and effective-band extraction.

The effective absorption band is the longest contiguous frequency interval
with alpha >= threshold (0.8 by default). Band edges are refined by linear
interpolation between the boundary grid point and its sub-threshold
neighbour, so reported cutoffs are finer than the grid step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_GRID",
    "AbsorptionSpectrum",
    "EffectiveBand",
    "FrequencyGrid",
    "effective_band",
    "effective_bands",
    "mean_alpha",
    "octave_bands",
]


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform frequency grid: f_min, f_min + step, ... up to f_max (Hz)."""

    f_min: float
    f_max: float
    step: float

    def __post_init__(self):
        if not 0 < self.f_min < self.f_max:
            raise ValueError(
                f"require 0 < f_min < f_max, got ({self.f_min}, {self.f_max})"
            )
        if self.step <= 0:
            raise ValueError(f"step must be positive, got {self.step}")

    def frequencies(self) -> np.ndarray:
        # round-tolerant count so f_max is included when it lands on a step
        n = int(math.floor((self.f_max - self.f_min) / self.step + 1e-9)) + 1
        return self.f_min + self.step * np.arange(n)

    def refined(self, factor: int = 2) -> "FrequencyGrid":
        """Same span with the step divided by `factor`."""
        return FrequencyGrid(self.f_min, self.f_max, self.step / factor)


# 1 Hz resolution resolves the sub-10 Hz cutoffs of wideband designs; 2 kHz
# stays below the first cross-mode cut-on of the widest chamber considered,
# keeping the plane-wave model valid.
DEFAULT_GRID = FrequencyGrid(1.0, 2000.0, 1.0)


@dataclass(frozen=True, eq=False)
class AbsorptionSpectrum:
    """Parallel arrays of frequency (Hz, strictly increasing) and alpha."""

    frequencies: np.ndarray
    alphas: np.ndarray

    def __post_init__(self):
        freqs = np.asarray(self.frequencies, dtype=float)
        alphas = np.asarray(self.alphas, dtype=float)
        if freqs.shape != alphas.shape or freqs.ndim != 1 or freqs.size == 0:
            raise ValueError("frequencies and alphas must be equal-length 1-D arrays")
        if not np.all(np.diff(freqs) > 0):
            raise ValueError("frequencies must be strictly increasing")
        if np.any(alphas < 0.0) or np.any(alphas > 1.0):
            raise ValueError("alpha values must lie in [0, 1]")
        object.__setattr__(self, "frequencies", freqs)
        object.__setattr__(self, "alphas", alphas)

    def __len__(self) -> int:
        return self.frequencies.size


@dataclass(frozen=True)
class EffectiveBand:
    """A contiguous alpha >= threshold interval with its summary measures."""

    f_low: float
    f_high: float
    width: float
    octaves: float
    mean_alpha: float


def octave_bands(f_low: float, f_high: float) -> float:
    """Number of octaves spanned: log2(f_high / f_low)."""
    if f_low <= 0 or f_high <= 0:
        raise ValueError(f"frequencies must be positive, got ({f_low}, {f_high})")
    if f_high <= f_low:
        raise ValueError(f"require f_low < f_high, got ({f_low}, {f_high})")
    return math.log2(f_high / f_low)


def _runs_at_or_above(alphas: np.ndarray, threshold: float) -> list[tuple[int, int]]:
    """Inclusive (start, end) index pairs of maximal runs with alpha >= threshold."""
    qualifying = alphas >= threshold
    padded = np.concatenate(([False], qualifying, [False]))
    edges = np.flatnonzero(np.diff(padded.astype(np.int8)))
    return [(int(s), int(e) - 1) for s, e in zip(edges[::2], edges[1::2])]


def _interpolated_band(
    spectrum: AbsorptionSpectrum, start: int, end: int, threshold: float
) -> EffectiveBand:
    freqs, alphas = spectrum.frequencies, spectrum.alphas
    if start > 0:
        # crossing point where the linear segment reaches the threshold
        f_low = freqs[start - 1] + (threshold - alphas[start - 1]) / (
            alphas[start] - alphas[start - 1]
        ) * (freqs[start] - freqs[start - 1])
    else:
        f_low = freqs[0]
    if end < len(freqs) - 1:
        f_high = freqs[end] + (alphas[end] - threshold) / (
            alphas[end] - alphas[end + 1]
        ) * (freqs[end + 1] - freqs[end])
    else:
        f_high = freqs[-1]
    f_low = float(f_low)
    f_high = float(f_high)
    octaves = math.log2(f_high / f_low) if f_high > f_low else 0.0
    return EffectiveBand(
        f_low=f_low,
        f_high=f_high,
        width=f_high - f_low,
        octaves=octaves,
        mean_alpha=float(np.mean(alphas[start : end + 1])),
    )


def effective_bands(
    spectrum: AbsorptionSpectrum, threshold: float = 0.8
) -> list[EffectiveBand]:
    """All alpha >= threshold bands in ascending frequency order."""
    if not 0 < threshold < 1:
        raise ValueError(f"threshold must be in (0, 1), got {threshold}")
    return [
        _interpolated_band(spectrum, start, end, threshold)
        for start, end in _runs_at_or_above(spectrum.alphas, threshold)
    ]


def effective_band(
    spectrum: AbsorptionSpectrum, threshold: float = 0.8
) -> EffectiveBand | None:
    """The longest effective band, or None if no grid point qualifies.

    Band length is counted in grid points; ties go to the lower-frequency
    run. Edges are interpolated to alpha == threshold exactly (except at the
    grid boundary, where the grid edge is used).
    """
    if not 0 < threshold < 1:
        raise ValueError(f"threshold must be in (0, 1), got {threshold}")
    runs = _runs_at_or_above(spectrum.alphas, threshold)
    if not runs:
        return None
    start, end = max(runs, key=lambda run: (run[1] - run[0], -run[0]))
    return _interpolated_band(spectrum, start, end, threshold)


def mean_alpha(spectrum: AbsorptionSpectrum, band: EffectiveBand) -> float:
    """Arithmetic mean of alpha over grid points inside [f_low, f_high]."""
    inside = (spectrum.frequencies >= band.f_low) & (spectrum.frequencies <= band.f_high)
    if not np.any(inside):
        raise ValueError(
            f"band ({band.f_low}, {band.f_high}) contains no grid point"
        )
    return float(np.mean(spectrum.alphas[inside]))

"""Monte-Carlo decode validation: Gaussian channel noise, nearest-color decoding, SER."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .errors import DomainError, SizedOnlyPaletteError, TooFewColorsError
from .palette import Color, Palette

# Counter-based random stream: lane j of trial t is splitmix64 evaluated at
# position 4*t + j + 1 from an initial state of `seed`. Every draw depends
# only on (seed, trial, lane), so any chunking or parallel split of the trial
# range produces bit-identical results.
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _lane_uniforms(seed: int, lo: int, hi: int, lane: int) -> np.ndarray:
    """Uniforms in (0, 1) for trials [lo, hi) on one of the four lanes."""
    t = np.arange(lo, hi, dtype=np.uint64)
    counter = (np.uint64(4) * t + np.uint64(lane + 1)) * _GAMMA
    bits = _mix64(np.uint64(seed & _MASK64) + counter)
    return ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


@dataclass(frozen=True)
class ChannelModel:
    """Additive per-channel Gaussian noise with a seeded trial budget."""

    sigma: float
    seed: int = 0
    trials: int = 1

    def __post_init__(self):
        if self.sigma < 0:
            raise DomainError(f"sigma must be >= 0, got {self.sigma}")
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials}")


@dataclass(frozen=True)
class SimResult:
    """Symbol error rate estimate with its 95% normal-approximation half-width."""

    ser: float
    errors: int
    trials: int
    half_width_95: float


def _round_half_away(x: np.ndarray) -> np.ndarray:
    return np.where(x >= 0, np.floor(x + 0.5), np.ceil(x - 0.5))


def perturb(c: Color, sigma: float, draws: tuple[float, float, float]) -> Color:
    """Apply channel noise sigma*draw to each channel, round half away from zero, clamp."""
    if sigma < 0:
        raise DomainError(f"sigma must be >= 0, got {sigma}")
    x = np.asarray(c.as_tuple(), dtype=np.float64) + sigma * np.asarray(draws, dtype=np.float64)
    clipped = np.clip(_round_half_away(x), 0, 255)
    return Color(*(int(v) for v in clipped))


def decode_nearest(observed: Color, p: Palette) -> int:
    """Index of the palette color closest to the observation; ties go to the lowest index."""
    if p.is_sized_only:
        raise SizedOnlyPaletteError(f"palette {p.name!r} has no explicit colors")
    arr = np.array([c.as_tuple() for c in p.colors], dtype=np.int64)
    dists = np.abs(arr - np.asarray(observed.as_tuple())).sum(axis=1)
    return int(np.argmin(dists))


def _run_chunk(colors: np.ndarray, sigma: float, seed: int, lo: int, hi: int) -> int:
    n = len(colors)
    u_index = _lane_uniforms(seed, lo, hi, 0)
    true_idx = np.minimum((u_index * n).astype(np.int64), n - 1)
    sent = colors[true_idx].astype(np.float64)
    observed = np.empty_like(sent)
    for ch in range(3):
        draws = ndtri(_lane_uniforms(seed, lo, hi, 1 + ch))
        observed[:, ch] = np.clip(_round_half_away(sent[:, ch] + sigma * draws), 0, 255)
    dists = np.abs(observed[:, None, :] - colors[None, :, :]).sum(axis=2)
    decoded = np.argmin(dists, axis=1)  # first minimum = lowest index, as decode_nearest
    return int((decoded != true_idx).sum())


def symbol_error_rate(p: Palette, model: ChannelModel, workers: int = 1) -> SimResult:
    """Monte-Carlo symbol error rate of nearest-color decoding under channel noise.

    Each trial draws a uniformly random true color, perturbs it with the
    model's Gaussian noise, and decodes by minimum color difference; a decode
    tie counts as a success only when it lands on the true index. Trials use
    counter-based per-trial streams keyed on (seed, trial), so the result is
    bit-identical for any `workers` count or chunking of the trial range.
    """
    if p.is_sized_only:
        raise SizedOnlyPaletteError(f"palette {p.name!r} has no explicit colors")
    if len(p.colors) < 2:
        raise TooFewColorsError(f"palette {p.name!r} needs >= 2 colors to simulate")
    colors = np.array([c.as_tuple() for c in p.colors], dtype=np.int64)
    trials = model.trials
    workers = max(1, workers)
    bounds = np.linspace(0, trials, workers + 1).astype(int)
    spans = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    if len(spans) == 1:
        errors = _run_chunk(colors, model.sigma, model.seed, *spans[0])
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            futures = [
                pool.submit(_run_chunk, colors, model.sigma, model.seed, lo, hi)
                for lo, hi in spans
            ]
            errors = sum(f.result() for f in futures)  # order-independent sum
    ser = errors / trials
    half_width = 1.96 * math.sqrt(ser * (1.0 - ser) / trials)
    return SimResult(ser=ser, errors=errors, trials=trials, half_width_95=half_width)

"""Entropy and information-capacity measures for color and pattern alphabets."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from .errors import DomainError

Mode = Literal["paper", "shannon"]

_MODES = ("paper", "shannon")

# Probability vectors must total 1 within this tolerance.
PROB_TOLERANCE = 1e-9


def self_information(p: float) -> float:
    """Bits of information revealed by an event of probability p, log2(1/p)."""
    if not 0.0 < p <= 1.0:
        raise DomainError(f"probability must lie in (0, 1], got {p}")
    return -math.log2(p)


def palette_entropy(n: int, mode: Mode = "paper") -> float:
    """Per-symbol entropy of a uniform alphabet of n equiprobable colors.

    Two conventions are exposed. "shannon" is the textbook uniform-source
    entropy log2(n). "paper" scales it by the alphabet size, n*log2(n); it is
    the convention the bundled HCCB comparison set and the entropy-gain
    figures are stated in, so it is the default wherever those are
    reproduced. Both are 0 at n=1.
    """
    if mode not in _MODES:
        raise DomainError(f"mode must be one of {_MODES}, got {mode!r}")
    if n < 1:
        raise DomainError(f"alphabet size must be >= 1, got {n}")
    return n * math.log2(n) if mode == "paper" else math.log2(n)


def entropy_gain(n2: int, n1: int, mode: Mode = "paper") -> float:
    """Entropy added per symbol by growing a palette from n1 to n2 colors (n2 > n1 >= 1)."""
    if n1 < 1:
        raise DomainError(f"n1 must be >= 1, got {n1}")
    if n2 <= n1:
        raise DomainError(f"need n2 > n1, got n2={n2}, n1={n1}")
    return palette_entropy(n2, mode) - palette_entropy(n1, mode)


@dataclass(frozen=True)
class AlphabetSpec:
    """Sizes of the color and pattern alphabets of a symbology."""

    n_colors: int
    n_patterns: int

    def __post_init__(self):
        if self.n_colors < 1 or self.n_patterns < 1:
            raise DomainError(
                f"alphabet sizes must be >= 1, got {self.n_colors}x{self.n_patterns}"
            )


def joint_alphabet_entropy(spec: AlphabetSpec) -> float:
    """Entropy of the combined alphabet when every pattern can take every color.

    The alphabet size becomes n_colors*n_patterns and the size-scaled
    convention applies to the product: (Nc*Np)*log2(Nc*Np).
    """
    return palette_entropy(spec.n_colors * spec.n_patterns, "paper")


def product_entropy(spec: AlphabetSpec) -> float:
    """Product form (Nc*log2 Nc)*(Np*log2 Np) for differing color/pattern distributions.

    This is not an entropy in the additive sense; its units are bits^2.
    Report surfaces label it "paper-form, non-additive" so it cannot be
    mistaken for joint_alphabet_entropy.
    """
    return palette_entropy(spec.n_colors, "paper") * palette_entropy(spec.n_patterns, "paper")


def _as_probability_array(values, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise DomainError(f"{what}: must be non-empty")
    if np.any(arr < 0):
        raise DomainError(f"{what}: probabilities must be non-negative")
    total = float(arr.sum())
    if abs(total - 1.0) > PROB_TOLERANCE:
        raise DomainError(f"{what}: probabilities sum to {total!r}, expected 1")
    return arr


@dataclass(frozen=True)
class Distribution:
    """A finite probability distribution (entries >= 0, summing to 1)."""

    probabilities: tuple[float, ...]

    def __post_init__(self):
        arr = _as_probability_array(self.probabilities, "Distribution")
        if arr.ndim != 1:
            raise DomainError("Distribution: probabilities must be a flat sequence")
        object.__setattr__(self, "probabilities", tuple(float(x) for x in arr))


@dataclass(frozen=True)
class JointDistribution:
    """A joint distribution over (pattern, color), stored pattern-major."""

    probabilities: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        arr = np.asarray(self.probabilities, dtype=float)
        if arr.ndim != 2:
            raise DomainError("JointDistribution: probabilities must be a 2-D matrix")
        _as_probability_array(arr, "JointDistribution")
        object.__setattr__(
            self, "probabilities", tuple(tuple(float(x) for x in row) for row in arr)
        )

    def as_array(self) -> np.ndarray:
        return np.asarray(self.probabilities, dtype=float)


def _entropy_of(p: np.ndarray) -> float:
    nz = p > 0  # 0*log(0) = 0 by convention
    return float(-(p[nz] * np.log2(p[nz])).sum())


def distribution_entropy(d: Distribution) -> float:
    """Shannon entropy -sum p_i log2 p_i in bits."""
    return _entropy_of(np.asarray(d.probabilities))


class EntropyDecomposition(NamedTuple):
    h_pattern: float
    h_color_given_pattern: float
    h_joint: float


def joint_decomposition(j: JointDistribution) -> EntropyDecomposition:
    """Split the joint (pattern, color) entropy as H(pattern) + H(color | pattern).

    The conditional term is computed directly from the conditional
    distributions rather than by subtraction, so the chain-rule identity
    h_joint == h_pattern + h_color_given_pattern is a genuine cross-check.
    The color marginal is computed internally to verify that conditioning
    never increases entropy.
    """
    joint = j.as_array()
    h_joint = _entropy_of(joint)
    p_pattern = joint.sum(axis=1)
    h_pattern = _entropy_of(p_pattern)

    # H(color | pattern) = -sum_{p,c} P(p,c) * log2(P(p,c) / P(p))
    safe_marginal = np.where(p_pattern > 0, p_pattern, 1.0)
    conditional = joint / safe_marginal[:, None]
    nz = joint > 0
    h_conditional = float(-(joint[nz] * np.log2(conditional[nz])).sum())

    h_color = _entropy_of(joint.sum(axis=0))
    if h_color < h_conditional - 1e-9:
        raise DomainError(
            "conditioning increased entropy; joint distribution is numerically inconsistent"
        )
    return EntropyDecomposition(h_pattern, h_conditional, h_joint)

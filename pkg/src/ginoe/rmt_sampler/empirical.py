"""Empirical CDFs with Wilson score intervals."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

Z95 = 1.959963984540054


class LawKind(enum.Enum):
    MAX_REAL = "MAX_REAL"
    COMPLEX_RADIUS = "COMPLEX_RADIUS"


@dataclass(frozen=True)
class EmpiricalLaw:
    ts: np.ndarray
    counts_at_or_below: np.ndarray
    total: int
    kind: LawKind

    @property
    def probabilities(self) -> np.ndarray:
        return self.counts_at_or_below / self.total

    def wilson_half_widths(self, z: float = Z95) -> np.ndarray:
        """Half-width of the Wilson score interval at each t."""
        n = float(self.total)
        p = self.probabilities
        return z / (1.0 + z * z / n) * np.sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n))

    def wilson_centres(self, z: float = Z95) -> np.ndarray:
        n = float(self.total)
        return (self.probabilities + z * z / (2.0 * n)) / (1.0 + z * z / n)

    def merge(self, other: "EmpiricalLaw") -> "EmpiricalLaw":
        if self.kind is not other.kind or not np.array_equal(self.ts, other.ts):
            raise ValueError("can only merge laws on the same grid and kind")
        return EmpiricalLaw(self.ts, self.counts_at_or_below + other.counts_at_or_below, self.total + other.total, self.kind)


def empirical_cdf(values, ts, kind: LawKind = LawKind.MAX_REAL) -> EmpiricalLaw:
    """Count values <= t for each t; ``None`` (an empty maximum) counts as -inf."""
    ts = np.asarray(ts, dtype=float)
    if np.any(np.diff(ts) < 0):
        raise ValueError("ts must be sorted")
    v = np.array([-math.inf if x is None else float(x) for x in values], dtype=float)
    v.sort()
    counts = np.searchsorted(v, ts, side="right").astype(np.int64)
    return EmpiricalLaw(ts, counts, int(v.size), kind)

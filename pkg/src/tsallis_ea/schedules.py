"""Deterministic per-generation parameter schedules.

The inverse temperature follows the Cauchy annealing schedule

    beta_t = beta0 * sum_{i=1..t} 1 / i**alpha,    t = 1, 2, ...

whose partial sums form a bounded, strictly increasing Cauchy sequence
for alpha > 1.  The non-extensive index q decays affinely from q0 at
generation 0 down to exactly 1 at generation ``horizon - 1``, unless
``constant_q`` pins it at q0 for the whole run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ScheduleConfig:
    """Annealing parameters shared by one run.

    Attributes:
        beta0: initial inverse temperature, > 0.
        alpha: decay exponent of the Cauchy sum, > 1 so the sums converge.
        q0: initial non-extensive index (1.0 reproduces pure Boltzmann).
        horizon: number of generations the q schedule spans, >= 1.
        constant_q: hold q at q0 instead of decaying it toward 1.
    """

    beta0: float = 200.0
    alpha: float = 1.01
    q0: float = 1.0
    horizon: int = 100
    constant_q: bool = False

    def __post_init__(self) -> None:
        if not self.beta0 > 0:
            raise ValueError(f"beta0 must be > 0, got {self.beta0}")
        if not self.alpha > 1:
            raise ValueError(f"alpha must be > 1, got {self.alpha}")
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")
        if not np.isfinite(self.q0):
            raise ValueError(f"q0 must be finite, got {self.q0}")


def cauchy_beta(t: int, cfg: ScheduleConfig) -> float:
    """Inverse temperature at generation t = 1, 2, ... (direct partial sum)."""
    if t < 1:
        raise ValueError(f"beta schedule is defined for t >= 1, got t={t}")
    terms = np.arange(1, t + 1, dtype=np.float64) ** -cfg.alpha
    return cfg.beta0 * float(np.sum(terms))


def cauchy_beta_sequence(t_max: int, cfg: ScheduleConfig) -> np.ndarray:
    """All of beta_1 .. beta_{t_max} at once, summed in index order."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    terms = np.arange(1, t_max + 1, dtype=np.float64) ** -cfg.alpha
    return cfg.beta0 * np.cumsum(terms)


def linear_q(t: int, cfg: ScheduleConfig) -> float:
    """Non-extensive index at generation t = 0 .. horizon-1.

    Affine interpolation from q0 at t=0 to exactly 1 at t=horizon-1,
    evaluated as a convex combination so both endpoints are exact in
    floating point.  With ``constant_q`` set, returns q0 throughout.
    """
    T = cfg.horizon
    if not 0 <= t <= T - 1:
        raise ValueError(f"q schedule is defined for 0 <= t <= {T - 1}, got t={t}")
    if cfg.constant_q or T == 1:
        return cfg.q0
    u = t / (T - 1)
    return cfg.q0 * (1.0 - u) + u

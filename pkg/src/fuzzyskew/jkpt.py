"""Quantile-based skewness of fuzzy numbers (JKPT1 point form, JKPT2 integral form).

The lower curve is read as the quantile function of a left random variable
and the upper curve, with alpha reversed, as that of a right random variable.
The "inner" constituent averages Groeneveld-Meeden skewness of these two
variables; the "outer" constituent measures asymmetry of the cut profile
around the core.  Both lie in [-1, 1], so does any convex mix of them.

Every ratio returns 0 when its denominator vanishes (crisp or flat input).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FuzzyNumber, joint_grid
from .quadrature import split_at_half

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class JkptConfig:
    alpha: float = 0.25
    v: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.alpha <= 0.5:
            raise ValueError(f"alpha must lie in (0, 0.5], got {self.alpha}")
        if not 0.0 <= self.v <= 1.0:
            raise ValueError(f"v must lie in [0, 1], got {self.v}")


def _ratio(num: float, den: float, scale: float) -> float:
    # A denominator at rounding-noise level means a flat (symmetric) piece.
    if abs(den) <= 64.0 * _EPS * max(scale, 1e-300):
        return 0.0
    return num / den


def _scale(*xs: float) -> float:
    return max(abs(x) for x in xs)


def gm1_lower(f: FuzzyNumber, alpha: float) -> float:
    d = f.lower
    lo, mid, hi = float(d(alpha)), float(d(0.5)), float(d(1.0 - alpha))
    return _ratio(hi + lo - 2.0 * mid, hi - lo, _scale(lo, mid, hi))


def gm1_upper(f: FuzzyNumber, alpha: float) -> float:
    u = f.upper
    hi, mid, lo = float(u(alpha)), float(u(0.5)), float(u(1.0 - alpha))
    return _ratio(hi + lo - 2.0 * mid, hi - lo, _scale(lo, mid, hi))


def inner_point(f: FuzzyNumber, alpha: float) -> float:
    return 0.5 * (gm1_lower(f, alpha) + gm1_upper(f, alpha))


def outer_point(f: FuzzyNumber, alpha: float) -> float:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    d, u = float(f.lower(alpha)), float(f.upper(alpha))
    m_lo, m_hi = float(f.lower.xs[-1]), float(f.upper.xs[-1])
    return _ratio((d - m_lo) + (u - m_hi), u - d, _scale(d, u, m_lo, m_hi))


def jkpt1(f: FuzzyNumber, cfg: JkptConfig = JkptConfig()) -> float:
    return cfg.v * outer_point(f, cfg.alpha) + (1.0 - cfg.v) * inner_point(f, cfg.alpha)


def _halves(f: FuzzyNumber):
    a, lo, up = joint_grid(f, extra=(0.5,))
    lo_a, lo_b = split_at_half(a, lo)
    up_a, up_b = split_at_half(a, up)
    return a, lo, up, (lo_a, lo_b), (up_a, up_b)


def gm2_lower(f: FuzzyNumber) -> float:
    # int_0^.5 d(1-a) da == int_.5^1 d(a) da
    a, lo, _, (first, second), _ = _halves(f)
    mid = float(f.lower(0.5))
    return _ratio(second + first - mid, second - first, float(np.max(np.abs(lo))))


def gm2_upper(f: FuzzyNumber) -> float:
    a, _, up, _, (first, second) = _halves(f)
    mid = float(f.upper(0.5))
    return _ratio(first + second - mid, first - second, float(np.max(np.abs(up))))


def inner_integral(f: FuzzyNumber) -> float:
    return 0.5 * (gm2_lower(f) + gm2_upper(f))


def outer_integral(f: FuzzyNumber) -> float:
    a, lo, up, (lo_first, _), (up_first, _) = _halves(f)
    m_lo, m_hi = float(f.lower.xs[-1]), float(f.upper.xs[-1])
    num = (lo_first - 0.5 * m_lo) + (up_first - 0.5 * m_hi)
    den = up_first - lo_first
    return _ratio(num, den, float(max(np.max(np.abs(lo)), np.max(np.abs(up)))))


def jkpt2(f: FuzzyNumber, v: float = 0.5) -> float:
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"v must lie in [0, 1], got {v}")
    return v * outer_integral(f) + (1.0 - v) * inner_integral(f)

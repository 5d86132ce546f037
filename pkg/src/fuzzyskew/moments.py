"""Possibilistic mean and the moment-based VB13 / LGY15 coefficient families.

All integrals are computed segment by segment: linear integrands with the
trapezoid rule, higher-degree ones with 3-point Gauss-Legendre.  Both are exact
for piecewise-linear alpha-curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import FuzzyNumber, joint_grid
from .errors import DegenerateInputError
from .quadrature import gauss_nodes, integrate_linear


@dataclass(frozen=True)
class MomentPanel:
    mean: float
    dispersion: float
    skewness: float
    family: Literal["VB13", "LGY15"]


def _gauss_samples(f: FuzzyNumber):
    a, lo, up = joint_grid(f)
    q, w = gauss_nodes(a)
    return q, w, np.interp(q, a, lo), np.interp(q, a, up)


def possibilistic_mean(f: FuzzyNumber) -> float:
    """Average of the integrals of the lower and upper alpha-curves."""
    a, lo, up = joint_grid(f)
    return 0.5 * (integrate_linear(a, lo) + integrate_linear(a, up))


def vb13_omega(f: FuzzyNumber) -> float:
    """Downside risk: integral of the alpha-cut width."""
    a, lo, up = joint_grid(f)
    return integrate_linear(a, up - lo)


def vb13_mu3(f: FuzzyNumber) -> float:
    """Third possibilistic moment about the possibilistic mean."""
    e = possibilistic_mean(f)
    _, w, lo, up = _gauss_samples(f)
    dl, du = lo - e, up - e
    return 0.5 * float(w @ (dl * dl * dl + du * du * du))


def vb13_skewness(f: FuzzyNumber) -> float:
    omega = vb13_omega(f)
    if omega <= 0.0:
        raise DegenerateInputError("VB13 skewness is undefined for a crisp number (omega = 0)")
    return vb13_mu3(f) / omega**3


def vb13_panel(f: FuzzyNumber) -> MomentPanel:
    return MomentPanel(possibilistic_mean(f), vb13_omega(f), vb13_skewness(f), "VB13")


def lgy15_mean(f: FuzzyNumber) -> float:
    q, w, lo, up = _gauss_samples(f)
    return float(w @ (q * (lo + up)))


def lgy15_variance(f: FuzzyNumber) -> float:
    e = lgy15_mean(f)
    q, w, lo, up = _gauss_samples(f)
    dl, du = lo - e, up - e
    return float(w @ (q * (dl * dl + du * du)))


def lgy15_skewness(f: FuzzyNumber) -> float:
    # Deliberately unnormalised: this is the coefficient as published.
    e = lgy15_mean(f)
    q, w, lo, up = _gauss_samples(f)
    dl, du = lo - e, up - e
    return float(w @ (q * (dl * dl * dl + du * du * du)))


def lgy15_panel(f: FuzzyNumber) -> MomentPanel:
    return MomentPanel(lgy15_mean(f), lgy15_variance(f), lgy15_skewness(f), "LGY15")

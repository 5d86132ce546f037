"""Threshold-constrained portfolio optimisation (TCPO) by exhaustive simplex search.

Every weight vector ``(k1/r, ..., kn/r)`` with nonnegative integer ``k`` summing
to ``r`` is evaluated.  Two of (mean, dispersion, skewness) act as thresholds
and the third is optimised:

============  ====================  =====================================
mode          objective             constraints
============  ====================  =====================================
max_skew      maximise skewness     mean >= rho, dispersion <= beta
max_mean      maximise mean         dispersion <= beta, skewness >= gamma
min_variance  minimise dispersion   mean >= rho, skewness >= gamma
============  ====================  =====================================

Ties within 1e-12 (relative to the optimum, absolute below magnitude 1) go to
the lexicographically smallest weight vector, so results do not depend on
evaluation order or worker count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Literal, Sequence

import numpy as np

from . import jkpt, moments
from .core import FuzzyNumber, union_grid, weighted_sum
from .errors import DegenerateInputError, InfeasibleError
from .quadrature import gauss_nodes, split_at_half, trapezoid_weights

Coefficient = Literal["jkpt1", "jkpt2", "vb13", "lgy15"]
Mode = Literal["max_skew", "max_mean", "min_variance"]

MODES: tuple[str, ...] = ("max_skew", "max_mean", "min_variance")
MODE_ALIASES = {"skew": "max_skew", "mean": "max_mean", "var": "min_variance"}
TIE_TOL = 1e-12

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class SkewConfig:
    """Which skewness coefficient to use, with its parameters.

    ``dispersion`` defaults to ``"omega"`` for the JKPT and VB13 families and
    to ``"lgy15"`` (the LGY15 variance) for LGY15 runs.
    """

    coef: Coefficient = "jkpt1"
    alpha: float = 0.25
    v: float = 0.5
    dispersion: Literal["omega", "lgy15"] | None = None

    def __post_init__(self):
        if self.coef not in ("jkpt1", "jkpt2", "vb13", "lgy15"):
            raise ValueError(f"unknown coefficient {self.coef!r}")
        if self.coef == "jkpt1":
            jkpt.JkptConfig(self.alpha, self.v)
        elif not 0.0 <= self.v <= 1.0:
            raise ValueError(f"v must lie in [0, 1], got {self.v}")
        if self.dispersion not in (None, "omega", "lgy15"):
            raise ValueError(f"unknown dispersion {self.dispersion!r}")

    @property
    def dispersion_kind(self) -> str:
        if self.dispersion is not None:
            return self.dispersion
        return "lgy15" if self.coef == "lgy15" else "omega"

    @property
    def mean_kind(self) -> str:
        return "lgy15" if self.coef == "lgy15" else "possibilistic"

    @property
    def label(self) -> str:
        mix = "" if self.v == 0.5 else f" v={self.v:g}"
        if self.coef == "jkpt1":
            return f"JKPT1({self.alpha:g}){mix}"
        if self.coef == "jkpt2":
            return f"JKPT2{mix}"
        return self.coef.upper()


def skewness(f: FuzzyNumber, cfg: SkewConfig) -> float:
    if cfg.coef == "jkpt1":
        return jkpt.jkpt1(f, jkpt.JkptConfig(cfg.alpha, cfg.v))
    if cfg.coef == "jkpt2":
        return jkpt.jkpt2(f, cfg.v)
    if cfg.coef == "vb13":
        return moments.vb13_skewness(f)
    return moments.lgy15_skewness(f)


def evaluate(weights: Sequence[float], assets: Sequence[FuzzyNumber], metrics: SkewConfig) -> tuple[float, float, float]:
    """(mean, dispersion, skewness) of the portfolio ``sum w_i * asset_i``."""
    f = weighted_sum(weights, assets)
    mean = moments.lgy15_mean(f) if metrics.mean_kind == "lgy15" else moments.possibilistic_mean(f)
    disp = moments.lgy15_variance(f) if metrics.dispersion_kind == "lgy15" else moments.vb13_omega(f)
    return mean, disp, skewness(f, metrics)


@dataclass(frozen=True)
class PortfolioProblem:
    assets: tuple[FuzzyNumber, ...]
    mode: Mode = "max_skew"
    rho: float = 0.0
    beta: float = math.inf
    gamma: float = 0.0
    mesh: int = 100
    metrics: SkewConfig = field(default_factory=SkewConfig)

    def __post_init__(self):
        object.__setattr__(self, "assets", tuple(self.assets))
        if len(self.assets) == 0:
            raise ValueError("a portfolio needs at least one asset")
        mode = MODE_ALIASES.get(self.mode, self.mode)
        if mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "mode", mode)
        if int(self.mesh) != self.mesh or self.mesh < 1:
            raise ValueError(f"mesh must be a positive integer, got {self.mesh}")
        # beta may be +inf to switch the dispersion limit off; nan never makes sense
        for name in ("rho", "beta", "gamma"):
            if math.isnan(getattr(self, name)):
                raise ValueError(f"{name} must be a number")


@dataclass(frozen=True)
class Solution:
    weights: tuple[float, ...]
    mean: float
    dispersion: float
    skewness: float
    evaluated_points: int
    elapsed: float

    @property
    def objective(self) -> dict:
        return {"mean": self.mean, "dispersion": self.dispersion, "skewness": self.skewness}


def mesh_size(n: int, r: int) -> int:
    return math.comb(r + n - 1, n - 1)


@lru_cache(maxsize=16)
def compositions(n: int, r: int) -> np.ndarray:
    """All ``k`` in N^n with ``sum(k) == r``, lexicographically ascending.

    The returned array is cached and read-only.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    rows = np.zeros((1, 0), dtype=np.int64)
    rem = np.array([r], dtype=np.int64)
    for _ in range(n - 1):
        counts = rem + 1
        starts = np.cumsum(counts) - counts
        k = np.arange(counts.sum(), dtype=np.int64) - np.repeat(starts, counts)
        rows = np.column_stack([np.repeat(rows, counts, axis=0), k])
        rem = np.repeat(rem, counts) - k
    out = np.column_stack([rows, rem])
    out.flags.writeable = False
    return out


def simplex_mesh(n: int, r: int) -> Iterator[tuple[float, ...]]:
    """Yield every weight vector on the step-``1/r`` simplex lattice."""
    for k in compositions(n, r):
        yield tuple(float(ki) / r for ki in k)


def _aggregate(wt: np.ndarray, probes: np.ndarray) -> np.ndarray:
    """Portfolio probes, shape (n_probes, n_points), from asset probes
    ``probes`` (n_assets, n_probes) and transposed weights ``wt`` (n_assets, n_points)."""
    # Explicit accumulation in asset order keeps each point independent of batch size.
    out = probes[0][:, None] * wt[0]
    for i in range(1, probes.shape[0]):
        out = out + probes[i][:, None] * wt[i]
    return out


def _rowsum(values: np.ndarray, weights: np.ndarray) -> np.ndarray:
    acc = values[0] * weights[0]
    for k in range(1, values.shape[0]):
        acc = acc + values[k] * weights[k]
    return acc


def _safe_ratio(num: np.ndarray, den: np.ndarray, scale: np.ndarray) -> np.ndarray:
    flat = np.abs(den) <= 64.0 * _EPS * np.maximum(scale, 1e-300)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(flat, 0.0, num / np.where(flat, 1.0, den))


class MeshEvaluator:
    """Vectorised (mean, dispersion, skewness) over many weight vectors.

    Each asset is reduced once to the handful of alpha-probes the chosen
    coefficient needs; a portfolio's probes are then the weighted sums of the
    asset probes, which is exact because all curves are linear between the
    union breakpoints.  Linear functionals (possibilistic mean, omega, LGY15
    mean, the half-integrals of JKPT2) are aggregated the same way.
    """

    def __init__(self, assets: Sequence[FuzzyNumber], metrics: SkewConfig):
        self.assets = tuple(assets)
        self.metrics = metrics
        grid = union_grid(*(a.lower.alphas for a in assets), *(a.upper.alphas for a in assets), [0.5])
        c = trapezoid_weights(grid)
        lo = np.array([a.lower(grid) for a in assets])
        up = np.array([a.upper(grid) for a in assets])
        # Columns: possibilistic mean, omega, LGY15 mean (when needed).
        linear = [0.5 * (lo + up) @ c, (up - lo) @ c]
        self._nodes = None
        if metrics.coef in ("vb13", "lgy15") or metrics.dispersion_kind == "lgy15":
            q, wq = gauss_nodes(grid)
            self._nq = len(q)
            self._wq = wq
            self._wq_alpha = wq * q
            node_lo = np.array([np.interp(q, grid, l) for l in lo])
            node_up = np.array([np.interp(q, grid, u) for u in up])
            self._nodes = np.concatenate([node_lo, node_up], axis=1)
            linear.append((node_lo + node_up) @ self._wq_alpha)
        self._linear = np.column_stack(linear)
        if metrics.coef == "jkpt1":
            a = metrics.alpha
            pts = np.array([a, 0.5, 1.0 - a, 1.0])
            self._probes = np.array([np.concatenate([x.lower(pts), x.upper(pts)]) for x in assets])
        elif metrics.coef == "jkpt2":
            halves = []
            for l, u, asset in zip(lo, up, assets):
                lf, ls = split_at_half(grid, l)
                uf, us = split_at_half(grid, u)
                halves.append([lf, ls, asset.lower(0.5), asset.lower(1.0), uf, us, asset.upper(0.5), asset.upper(1.0)])
            self._probes = np.array(halves)

    def __call__(self, w: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        m = self.metrics
        wt = np.ascontiguousarray(np.asarray(w, dtype=float).T)
        lin = _aggregate(wt, self._linear)
        e_poss, omega = lin[0], lin[1]
        e_lgy = lin[2] if len(lin) > 2 else None
        nodes = _aggregate(wt, self._nodes) if self._nodes is not None else None
        mean = e_lgy if m.mean_kind == "lgy15" else e_poss
        if m.dispersion_kind == "omega":
            disp = omega
        else:
            disp = self._lgy15_moment(nodes, e_lgy, 2)
        if m.coef == "jkpt1":
            skew = self._jkpt1(_aggregate(wt, self._probes))
        elif m.coef == "jkpt2":
            skew = self._jkpt2(_aggregate(wt, self._probes))
        elif m.coef == "vb13":
            skew = self._vb13(nodes, e_poss, omega)
        else:
            skew = self._lgy15_moment(nodes, e_lgy, 3)
        return mean, disp, skew

    def _lgy15_moment(self, nodes, mean, power):
        dl = nodes[: self._nq] - mean
        du = nodes[self._nq :] - mean
        if power == 2:
            vals = dl * dl + du * du
        else:
            vals = dl * dl * dl + du * du * du
        return _rowsum(vals, self._wq_alpha)

    def _vb13(self, nodes, mean, omega):
        if np.any(omega <= 0.0):
            raise DegenerateInputError("VB13 skewness is undefined for a crisp portfolio (omega = 0)")
        dl = nodes[: self._nq] - mean
        du = nodes[self._nq :] - mean
        mu3 = 0.5 * _rowsum(dl * dl * dl + du * du * du, self._wq)
        return mu3 / (omega * omega * omega)

    def _jkpt1(self, p):
        d_a, d_mid, d_b, m_lo, u_a, u_mid, u_b, m_hi = p
        v = self.metrics.v
        scale_d = np.maximum(np.maximum(np.abs(d_a), np.abs(d_mid)), np.abs(d_b))
        scale_u = np.maximum(np.maximum(np.abs(u_a), np.abs(u_mid)), np.abs(u_b))
        gl = _safe_ratio(d_b + d_a - 2.0 * d_mid, d_b - d_a, scale_d)
        gu = _safe_ratio(u_a + u_b - 2.0 * u_mid, u_a - u_b, scale_u)
        scale_o = np.maximum(np.maximum(np.abs(d_a), np.abs(u_a)), np.maximum(np.abs(m_lo), np.abs(m_hi)))
        outer = _safe_ratio((d_a - m_lo) + (u_a - m_hi), u_a - d_a, scale_o)
        return v * outer + (1.0 - v) * (0.5 * (gl + gu))

    def _jkpt2(self, h):
        lf, ls, lmid, m_lo, uf, us, umid, m_hi = h
        v = self.metrics.v
        # Half-integrals are bounded by half the curve's sup-norm.
        scale_l = 2.0 * np.maximum(np.abs(lf), np.abs(ls))
        scale_u = 2.0 * np.maximum(np.abs(uf), np.abs(us))
        gl = _safe_ratio(ls + lf - lmid, ls - lf, scale_l)
        gu = _safe_ratio(uf + us - umid, uf - us, scale_u)
        outer = _safe_ratio((lf - 0.5 * m_lo) + (uf - 0.5 * m_hi), uf - lf, np.maximum(scale_l, scale_u))
        return v * outer + (1.0 - v) * (0.5 * (gl + gu))


def evaluate_mesh(problem: PortfolioProblem, workers: int = 1) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Integer compositions and the (mean, dispersion, skewness) arrays over the mesh."""
    n, r = len(problem.assets), problem.mesh
    k = compositions(n, r)
    w = k / float(r)
    evaluator = MeshEvaluator(problem.assets, problem.metrics)
    if workers <= 1 or len(w) < 2 * workers:
        mean, disp, skew = evaluator(w)
    else:
        chunks = np.array_split(w, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(evaluator, chunks))
        mean, disp, skew = (np.concatenate(p) for p in zip(*parts))
    return k, mean, disp, skew


def _select(k: np.ndarray, values: np.ndarray, feasible: np.ndarray, maximise: bool) -> int:
    idx = np.flatnonzero(feasible)
    vals = values[idx]
    best = vals.max() if maximise else vals.min()
    tol = TIE_TOL * max(1.0, abs(best))
    near = np.abs(vals - best) <= tol
    # Mesh rows are in lexicographic order, so the first candidate is the smallest.
    return int(idx[np.argmax(near)])


def optimize(problem: PortfolioProblem, workers: int = 1) -> Solution:
    t0 = time.perf_counter()
    k, mean, disp, skew = evaluate_mesh(problem, workers=workers)
    mode = problem.mode
    with np.errstate(invalid="ignore"):
        if mode == "max_skew":
            feasible = (mean >= problem.rho) & (disp <= problem.beta)
            target, maximise = skew, True
        elif mode == "max_mean":
            feasible = (disp <= problem.beta) & (skew >= problem.gamma)
            target, maximise = mean, True
        else:
            feasible = (mean >= problem.rho) & (skew >= problem.gamma)
            target, maximise = disp, False
    elapsed = time.perf_counter() - t0
    if not feasible.any():
        raise InfeasibleError(
            f"no feasible portfolio among {len(k)} mesh points "
            f"(mode={mode}, rho={problem.rho:g}, beta={problem.beta:g}, gamma={problem.gamma:g})",
            evaluated_points=len(k),
            elapsed=elapsed,
        )
    i = _select(k, target, feasible, maximise)
    elapsed = time.perf_counter() - t0
    return Solution(
        weights=tuple(float(x) / problem.mesh for x in k[i]),
        mean=float(mean[i]),
        dispersion=float(disp[i]),
        skewness=float(skew[i]),
        evaluated_points=len(k),
        elapsed=elapsed,
    )

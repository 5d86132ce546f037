"""Level-set representation of fuzzy numbers.

A fuzzy number is stored as two piecewise-linear curves over the membership
level alpha in [0, 1]: ``lower`` (nondecreasing) gives the left endpoint of
each alpha-cut and ``upper`` (nonincreasing) the right endpoint.  Everything
else in the package (moments, quantile skewness, portfolio search) is built on
top of these two curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import FuzzyNumberError

Direction = Literal["nondecreasing", "nonincreasing"]

# Default node count for re-sampling products and quotients.
MIN_PRODUCT_GRID = 257

_EPS = np.finfo(float).eps


def _tolerance(x: np.ndarray) -> float:
    # Slack for ulp-level noise produced by interpolation and summation.
    scale = float(np.max(np.abs(x))) if x.size else 0.0
    return 16.0 * _EPS * max(scale, 1.0)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise FuzzyNumberError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    def contains(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo


class AlphaCurve:
    """Monotone piecewise-linear map from alpha in [0, 1] to the real line.

    Breakpoint arrays are read-only; a curve never changes after construction.
    """

    __slots__ = ("alphas", "xs", "direction")

    def __init__(self, alphas: Sequence[float], xs: Sequence[float], direction: Direction):
        a = np.array(alphas, dtype=float)
        x = np.array(xs, dtype=float)
        if direction not in ("nondecreasing", "nonincreasing"):
            raise FuzzyNumberError(f"unknown direction {direction!r}")
        if a.ndim != 1 or a.shape != x.shape:
            raise FuzzyNumberError("alphas and xs must be 1-d arrays of equal length")
        if a.size < 2:
            raise FuzzyNumberError("a curve needs at least two breakpoints")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(x))):
            raise FuzzyNumberError("breakpoints must be finite")
        if a[0] != 0.0 or a[-1] != 1.0:
            raise FuzzyNumberError(f"alpha must run from 0 to 1, got {a[0]} .. {a[-1]}")
        if np.any(np.diff(a) <= 0):
            raise FuzzyNumberError("alpha values must be strictly increasing (no plateaus in alpha)")
        step = np.diff(x)
        tol = _tolerance(x)
        if direction == "nondecreasing" and np.any(step < -tol):
            raise FuzzyNumberError("x values of a lower curve must be nondecreasing in alpha")
        if direction == "nonincreasing" and np.any(step > tol):
            raise FuzzyNumberError("x values of an upper curve must be nonincreasing in alpha")
        a.flags.writeable = False
        x.flags.writeable = False
        object.__setattr__(self, "alphas", a)
        object.__setattr__(self, "xs", x)
        object.__setattr__(self, "direction", direction)

    def __setattr__(self, name, value):
        raise AttributeError("AlphaCurve is immutable")

    def __call__(self, alpha):
        return np.interp(alpha, self.alphas, self.xs)

    def __eq__(self, other):
        if not isinstance(other, AlphaCurve):
            return NotImplemented
        return (
            self.direction == other.direction
            and np.array_equal(self.alphas, other.alphas)
            and np.array_equal(self.xs, other.xs)
        )

    def __hash__(self):
        return hash((self.direction, self.alphas.tobytes(), self.xs.tobytes()))

    def __repr__(self):
        pts = ", ".join(f"({a:g}, {x:g})" for a, x in zip(self.alphas, self.xs))
        return f"AlphaCurve({self.direction}: {pts})"

    def resample(self, alphas: np.ndarray) -> "AlphaCurve":
        return AlphaCurve(alphas, self(alphas), self.direction)


class FuzzyNumber:
    """A fuzzy number in level-set form ``[lower(alpha), upper(alpha)]``."""

    __slots__ = ("lower", "upper")

    def __init__(self, lower: AlphaCurve, upper: AlphaCurve):
        if lower.direction != "nondecreasing" or upper.direction != "nonincreasing":
            raise FuzzyNumberError("lower curve must be nondecreasing and upper nonincreasing")
        grid = union_grid(lower.alphas, upper.alphas)
        lo, hi = lower(grid), upper(grid)
        if np.any(lo - hi > _tolerance(np.concatenate([lo, hi]))):
            bad = float(grid[np.argmax(lo - hi)])
            raise FuzzyNumberError(f"lower curve exceeds upper curve at alpha={bad:g}")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def __setattr__(self, name, value):
        raise AttributeError("FuzzyNumber is immutable")

    def __eq__(self, other):
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return self.lower == other.lower and self.upper == other.upper

    def __hash__(self):
        return hash((self.lower, self.upper))

    def __repr__(self):
        return f"FuzzyNumber(support={self.support}, core={self.core})"

    @property
    def support(self) -> Interval:
        return Interval(float(self.lower.xs[0]), float(self.upper.xs[0]))

    @property
    def core(self) -> Interval:
        return Interval(float(self.lower.xs[-1]), float(self.upper.xs[-1]))

    @property
    def is_crisp(self) -> bool:
        return bool(self.lower.xs[0] == self.upper.xs[0] == self.lower.xs[-1] == self.upper.xs[-1])

    def cut(self, alpha: float) -> Interval:
        return alpha_cut(self, alpha)

    def __add__(self, other):
        if isinstance(other, FuzzyNumber):
            return combine(self, other, "add")
        return scale_shift(self, 1.0, float(other))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, FuzzyNumber):
            return combine(self, other, "sub")
        return scale_shift(self, 1.0, -float(other))

    def __mul__(self, other):
        if isinstance(other, FuzzyNumber):
            return combine(self, other, "mul")
        return scale_shift(self, float(other), 0.0)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FuzzyNumber):
            return combine(self, other, "div")
        return scale_shift(self, 1.0 / float(other), 0.0)

    def __neg__(self):
        return scale_shift(self, -1.0, 0.0)


def union_grid(*grids: Iterable[float]) -> np.ndarray:
    return np.unique(np.concatenate([np.asarray(g, dtype=float) for g in grids]))


def _monotone(x: np.ndarray, direction: Direction) -> np.ndarray:
    # Interpolating and summing monotone data can wobble by an ulp; clamp it.
    if direction == "nondecreasing":
        return np.maximum.accumulate(x)
    return np.minimum.accumulate(x)


def _from_arrays(lower_a, lower_x, upper_a, upper_x) -> FuzzyNumber:
    lx = _monotone(np.asarray(lower_x, dtype=float), "nondecreasing")
    ux = _monotone(np.asarray(upper_x, dtype=float), "nonincreasing")
    return FuzzyNumber(
        AlphaCurve(lower_a, lx, "nondecreasing"),
        AlphaCurve(upper_a, ux, "nonincreasing"),
    )


def crisp(c: float) -> FuzzyNumber:
    return _from_arrays([0.0, 1.0], [c, c], [0.0, 1.0], [c, c])


def triangular(left: float, peak: float, right: float) -> FuzzyNumber:
    return _from_arrays([0.0, 1.0], [left, peak], [0.0, 1.0], [right, peak])


def trapezoidal(left: float, core_lo: float, core_hi: float, right: float) -> FuzzyNumber:
    return _from_arrays([0.0, 1.0], [left, core_lo], [0.0, 1.0], [right, core_hi])


def _split_points(points, side: str) -> tuple[np.ndarray, np.ndarray]:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise FuzzyNumberError(f"{side} points must be a list of (x, alpha) pairs")
    if len(pts) < 2:
        raise FuzzyNumberError(f"{side} side needs at least 2 points, got {len(pts)}")
    return pts[:, 0], pts[:, 1]


def make_piecewise_linear(left_points, right_points) -> FuzzyNumber:
    """Build a fuzzy number from ``(x, alpha)`` transition points.

    ``left_points`` must be listed with alpha strictly increasing from 0 to 1.
    ``right_points`` may be listed in either alpha order; x must not increase
    as alpha increases.  Repeated x (vertical membership jumps) is allowed,
    repeated alpha is not.
    """
    lx, la = _split_points(left_points, "left")
    rx, ra = _split_points(right_points, "right")
    if np.any(np.diff(la) <= 0):
        raise FuzzyNumberError("left alpha values must be strictly increasing")
    if np.all(np.diff(ra) < 0):
        rx, ra = rx[::-1], ra[::-1]
    elif np.any(np.diff(ra) <= 0):
        raise FuzzyNumberError("right alpha values must be strictly monotone")
    lower = AlphaCurve(la, lx, "nondecreasing")
    upper = AlphaCurve(ra, rx, "nonincreasing")
    if lower.xs[-1] > upper.xs[-1]:
        raise FuzzyNumberError(
            f"core inverted: lower(1)={lower.xs[-1]:g} > upper(1)={upper.xs[-1]:g}"
        )
    return FuzzyNumber(lower, upper)


def from_compact(xs: Sequence[float], alphas: Sequence[float]) -> FuzzyNumber:
    """Zip an x list with an alpha profile such as ``(0, 0.25, 1, 0.75, 0)``.

    The profile must rise strictly to a single apex at alpha=1 and then fall
    strictly; points up to the apex form the left side, points from the apex
    on form the right side.
    """
    x = np.asarray(xs, dtype=float)
    a = np.asarray(alphas, dtype=float)
    if x.shape != a.shape or x.ndim != 1:
        raise FuzzyNumberError("x and alpha lists must have equal length")
    apex = np.flatnonzero(a == 1.0)
    if apex.size != 1:
        raise FuzzyNumberError("alpha profile needs exactly one apex at alpha=1")
    k = int(apex[0])
    if a[0] != 0.0 or a[-1] != 0.0:
        raise FuzzyNumberError("alpha profile must start and end at 0")
    if np.any(np.diff(a[: k + 1]) <= 0) or np.any(np.diff(a[k:]) >= 0):
        raise FuzzyNumberError("alpha profile must rise strictly to the apex and then fall strictly")
    left = np.column_stack([x[: k + 1], a[: k + 1]])
    right = np.column_stack([x[k:], a[k:]])
    return make_piecewise_linear(left, right)


def alpha_cut(f: FuzzyNumber, alpha: float) -> Interval:
    if not 0.0 <= alpha <= 1.0:
        raise FuzzyNumberError(f"alpha must lie in [0, 1], got {alpha}")
    return Interval(float(f.lower(alpha)), float(f.upper(alpha)))


def _sup_alpha(xs: np.ndarray, alphas: np.ndarray, x: float) -> float:
    # Largest alpha with curve(alpha) <= x on a nondecreasing curve.
    j = int(np.searchsorted(xs, x, side="right")) - 1
    if j < 0:
        return 0.0
    if j >= len(xs) - 1:
        return 1.0
    t = (x - xs[j]) / (xs[j + 1] - xs[j])
    return float(alphas[j] + t * (alphas[j + 1] - alphas[j]))


def membership(f: FuzzyNumber, x: float) -> float:
    lo, hi = f.support.lo, f.support.hi
    if x < lo or x > hi:
        return 0.0
    if f.core.lo <= x <= f.core.hi:
        return 1.0
    if x < f.core.lo:
        return _sup_alpha(f.lower.xs, f.lower.alphas, x)
    # Mirror the upper curve so it becomes nondecreasing.
    return _sup_alpha(-f.upper.xs, f.upper.alphas, -x)


def scale_shift(f: FuzzyNumber, k: float, c: float) -> FuzzyNumber:
    """Return ``k*f + c``; a negative ``k`` swaps the roles of the two curves."""
    if k == 0:
        return crisp(c)
    lo, up = f.lower, f.upper
    if k > 0:
        return _from_arrays(lo.alphas, k * lo.xs + c, up.alphas, k * up.xs + c)
    return _from_arrays(up.alphas, k * up.xs + c, lo.alphas, k * lo.xs + c)


_OPS = {
    "add": np.add,
    "sub": np.subtract,
    "mul": np.multiply,
    "div": np.divide,
}


def combine(f: FuzzyNumber, g: FuzzyNumber, op: str, min_grid: int = MIN_PRODUCT_GRID) -> FuzzyNumber:
    """Alpha-cut arithmetic: each cut endpoint is the min/max of the four
    crisp combinations of the operand endpoints.

    Sums and differences of piecewise-linear operands are exact.  Products and
    quotients are not piecewise linear, so they are sampled on a working grid
    of at least ``min_grid`` uniform nodes.
    """
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}")
    if op == "div":
        s = g.support
        if s.lo <= 0.0 <= s.hi:
            raise FuzzyNumberError("division by a fuzzy number whose support contains 0")
    grids = [f.lower.alphas, f.upper.alphas, g.lower.alphas, g.upper.alphas]
    if op in ("mul", "div"):
        grids.append(np.linspace(0.0, 1.0, min_grid))
    a = union_grid(*grids)
    fd, fu, gd, gu = f.lower(a), f.upper(a), g.lower(a), g.upper(a)
    fn = _OPS[op]
    cands = np.stack([fn(fd, gd), fn(fd, gu), fn(fu, gd), fn(fu, gu)])
    return _from_arrays(a, cands.min(axis=0), a, cands.max(axis=0))


def weighted_sum(weights: Sequence[float], assets: Sequence[FuzzyNumber]) -> FuzzyNumber:
    """Exact nonnegative linear combination ``w1*f1 + ... + wn*fn``."""
    if len(assets) == 0:
        raise FuzzyNumberError("weighted_sum needs at least one operand")
    if len(weights) != len(assets):
        raise FuzzyNumberError(f"{len(weights)} weights for {len(assets)} operands")
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise FuzzyNumberError("weights must be finite and nonnegative")
    la = union_grid(*(f.lower.alphas for f in assets))
    ua = union_grid(*(f.upper.alphas for f in assets))
    lx = np.zeros_like(la)
    ux = np.zeros_like(ua)
    for wi, f in zip(w, assets):
        if wi == 0.0:
            continue
        lx = lx + wi * f.lower(la)
        ux = ux + wi * f.upper(ua)
    return _from_arrays(la, lx, ua, ux)


def joint_grid(f: FuzzyNumber, extra: Iterable[float] = ()) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Both curves sampled on the union of their breakpoints (plus ``extra``).

    Between consecutive returned nodes both curves are linear.
    """
    a = union_grid(f.lower.alphas, f.upper.alphas, list(extra))
    return a, f.lower(a), f.upper(a)

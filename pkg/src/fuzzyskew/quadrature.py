"""Segment-exact integration over alpha for piecewise-linear curves."""

from __future__ import annotations

import numpy as np

# 3-point Gauss-Legendre on [0, 1]; exact through degree 5.
_GL_T = np.array([0.5 - np.sqrt(15.0) / 10.0, 0.5, 0.5 + np.sqrt(15.0) / 10.0])
_GL_W = np.array([5.0, 8.0, 5.0]) / 18.0


def gauss_nodes(alphas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of a 3-point Gauss-Legendre rule on every segment."""
    a = np.asarray(alphas, dtype=float)
    h = np.diff(a)
    nodes = (a[:-1, None] + h[:, None] * _GL_T[None, :]).ravel()
    weights = (h[:, None] * _GL_W[None, :]).ravel()
    return nodes, weights


def trapezoid_weights(alphas: np.ndarray) -> np.ndarray:
    """Weights ``c`` with ``c @ y`` equal to the integral of the piecewise-linear
    interpolant of ``y`` (exact)."""
    h = np.diff(np.asarray(alphas, dtype=float))
    c = np.zeros(len(h) + 1)
    c[:-1] += 0.5 * h
    c[1:] += 0.5 * h
    return c


def integrate_linear(alphas: np.ndarray, y: np.ndarray) -> float:
    h = np.diff(alphas)
    return float(np.sum(h * (y[:-1] + y[1:])) * 0.5)


def split_at_half(alphas: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    """Integrals of the interpolant over [0, 1/2] and [1/2, 1].

    ``alphas`` must contain 0.5.
    """
    k = int(np.searchsorted(alphas, 0.5))
    if alphas[k] != 0.5:
        raise ValueError("grid must contain alpha=0.5")
    return integrate_linear(alphas[: k + 1], y[: k + 1]), integrate_linear(alphas[k:], y[k:])

import numpy as np
import pytest

import oracles
from fuzzyskew import (
    crisp,
    lgy15_mean,
    lgy15_panel,
    lgy15_skewness,
    lgy15_variance,
    make_piecewise_linear,
    possibilistic_mean,
    scale_shift,
    triangular,
    vb13_mu3,
    vb13_omega,
    vb13_panel,
    vb13_skewness,
)
from fuzzyskew.errors import DegenerateInputError

# Frozen from oracles.dense_panel on the Example 1 breakpoints (10^6 nodes).
EX1_MEAN = 3.28875
EX1_OMEGA = 3.9275
EX1_MU3 = 4.181468089858556
EX1_LGY_MEAN = 3.11895833333305
EX1_LGY_VAR = 2.6940884982628535


def test_crisp_values():
    c = crisp(4.0)
    assert possibilistic_mean(c) == 4.0
    assert vb13_omega(c) == 0.0
    assert lgy15_mean(c) == pytest.approx(4.0, abs=1e-15)
    assert lgy15_variance(c) == pytest.approx(0.0, abs=1e-28)
    assert lgy15_skewness(c) == pytest.approx(0.0, abs=1e-28)
    with pytest.raises(DegenerateInputError):
        vb13_skewness(c)


def test_symmetric_triangle():
    f = triangular(0, 1, 2)
    assert possibilistic_mean(f) == 1.0
    assert vb13_omega(f) == 1.0
    assert vb13_skewness(f) == 0.0
    assert lgy15_mean(f) == pytest.approx(1.0, abs=1e-15)
    assert lgy15_skewness(f) == pytest.approx(0.0, abs=1e-15)


def test_example1_intermediates(example1):
    assert possibilistic_mean(example1) == pytest.approx(EX1_MEAN, rel=1e-12)
    assert vb13_omega(example1) == pytest.approx(EX1_OMEGA, rel=1e-12)
    assert vb13_mu3(example1) == pytest.approx(EX1_MU3, rel=1e-9)
    assert lgy15_mean(example1) == pytest.approx(EX1_LGY_MEAN, rel=1e-9)
    assert lgy15_variance(example1) == pytest.approx(EX1_LGY_VAR, rel=1e-9)


def test_panels(example1):
    p = vb13_panel(example1)
    assert p.family == "VB13" and p.dispersion == vb13_omega(example1)
    q = lgy15_panel(example1)
    assert q.family == "LGY15" and q.dispersion >= 0
    assert q.skewness == pytest.approx(2.024, rel=1e-3)


def test_quadrature_matches_dense_oracle(rng):
    """Every moment integral against a 10^6-node trapezoid rule."""
    cases = [(oracles.curves(
        [(0.1, 0), (0.3, 0.1), (0.4, 0.2), (0.6, 0.25), (0.8, 0.4), (1.4, 0.5), (1.6, 0.7), (2.5, 0.85), (2.8, 0.9), (3.0, 1)],
        [(7.6, 0), (7.2, 0.1), (7.1, 0.2), (6.3, 0.25), (6.0, 0.4), (5.1, 0.5), (4.8, 0.6), (3.7, 0.75), (3.4, 0.9), (3.0, 1)],
    ))]
    for _ in range(4):
        cases.append(oracles.curves(*oracles.random_breakpoints(rng)))
    for la, lx, ra, rx in cases:
        f = make_piecewise_linear(list(zip(lx, la)), list(zip(rx, ra)))
        ref = oracles.dense_panel(la, lx, ra, rx)
        width = rx[0] - lx[0]
        got = {
            "mean": (possibilistic_mean(f), 1),
            "omega": (vb13_omega(f), 1),
            "mu3": (vb13_mu3(f), 3),
            "lgy_mean": (lgy15_mean(f), 1),
            "lgy_var": (lgy15_variance(f), 2),
            "lgy_skew": (lgy15_skewness(f), 3),
        }
        for key, (value, power) in got.items():
            # relative, with a floor at the magnitude of the integrand terms
            tol = 1e-9 * max(abs(ref[key]), width**power)
            assert abs(value - ref[key]) <= tol, key


def test_location_and_scale_laws(example1):
    e = possibilistic_mean(example1)
    w = vb13_omega(example1)
    s = vb13_skewness(example1)
    g = scale_shift(example1, 2.5, -7.0)
    assert possibilistic_mean(scale_shift(example1, 1, 3.0)) == pytest.approx(e + 3.0, abs=1e-12)
    assert vb13_omega(g) == pytest.approx(2.5 * w, rel=1e-12)
    assert vb13_skewness(g) == pytest.approx(s, rel=1e-9)


def test_lgy15_shift_moves_mean_only(example1):
    # The alpha weights integrate to 1/2 per curve, so E_L moves with the
    # shift and the centred moments do not change.  The dependence on
    # magnitude comes from scaling alone.
    g = scale_shift(example1, 1, 100)
    assert lgy15_mean(g) == pytest.approx(lgy15_mean(example1) + 100, rel=1e-13)
    assert lgy15_variance(g) == pytest.approx(lgy15_variance(example1), rel=1e-9)
    assert lgy15_skewness(g) == pytest.approx(lgy15_skewness(example1), rel=1e-9)


def test_lgy15_cubic_law(example1):
    base = lgy15_skewness(example1)
    for k in (0.1, 2.0, 100.0):
        assert lgy15_skewness(scale_shift(example1, k, 0)) == pytest.approx(k**3 * base, rel=1e-9)


def test_reflection_flips_sign(example1):
    g = scale_shift(example1, -1, 0)
    assert vb13_skewness(g) == pytest.approx(-vb13_skewness(example1), abs=1e-12)
    assert lgy15_skewness(g) == pytest.approx(-lgy15_skewness(example1), abs=1e-12)


def test_dispersions_nonnegative(rng):
    for _ in range(100):
        f = make_piecewise_linear(*oracles.random_breakpoints(rng))
        assert vb13_omega(f) >= 0
        assert lgy15_variance(f) >= 0

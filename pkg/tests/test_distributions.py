import numpy as np
import pytest

import oracles
from fuzzyskew import Interval, QuantileSpec, cdf, fuzzy_from_quantiles, quantile
from fuzzyskew.errors import FuzzyNumberError

SHAPES = [(0.5, 2.0), (2.0, 2.0), (0.1, 2.0)]


def test_uniform_identity():
    assert quantile(QuantileSpec.uniform(), 0.3) == 0.3
    assert quantile(QuantileSpec.uniform(2, 4), 0.25) == 2.5


def test_symmetric_beta_median():
    assert quantile(QuantileSpec.beta(2, 2), 0.5) == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("a, b", SHAPES)
@pytest.mark.parametrize("p", [0.01, 0.1, 0.5, 0.9, 0.99])
def test_quantile_matches_bisection_oracle(a, b, p):
    expected = oracles.beta_quantile_bisect(a, b, p)
    got = quantile(QuantileSpec.beta(a, b), p)
    # Compare in p-space: for Beta(0.1, 2) a 1e-12 slip in p moves x by
    # orders of magnitude near 0.
    assert oracles.beta_cdf_quad(a, b, got) == pytest.approx(p, abs=1e-11)
    assert got == pytest.approx(expected, rel=1e-6)


def test_endpoints_pinned():
    spec = QuantileSpec.beta(0.1, 2, 100001, 110000)
    assert quantile(spec, 0.0) == 100001
    assert quantile(spec, 1.0) == 110000


def test_quantile_domain():
    with pytest.raises(ValueError):
        quantile(QuantileSpec.beta(2, 2), 1.5)
    with pytest.raises(ValueError):
        QuantileSpec.beta(0, 2)
    with pytest.raises(ValueError):
        QuantileSpec("gamma", 1, 1)


@pytest.mark.parametrize("a, b", SHAPES)
def test_quantile_strictly_increasing(a, b):
    p = np.linspace(0.001, 0.999, 400)
    q = np.array([quantile(QuantileSpec.beta(a, b), x) for x in p])
    assert np.all(np.diff(q) > 0)


def test_uniform_pair_is_triangular():
    f = fuzzy_from_quantiles(QuantileSpec.uniform(0, 1), QuantileSpec.uniform(1, 2), 101)
    a = f.lower.alphas
    np.testing.assert_allclose(f.lower.xs, a, atol=1e-12)
    np.testing.assert_allclose(f.upper.xs, 2 - a, atol=1e-12)
    # collinear breakpoints
    np.testing.assert_allclose(np.diff(f.lower.xs, 2), 0, atol=1e-12)


def test_example2_construction(example2):
    assert example2.support == Interval(100, 110)
    assert example2.core == Interval(102, 102)
    assert len(example2.lower.alphas) == 1001


def test_example3_construction(example3):
    assert example3.core == Interval(100001, 100001)
    assert example3.support == Interval(100000, 110000)


def test_overlapping_supports_rejected():
    with pytest.raises(FuzzyNumberError):
        fuzzy_from_quantiles(QuantileSpec.beta(2, 2, 0, 3), QuantileSpec.beta(2, 2, 2, 4))


def test_gapped_supports_give_interval_core():
    f = fuzzy_from_quantiles(QuantileSpec.beta(2, 2, 0, 1), QuantileSpec.beta(2, 2, 3, 4), 51)
    assert f.core == Interval(1, 3)


def test_cdf_affine_support():
    spec = QuantileSpec.beta(0.5, 2, 100, 102)
    assert cdf(spec, 101) == pytest.approx(oracles.beta_cdf_quad(0.5, 2, 0.5), abs=1e-13)
    assert cdf(spec, 99) == 0.0
    assert cdf(spec, 103) == 1.0

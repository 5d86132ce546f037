"""Skewness coefficients for fuzzy numbers and threshold-constrained portfolio search."""

from .core import (
    AlphaCurve,
    FuzzyNumber,
    Interval,
    alpha_cut,
    combine,
    crisp,
    from_compact,
    make_piecewise_linear,
    membership,
    scale_shift,
    trapezoidal,
    triangular,
    weighted_sum,
)
from .distributions import QuantileSpec, cdf, fuzzy_from_quantiles, quantile
from .errors import AssetFileError, DegenerateInputError, FuzzyNumberError, InfeasibleError
from .jkpt import (
    JkptConfig,
    gm1_lower,
    gm1_upper,
    gm2_lower,
    gm2_upper,
    inner_integral,
    inner_point,
    jkpt1,
    jkpt2,
    outer_integral,
    outer_point,
)
from .moments import (
    MomentPanel,
    lgy15_mean,
    lgy15_panel,
    lgy15_skewness,
    lgy15_variance,
    possibilistic_mean,
    vb13_mu3,
    vb13_omega,
    vb13_panel,
    vb13_skewness,
)
from .portfolio import (
    PortfolioProblem,
    SkewConfig,
    Solution,
    evaluate,
    mesh_size,
    optimize,
    simplex_mesh,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

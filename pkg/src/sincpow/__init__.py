"""Exact series expansions for powers of sinc and sinhc.

Central factorial numbers T(n, k), Stirling numbers S(n, k), weighted
Stirling numbers R(n, k, r), partial Bell polynomials at the derivatives of
sinc, and the Taylor coefficients of sinc^r / sinhc^r built from them, all
in exact rational arithmetic, with a truncated power series type as an
independent check.
"""

from .bell import (
    bell_partial,
    bell_sinc_closed,
    exp_sinc_series,
    inv_quadratic_derivative,
    sinc_derivative_args,
)
from .expansions import (
    expand,
    sin_pow_finite_cosine,
    sinc_pow_int,
    sinc_pow_real,
    sinhc_pow_int,
    sinhc_pow_real,
)
from .numbers_core import (
    binomial,
    central_factorial_T,
    falling_factorial,
    rising_factorial,
    scaled_T,
    stirling2,
    weighted_stirling,
)
from .powerseries import TruncatedSeries, cardinal_series, exp1, log1, mul, pow_rational

__version__ = "0.1.0"

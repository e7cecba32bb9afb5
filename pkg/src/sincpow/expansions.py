"""Closed-form Taylor coefficients of powers of sinc and sinhc.

Coefficients are stored against z^n directly; the factor 2^n / n! that the
closed forms attach to (2z)^n / n! is folded in here.
"""

import math
from fractions import Fraction
from math import comb, factorial

from .bell import alternating_ratio_sum, exp_sinc_series
from .numbers_core import as_rational, cfn_ratio, rising_factorial, stirling2
from .powerseries import TruncatedSeries, cardinal_series, exp1, pow_rational

__all__ = [
    "stirling_bracket",
    "sinc_pow_int",
    "sinhc_pow_int",
    "sinc_pow_real",
    "sinhc_pow_real",
    "sin_pow_finite_cosine",
    "expand",
]

METHODS = ("cfn", "stirling")


def _check(order, method, allowed=METHODS):
    if order < 0:
        raise ValueError("order must be >= 0")
    if method not in allowed:
        raise ValueError(f"method must be one of {allowed}, got {method!r}")


def stirling_bracket(n, ell):
    """sum_{k=0}^{n} (-1)^k C(n, k) (2/ell)^k S(k+ell, ell) / C(k+ell, ell), ell >= 1."""
    if ell < 1:
        raise ValueError("the (2/ell)^k weight needs ell >= 1")
    w = Fraction(2, ell)
    total = Fraction(0)
    for k in range(n + 1):
        term = comb(n, k) * w**k * Fraction(stirling2(k + ell, ell), comb(k + ell, ell))
        total += -term if k % 2 else term
    return total


def _int_power_coeffs(ell, order, method, alternate):
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for j in range(1, order // 2 + 1):
        n = 2 * j
        if method == "cfn":
            c = cfn_ratio(n, ell) * Fraction(1 << n, factorial(n))
        else:
            c = stirling_bracket(n, ell) * Fraction(ell**n, factorial(n))
        coeffs[n] = -c if (alternate and j % 2) else c
    return coeffs


def sinc_pow_int(ell, order, method="cfn"):
    """sinc(z)^ell for integer ell >= 0, by central factorial or Stirling numbers."""
    _check(order, method)
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if method == "stirling" and ell == 0:
        raise ValueError("the Stirling form is undefined for ell = 0")
    return TruncatedSeries(_int_power_coeffs(ell, order, method, alternate=True))


def sinhc_pow_int(ell, order, method="cfn"):
    """sinhc(z)^ell for integer ell >= 0.

    The cfn route evaluates T(n+ell, ell)/C(n+ell, ell) 2^n/n! at every n,
    odd ones included, so odd coefficients come out zero by computation.
    """
    _check(order, method)
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if method == "stirling":
        if ell == 0:
            raise ValueError("the Stirling form is undefined for ell = 0")
        return TruncatedSeries(_int_power_coeffs(ell, order, method, alternate=False))
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(cfn_ratio(n, ell) * Fraction(1 << n, factorial(n)))
    return TruncatedSeries(coeffs)


def _real_power_coeffs(r, order, method, alternate):
    r = as_rational(r)
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for q in range(1, order // 2 + 1):
        n = 2 * q
        bracket = Fraction(0)
        for k in range(1, n + 1):
            weight = rising_factorial(-r, k)
            if weight:
                bracket += weight / factorial(k) * alternating_ratio_sum(n, k, method)
        c = bracket * Fraction(1 << n, factorial(n))
        coeffs[n] = -c if (alternate and q % 2) else c
    return coeffs


def sinc_pow_real(r, order, method="cfn"):
    """sinc(z)^r for rational r via rising factorials (-r)_k and Bell closed forms."""
    _check(order, method)
    return TruncatedSeries(_real_power_coeffs(r, order, method, alternate=True))


def sinhc_pow_real(r, order, method="cfn"):
    """sinhc(z)^r for rational r; the sinc sums without the (-1)^q sign."""
    _check(order, method)
    return TruncatedSeries(_real_power_coeffs(r, order, method, alternate=False))


def sin_pow_finite_cosine(ell, z):
    """sin(z)^ell as (-1)^ell / 2^ell * sum_q (-1)^q C(ell, q) cos((2q - ell) z - ell pi / 2)."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    total = 0.0
    for q in range(ell + 1):
        term = comb(ell, q) * math.cos((2 * q - ell) * z - ell * math.pi / 2)
        total += -term if q % 2 else term
    return (-1) ** ell * total / 2**ell


def expand(function, exponent, order, method="cfn"):
    """Series for ``function`` in {"sinc", "sinhc", "exp-sinc"} raised to ``exponent``.

    Non-negative integer exponents take the integer-power formulas; other
    rationals take the real-power formulas.  method="oracle" computes
    exp(r log f) on the truncated Taylor series instead.
    """
    r = as_rational(exponent)
    if function == "exp-sinc":
        if r != 1:
            raise ValueError("exp-sinc only supports exponent 1")
        _check(order, method, METHODS + ("oracle",))
        if method == "oracle":
            return exp1(cardinal_series("sinc", order) - 1)
        return exp_sinc_series(order, method)
    if function not in ("sinc", "sinhc"):
        raise ValueError(f"unknown function {function!r}")
    _check(order, method, METHODS + ("oracle",))
    if method == "oracle":
        return pow_rational(cardinal_series(function, order), r)
    if r.denominator == 1 and r >= 0 and not (method == "stirling" and r == 0):
        fn = sinc_pow_int if function == "sinc" else sinhc_pow_int
        return fn(int(r), order, method)
    fn = sinc_pow_real if function == "sinc" else sinhc_pow_real
    return fn(r, order, method)

"""Exact integer/rational number triangles.

Every value here is an ``int`` or a ``fractions.Fraction``; nothing passes
through floating point.  Triangles are memoized with ``functools.lru_cache``
(thread-safe in CPython); the undecorated function is reachable through
``__wrapped__`` and returns identical values.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "binomial",
    "rising_factorial",
    "falling_factorial",
    "weighted_stirling",
    "stirling2",
    "central_factorial_T",
    "scaled_T",
    "cfn_ratio",
    "cfn_ratio_from_stirling",
    "as_rational",
    "clear_caches",
]


def as_rational(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: an exact path must never see a rounded input.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal literal not accepted: {value!r}")
        return Fraction(text)
    raise TypeError(f"expected int, Fraction or 'p/q' string, got {type(value).__name__}")


def binomial(n, k):
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def rising_factorial(r, k):
    """(r)_k = r (r+1) ... (r+k-1)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    r = as_rational(r)
    out = Fraction(1)
    for i in range(k):
        out *= r + i
    return out


def falling_factorial(r, k):
    """<r>_k = r (r-1) ... (r-k+1)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    r = as_rational(r)
    out = Fraction(1)
    for i in range(k):
        out *= r - i
    return out


def _check_indices(n, k):
    if n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got n={n}, k={k}")


@lru_cache(maxsize=None)
def _weighted_stirling(n, k, r):
    total = Fraction(0)
    for j in range(k + 1):
        term = comb(k, j) * (r + j) ** n
        total += term if (k - j) % 2 == 0 else -term
    return total / factorial(k)


def weighted_stirling(n, k, r):
    """Carlitz's weighted Stirling number R(n, k, r) via its explicit sum.

    Returns a Fraction.  The sum vanishes identically for n < k.
    """
    _check_indices(n, k)
    return _weighted_stirling(n, k, as_rational(r))


@lru_cache(maxsize=None)
def stirling2(n, k):
    """Stirling number of the second kind S(n, k) = R(n, k, 0)."""
    _check_indices(n, k)
    value = _weighted_stirling.__wrapped__(n, k, Fraction(0))
    assert value.denominator == 1
    return value.numerator


@lru_cache(maxsize=None)
def central_factorial_T(n, k):
    """Central factorial number of the second kind T(n, k).

    Uses (k/2 - j)^n = (k - 2j)^n / 2^n so the whole sum stays in integers
    until a single final division.  T(0, 0) = 1 and T(n, 0) = 0 for n >= 1.
    """
    _check_indices(n, k)
    total = 0
    for j in range(k + 1):
        term = comb(k, j) * (k - 2 * j) ** n
        total += -term if j % 2 else term
    return Fraction(total, factorial(k) << n)


@lru_cache(maxsize=None)
def scaled_T(n, k):
    """2^(n-k) T(n, k): the number of partitions of an n-set into k odd blocks."""
    _check_indices(n, k)
    if k > n:
        raise ValueError(f"scaled_T requires n >= k, got n={n}, k={k}")
    value = central_factorial_T(n, k) * (1 << (n - k))
    if value.denominator != 1:
        raise ArithmeticError(f"2^(n-k) T({n},{k}) = {value} is not an integer")
    return value.numerator


@lru_cache(maxsize=None)
def cfn_ratio(n, j):
    """T(n + j, j) / C(n + j, j)."""
    _check_indices(n, j)
    return central_factorial_T(n + j, j) / comb(n + j, j)


@lru_cache(maxsize=None)
def cfn_ratio_from_stirling(n, j):
    """The Stirling-number expression for T(n + j, j) / C(n + j, j).

    sum_{m=0}^{n} (-1)^m C(n, m) (j/2)^m S(n + j - m, j) / C(n + j - m, j)
    """
    _check_indices(n, j)
    half = Fraction(j, 2)
    total = Fraction(0)
    for m in range(n + 1):
        term = comb(n, m) * half**m * Fraction(stirling2(n + j - m, j), comb(n + j - m, j))
        total += -term if m % 2 else term
    return total


def clear_caches():
    for fn in (_weighted_stirling, stirling2, central_factorial_T, scaled_T,
               cfn_ratio, cfn_ratio_from_stirling):
        fn.cache_clear()

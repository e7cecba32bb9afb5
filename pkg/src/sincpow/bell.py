"""Partial Bell polynomials and their closed forms at the derivatives of sinc."""

from fractions import Fraction
from math import comb, factorial

from .numbers_core import (
    as_rational,
    binomial,
    cfn_ratio,
    cfn_ratio_from_stirling,
    falling_factorial,
)
from .powerseries import TruncatedSeries, mul

__all__ = [
    "sinc_derivative_args",
    "bell_partial",
    "bell_partial_series",
    "alternating_ratio_sum",
    "bell_sinc_closed",
    "exp_sinc_series",
    "inv_quadratic_derivative",
]

METHODS = ("cfn", "stirling")


def sinc_derivative_args(length):
    """Derivatives of sinc at 0 of orders 1..length: (0, -1/3, 0, 1/5, ...)."""
    out = []
    for j in range(1, length + 1):
        if j % 2:
            out.append(Fraction(0))
        else:
            out.append(Fraction((-1) ** (j // 2), j + 1))
    return tuple(out)


def _check_bell_request(n, k, args):
    if n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got n={n}, k={k}")
    if k > n:
        raise ValueError(f"B_(n,k) requires k <= n, got n={n}, k={k}")
    need = n - k + 1 if k > 0 else 0
    if len(args) < need:
        raise ValueError(f"B_({n},{k}) needs {need} arguments, got {len(args)}")


def bell_partial(n, k, args):
    """B_{n,k}(x_1, ..., x_{n-k+1}) by the recurrence

    B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
    """
    args = tuple(as_rational(a) for a in args)
    _check_bell_request(n, k, args)
    # table[kk][nn] = B_{nn,kk}
    table = [[Fraction(0)] * (n + 1) for _ in range(k + 1)]
    table[0][0] = Fraction(1)
    for kk in range(1, k + 1):
        row, prev = table[kk], table[kk - 1]
        for nn in range(kk, n - k + kk + 1):
            acc = Fraction(0)
            for i in range(1, nn - kk + 2):
                x = args[i - 1]
                if x:
                    acc += comb(nn - 1, i - 1) * x * prev[nn - i]
            row[nn] = acc
    return table[k][n]


def bell_partial_series(n, k, args):
    """B_{n,k} by coefficient extraction from (sum_l x_l t^l / l!)^k / k!.

    Independent of the recurrence in :func:`bell_partial`.
    """
    args = tuple(as_rational(a) for a in args)
    _check_bell_request(n, k, args)
    inner = TruncatedSeries([0] + [args[i - 1] / factorial(i) if i <= len(args) else 0
                                   for i in range(1, n + 1)])
    power = TruncatedSeries.constant(1, n)
    for _ in range(k):
        power = mul(power, inner)
    return power[n] * Fraction(factorial(n), factorial(k))


def _ratio(method):
    if method == "cfn":
        return cfn_ratio
    if method == "stirling":
        return cfn_ratio_from_stirling
    raise ValueError(f"method must be one of {METHODS}, got {method!r}")


def alternating_ratio_sum(n, k, method="cfn"):
    """sum_{j=1}^{k} (-1)^j C(k, j) T(n+j, j) / C(n+j, j).

    With method="stirling" each ratio is replaced by its Stirling-number sum.
    """
    ratio = _ratio(method)
    total = Fraction(0)
    for j in range(1, k + 1):
        term = comb(k, j) * ratio(n, j)
        total += -term if j % 2 else term
    return total


def bell_sinc_closed(n, k, method="cfn"):
    """B_{n,k} at the sinc derivatives (0, -1/3, 0, 1/5, ...) in closed form.

    Zero for odd n; for n = 2m it is
    (-1)^(m+k) 2^(2m) / k! * alternating_ratio_sum(2m, k).
    """
    _ratio(method)
    if n < 1 or k < 1 or k > n:
        raise ValueError(f"closed form needs 1 <= k <= n, got n={n}, k={k}")
    if n % 2:
        return Fraction(0)
    m = n // 2
    sign = -1 if (m + k) % 2 else 1
    return sign * Fraction(1 << n, factorial(k)) * alternating_ratio_sum(n, k, method)


def exp_sinc_series(order, method="cfn"):
    """Taylor series of exp(sinc z - 1) up to z^order from the closed Bell forms."""
    _ratio(method)
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for q in range(1, order // 2 + 1):
        n = 2 * q
        bracket = Fraction(0)
        for j in range(1, n + 1):
            term = alternating_ratio_sum(n, j, method) / factorial(j)
            bracket += -term if j % 2 else term
        if q % 2:
            bracket = -bracket
        coeffs[n] = bracket * Fraction(1 << n, factorial(n))
    return TruncatedSeries(coeffs)


def _iroot(a, q):
    """Exact integer q-th root of a >= 0, or None."""
    if a < 2:
        return a
    x = 1 << -(-a.bit_length() // q)
    while True:
        y = ((q - 1) * x + a // x ** (q - 1)) // q
        if y >= x:
            break
        x = y
    return x if x**q == a else None


def _rational_power(base, r):
    """base^r for positive rational base, exact, or ValueError."""
    if r.denominator == 1:
        return base ** r.numerator
    q = r.denominator
    num, den = _iroot(base.numerator, q), _iroot(base.denominator, q)
    if num is None or den is None:
        raise ValueError(f"({base})^({r}) is irrational; use the numeric module instead")
    return Fraction(num, den) ** r.numerator


def inv_quadratic_derivative(k, r, x):
    """k-th derivative of (1 + x^2)^(-r) at a rational point x.

    Evaluates

        k! / (2^k x^k (1+x^2)^r) * sum_j <-r>_j 4^j / j! C(j, k-j) x^(2j) / (1+x^2)^j

    which carries x^(-k), so x = 0 is refused for k >= 1.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    r, x = as_rational(r), as_rational(x)
    if k >= 1 and x == 0:
        raise ValueError("x = 0 is outside the domain of the closed form for k >= 1")
    u = 1 + x * x
    total = Fraction(0)
    for j in range((k + 1) // 2, k + 1):
        total += (falling_factorial(-r, j) * Fraction(4**j, factorial(j))
                  * binomial(j, k - j) * (x * x / u) ** j)
    return total * factorial(k) / (2**k * x**k * _rational_power(u, r))

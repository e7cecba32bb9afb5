"""Truncated formal power series with exact rational coefficients.

A series of order N stores the coefficients of z^0 .. z^N.  Binary operations
truncate to the smaller order of the two operands.
"""

from fractions import Fraction
from math import factorial

from .numbers_core import as_rational

__all__ = ["TruncatedSeries", "cardinal_series", "mul", "log1", "exp1", "pow_rational"]

CARDINAL_KINDS = ("sinc", "sinhc")


class TruncatedSeries:
    """Immutable dense coefficient vector; ``coeffs[i]`` multiplies z^i."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(as_rational(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, c, order):
        return cls([c] + [0] * order)

    @classmethod
    def variable(cls, order):
        """The series z, truncated at ``order``."""
        if order == 0:
            return cls([0])
        return cls([0, 1] + [0] * (order - 1))

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, i):
        return self._coeffs[i]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        if isinstance(other, (list, tuple)):
            return len(other) == len(self._coeffs) and all(
                a == as_rational(b) for a, b in zip(self._coeffs, other)
            )
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(str(c) for c in self._coeffs)}])"

    def truncate(self, order):
        if order < 0:
            raise ValueError("order must be >= 0")
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(as_rational(other), self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order) + 1
        return TruncatedSeries(a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n]))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        c = as_rational(other)
        return TruncatedSeries(c * a for a in self._coeffs)

    __rmul__ = __mul__

    def __pow__(self, r):
        return pow_rational(self, r)


def cardinal_series(kind, order):
    """Taylor series of sin(z)/z ("sinc") or sinh(z)/z ("sinhc") up to z^order."""
    if kind not in CARDINAL_KINDS:
        raise ValueError(f"kind must be one of {CARDINAL_KINDS}, got {kind!r}")
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [Fraction(0)] * (order + 1)
    for j in range(order // 2 + 1):
        sign = -1 if (kind == "sinc" and j % 2) else 1
        coeffs[2 * j] = Fraction(sign, factorial(2 * j + 1))
    return TruncatedSeries(coeffs)


def mul(a, b):
    """Cauchy product truncated to min(order(a), order(b))."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for i in range(n + 1):
        out.append(sum((ac[k] * bc[i - k] for k in range(i + 1)), Fraction(0)))
    return TruncatedSeries(out)


def log1(s):
    """Formal logarithm of a series with constant term 1.

    From s * L' = s':  n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}.
    """
    if s[0] != 1:
        raise ValueError(f"log1 requires constant term 1, got {s[0]}")
    c = s.coeffs
    out = [Fraction(0)] * len(c)
    for n in range(1, len(c)):
        acc = n * c[n]
        for k in range(1, n):
            acc -= k * out[k] * c[n - k]
        out[n] = acc / n
    return TruncatedSeries(out)


def exp1(s):
    """Formal exponential of a series with constant term 0.

    From E' = s' E:  n E_n = sum_{k=1}^{n} k s_k E_{n-k}.
    """
    if s[0] != 0:
        raise ValueError(f"exp1 requires constant term 0, got {s[0]}")
    c = s.coeffs
    out = [Fraction(0)] * len(c)
    out[0] = Fraction(1)
    for n in range(1, len(c)):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += k * c[k] * out[n - k]
        out[n] = acc / n
    return TruncatedSeries(out)


def pow_rational(s, r):
    """s^r = exp(r log s) for a series with constant term 1 and rational r."""
    if s[0] != 1:
        raise ValueError(f"pow_rational requires constant term 1, got {s[0]}")
    return exp1(log1(s) * as_rational(r))

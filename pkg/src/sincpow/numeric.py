"""Floating-point evaluation of truncated expansions and convergence diagnostics."""

import math
from dataclasses import dataclass

from .expansions import sinc_pow_real, sinhc_pow_real
from .numbers_core import as_rational

__all__ = [
    "ConvergenceRecord",
    "eval_series_at",
    "reference_power_eval",
    "convergence_report",
]


@dataclass(frozen=True)
class ConvergenceRecord:
    z: float
    r: float
    order: int
    partial_sum: float
    reference: float
    abs_error: float


def eval_series_at(s, z):
    """Horner evaluation of a truncated series at real z.

    ``float(Fraction)`` divides the big integers with correct rounding, so
    each coefficient enters as the nearest double.
    """
    acc = 0.0
    for c in reversed(s.coeffs):
        acc = acc * z + float(c)
    return acc


def reference_power_eval(function, r, z):
    """(sin z / z)^r or (sinh z / z)^r by direct float evaluation."""
    if function not in ("sinc", "sinhc"):
        raise ValueError(f"unknown function {function!r}")
    r = float(r)
    if z == 0:
        return 1.0
    base = math.sin(z) / z if function == "sinc" else math.sinh(z) / z
    if base <= 0 and not r.is_integer():
        raise ValueError(f"base {base} <= 0 has no real power {r}")
    if base == 0 and r < 0:
        raise ValueError(f"{function}({z}) = 0 cannot be raised to {r}")
    return base**r


def convergence_report(function, r, z, max_order):
    """Partial sums at orders 2, 4, ..., max_order against the direct value."""
    r = as_rational(r)
    if function == "sinc" and r < 0 and abs(z) >= math.pi:
        raise ValueError("negative powers of sinc only converge for |z| < pi")
    reference = reference_power_eval(function, r, z)
    expand = sinc_pow_real if function == "sinc" else sinhc_pow_real
    coeffs = expand(r, max_order).coeffs
    records = []
    partial = 0.0
    zpow = 1.0
    for n, c in enumerate(coeffs):
        partial += float(c) * zpow
        zpow *= z
        if n >= 2 and n % 2 == 0:
            records.append(ConvergenceRecord(
                z=z, r=float(r), order=n, partial_sum=partial,
                reference=reference, abs_error=abs(partial - reference),
            ))
    return records

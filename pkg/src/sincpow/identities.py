"""Finite sweeps over the central factorial / Stirling / Bell identities.

Each ``check_*`` function returns an :class:`IdentityReport`.  Index tuples
inside the identity's stated range that fail go to ``counterexamples``;
tuples evaluated outside that range are kept in ``out_of_range`` and never
count as failures.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .bell import alternating_ratio_sum
from .expansions import stirling_bracket
from .numbers_core import (
    as_rational,
    central_factorial_T,
    cfn_ratio,
    cfn_ratio_from_stirling,
    scaled_T,
    stirling2,
    weighted_stirling,
)

__all__ = [
    "IdentityReport",
    "restricted_growth_strings",
    "count_set_partitions",
    "count_odd_block_partitions",
    "complete_homogeneous",
    "check_parity_vanishing",
    "check_T_S_relations",
    "check_alternating_T_sum",
    "check_odd_blocks",
    "check_symfun",
    "run_identity",
    "IDENTITIES",
]

MAX_ENUMERATION_N = 12
SYMFUN_WEIGHTS = (Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(3, 7))


@dataclass
class IdentityReport:
    identity_id: str
    ranges: dict
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    out_of_range: list = field(default_factory=list)

    @property
    def verified(self):
        return not self.counterexamples

    def compare(self, indices, lhs, rhs):
        self.checked += 1
        if lhs != rhs:
            self.counterexamples.append((indices, lhs, rhs))

    def note_out_of_range(self, indices, lhs, rhs):
        self.out_of_range.append((indices, lhs, rhs))

    @property
    def status(self):
        return "verified" if self.verified else "counterexample"

    def summary(self):
        bounds = ", ".join(f"{k}={v}" for k, v in self.ranges.items())
        line = (f"{self.identity_id}: {self.status} ({bounds}; {self.checked} checked, "
                f"{len(self.counterexamples)} counterexamples, "
                f"{len(self.out_of_range)} out of stated range)")
        return line


# set partitions


def restricted_growth_strings(n):
    """Yield every restricted growth string of length n (one per set partition).

    a[0] = 0 and a[i] <= 1 + max(a[:i]); a[i] is the block holding element i.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for t in range(i + 1, n):
            a[t] = 0
            m[t] = m[i]


@lru_cache(maxsize=None)
def _partition_tallies(n):
    """(all[k], odd[k]): partitions of an n-set into k blocks, and those with all blocks odd."""
    total = [0] * (n + 1)
    odd = [0] * (n + 1)
    sizes = []

    def walk(i):
        if i == n:
            k = len(sizes)
            total[k] += 1
            if all(s & 1 for s in sizes):
                odd[k] += 1
            return
        for b in range(len(sizes)):
            sizes[b] += 1
            walk(i + 1)
            sizes[b] -= 1
        sizes.append(1)
        walk(i + 1)
        sizes.pop()

    walk(0)
    return tuple(total), tuple(odd)


def _check_enumeration(n, k):
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration is capped at n <= {MAX_ENUMERATION_N}, got {n}")


def count_set_partitions(n, k):
    """Brute-force number of partitions of {1..n} into k blocks."""
    _check_enumeration(n, k)
    return _partition_tallies(n)[0][k] if k <= n else 0


def count_odd_block_partitions(n, k):
    """Brute-force number of partitions of {1..n} into k blocks of odd size."""
    _check_enumeration(n, k)
    return _partition_tallies(n)[1][k] if k <= n else 0


def complete_homogeneous(m, variables):
    """h_m(x_1, ..., x_v): the sum of all degree-m monomials in the variables."""
    if m < 0:
        raise ValueError("m must be >= 0")
    h = [Fraction(1)] + [Fraction(0)] * m
    for x in variables:
        x = as_rational(x)
        for d in range(1, m + 1):
            h[d] += x * h[d - 1]
    return h[m]


# sweeps


def _require(cond, msg):
    if not cond:
        raise ValueError(msg)


def check_parity_vanishing(max_j, max_l):
    """T(2j+l+1, l) = 0, plus the 0/1 values of T(2j-1, 2l-1) and T(2j, 2l) for j <= l."""
    _require(max_j >= 1 and max_l >= 1, "bounds must be >= 1")
    report = IdentityReport("parity", {"max_j": max_j, "max_l": max_l})
    for j in range(max_j + 1):
        for ell in range(max_l + 1):
            report.compare(("T(2j+l+1,l)", j, ell), central_factorial_T(2 * j + ell + 1, ell), 0)
    for ell in range(1, max_l + 1):
        for j in range(1, ell + 1):
            expected = Fraction(int(j == ell))
            report.compare(("T(2j-1,2l-1)", j, ell),
                           central_factorial_T(2 * j - 1, 2 * ell - 1), expected)
            report.compare(("T(2j,2l)", j, ell), central_factorial_T(2 * j, 2 * ell), expected)
    return report


def check_T_S_relations(max_j, max_l):
    """T(n+l, l)/C(n+l, l) against its Stirling-number sum, and the odd Stirling sum.

    Even n = 2j and every n <= max_j are swept for 1 <= l <= max_l.  The odd
    sum is stated for l >= 1 only; l = 0 is evaluated (every k >= 1 term
    carries S(k, 0) = 0, leaving 1) and reported as out of range.
    """
    _require(max_j >= 1 and max_l >= 1, "bounds must be >= 1")
    report = IdentityReport("ts-relations", {"max_j": max_j, "max_l": max_l})
    for ell in range(1, max_l + 1):
        for j in range(max_j + 1):
            report.compare(("even", j, ell), cfn_ratio(2 * j, ell), cfn_ratio_from_stirling(2 * j, ell))
            report.compare(("all", j, ell), cfn_ratio(j, ell), cfn_ratio_from_stirling(j, ell))
            report.compare(("odd-sum", j, ell), stirling_bracket(2 * j + 1, ell), 0)
    for j in range(max_j + 1):
        n = 2 * j + 1
        # (2/0)^k is undefined but every k >= 1 term is multiplied by S(k, 0) = 0
        lhs = sum(Fraction((-1) ** k * comb(n, k) * stirling2(k, 0)) for k in range(n + 1)
                  if stirling2(k, 0))
        report.note_out_of_range(("odd-sum", j, 0), lhs, Fraction(0))
    return report


def _scaled_alternating_sum(ell, k):
    """sum_{j=1}^{k} (-1)^(k-j) C(2l+k, 2l+j) 2^(2l) T(2l+j, j), with 2^(2l)T = scaled_T."""
    total = 0
    for j in range(1, k + 1):
        term = comb(2 * ell + k, 2 * ell + j) * scaled_T(2 * ell + j, j)
        total += -term if (k - j) % 2 else term
    return total


def check_alternating_T_sum(max_k):
    """sum_j (-1)^j C(k,j) T(2l+j,j)/C(2l+j,j) = 0 for 1 <= l < k <= max_k.

    Also checked: the Stirling form of the same sum, the odd-block-count form
    sum_j (-1)^(k-j) C(2l+k, 2l+j) scaled_T(2l+j, j) = 0, and, for every
    1 <= l, k <= max_k, the rescaling that links the first and last forms.
    Pairs with l >= k are evaluated and listed as out of range.
    """
    _require(max_k >= 2, "max_k must be >= 2")
    report = IdentityReport("alt-sum", {"max_k": max_k})
    for k in range(1, max_k + 1):
        for ell in range(1, max_k + 1):
            lhs = alternating_ratio_sum(2 * ell, k, "cfn")
            scaled = _scaled_alternating_sum(ell, k)
            link = Fraction((-1) ** k * scaled, 4**ell * comb(2 * ell + k, k))
            report.compare(("rescaling", ell, k), lhs, link)
            if ell < k:
                report.compare(("T-form", ell, k), lhs, 0)
                report.compare(("S-form", ell, k), alternating_ratio_sum(2 * ell, k, "stirling"), 0)
                report.compare(("odd-block-form", ell, k), Fraction(scaled), 0)
            else:
                report.note_out_of_range(("T-form", ell, k), lhs, Fraction(0))
    return report


def check_odd_blocks(max_n):
    """scaled_T and stirling2 against brute-force set-partition counts."""
    _require(0 <= max_n <= MAX_ENUMERATION_N, f"max_n must lie in 0..{MAX_ENUMERATION_N}")
    report = IdentityReport("odd-blocks", {"max_n": max_n})
    for n in range(max_n + 1):
        for k in range(n + 1):
            report.compare(("scaled_T", n, k), scaled_T(n, k), count_odd_block_partitions(n, k))
            report.compare(("stirling2", n, k), stirling2(n, k), count_set_partitions(n, k))
    return report


def check_symfun(max_n, weights=SYMFUN_WEIGHTS):
    """R(n, k, r) = h_{n-k}(r, ..., r+k); R(n, k, -k/2) = T(n, k); odd h at symmetric points."""
    _require(max_n >= 1, "max_n must be >= 1")
    weights = tuple(as_rational(w) for w in weights)
    report = IdentityReport("symfun", {"max_n": max_n, "r": ",".join(str(w) for w in weights)})
    for n in range(max_n + 1):
        for k in range(n + 1):
            for r in weights:
                report.compare(("R=h", n, k, r), weighted_stirling(n, k, r),
                               complete_homogeneous(n - k, [r + i for i in range(k + 1)]))
            report.compare(("R=T", n, k), weighted_stirling(n, k, Fraction(-k, 2)),
                           central_factorial_T(n, k))
    for j in range(max_n + 1):
        for m in range(1, (max_n - j + 1) // 2 + 1):
            points = [Fraction(-j, 2) + i for i in range(j + 1)]
            report.compare(("h_odd", m, j), complete_homogeneous(2 * m - 1, points), 0)
    return report


IDENTITIES = {
    "parity": lambda n: check_parity_vanishing(n, n),
    "ts-relations": lambda n: check_T_S_relations(n, n),
    "alt-sum": check_alternating_T_sum,
    "odd-blocks": check_odd_blocks,
    "symfun": check_symfun,
}


def run_identity(identity_id, bound):
    try:
        check = IDENTITIES[identity_id]
    except KeyError:
        raise ValueError(f"unknown identity {identity_id!r}") from None
    return check(bound)

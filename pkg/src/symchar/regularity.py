"""Counting ell-regular partitions and their density among all partitions.

Everything is exact big-integer arithmetic except the final logarithmic
comparison against the asymptotic limit, which is the one place floats
are appropriate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "CountSeries",
    "ConvergenceRow",
    "partition_counts",
    "regular_counts",
    "hagis_limit",
    "convergence_report",
]


def _check_bound(n) -> None:
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"need a nonnegative integer bound, got {n!r}")


def partition_counts(max_n: int) -> list[int]:
    """p(0), p(1), ..., p(max_n) by Euler's pentagonal-number recurrence."""
    _check_bound(max_n)
    p = [0] * (max_n + 1)
    p[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


@dataclass(frozen=True)
class CountSeries:
    """Counts of ell-regular partitions alongside the full partition counts."""

    ell: int
    values: tuple[int, ...]
    p_values: tuple[int, ...]

    def g(self, n: int) -> Fraction:
        """Density r_ell(n) / p(n)."""
        return Fraction(self.values[n], self.p_values[n])


def regular_counts(ell: int, max_n: int) -> CountSeries:
    """r_ell(0..max_n): numbers of partitions with no part repeated ell times.

    Sparse convolution of p(n) against the pentagonal expansion of
    prod (1 - x^(ell*k)): r_ell(n) = sum_j (-1)^j p(n - ell*gp_j), with
    gp_j = j(3j-1)/2 over all integers j.
    """
    if not isinstance(ell, int) or ell < 2:
        raise DomainError(f"ell must be an integer >= 2, got {ell!r}")
    _check_bound(max_n)
    p = partition_counts(max_n)
    values = []
    for n in range(max_n + 1):
        total = p[n]
        j = 1
        while True:
            g_pos = j * (3 * j - 1) // 2
            g_neg = j * (3 * j + 1) // 2
            if ell * g_pos > n:
                break
            sign = -1 if j % 2 == 1 else 1
            total += sign * p[n - ell * g_pos]
            if ell * g_neg <= n:
                total += sign * p[n - ell * g_neg]
            j += 1
        values.append(total)
    return CountSeries(ell=ell, values=tuple(values), p_values=tuple(p))


def hagis_limit(ell: int) -> float:
    """Limit of log(r_ell(n)/p(n)) / sqrt(n) as n grows.

    Equals -c(1 - sqrt((ell-1)/ell)) with c = 2*sqrt(pi^2/6).
    """
    if not isinstance(ell, int) or ell < 2:
        raise DomainError(f"ell must be an integer >= 2, got {ell!r}")
    c = 2.0 * math.sqrt(math.pi**2 / 6.0)
    return -c * (1.0 - math.sqrt((ell - 1) / ell))


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    normalized_log: float
    gap: float


def convergence_report(ell: int, checkpoints: list[int]) -> list[ConvergenceRow]:
    """log(g_ell(n))/sqrt(n) and its gap to the limit at each checkpoint."""
    if not checkpoints:
        raise DomainError("need at least one checkpoint")
    for n in checkpoints:
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"checkpoints must be positive integers, got {n!r}")
    limit = hagis_limit(ell)
    series = regular_counts(ell, max(checkpoints))
    rows = []
    for n in sorted(checkpoints):
        log_g = math.log(series.values[n]) - math.log(series.p_values[n])
        value = log_g / math.sqrt(n)
        rows.append(ConvergenceRow(n=n, normalized_log=value, gap=abs(value - limit)))
    return rows

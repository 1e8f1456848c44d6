"""Law of the longest run under a constant-shift alternative, and exact power.

Under a constant shift the probability p that a residual is positive
is the same for every observation but differs from 1/2.  The CDF of
the longest run is then a binomial mixture of the bounded-run counts:
Pr(L_n <= x) = sum_k snk(n, x)[k] * p^k * (1-p)^(n-k).

Arithmetic is exact (Fraction) whenever p is rational; otherwise
mpmath with at least 50 significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from .conditional_counts import snk_dp
from .exact_null import CONVENTIONS, TAILS, critical_value, null_table_by_counting

INTERNAL_DPS = 50

Prob = Union[Fraction, mpmath.mpf]


@dataclass(frozen=True)
class AlternativeSpec:
    """Constant-shift alternative, parameterized by p = Pr(residual > 0)."""

    p: Prob
    origin: str = "direct"
    shift: float | None = None
    sigma: float | None = None

    def __post_init__(self):
        if not 0 < self.p < 1:
            raise ValueError("p must lie strictly between 0 and 1")

    @classmethod
    def direct(cls, p: Fraction | float | str) -> "AlternativeSpec":
        """p given directly; rationals (including decimal strings) stay exact."""
        if not isinstance(p, (Fraction, mpmath.mpf)):
            p = Fraction(str(p)) if isinstance(p, str) else Fraction(p)
        return cls(p=p, origin="direct")

    @classmethod
    def gaussian_shift(cls, c: float, sigma: float) -> "AlternativeSpec":
        return cls(
            p=p_from_gaussian_shift(c, sigma),
            origin="gaussian_shift",
            shift=float(c),
            sigma=float(sigma),
        )


@dataclass(frozen=True)
class PowerResult:
    n: int
    alpha: Fraction
    tail: str
    convention: str
    spec: AlternativeSpec
    power: Prob
    critical_region: str


def p_from_gaussian_shift(c: float, sigma: float) -> mpmath.mpf:
    """p = Phi(c / sigma) for centered Gaussian errors shifted by c."""
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    with mpmath.workdps(INTERNAL_DPS):
        return mpmath.ncdf(mpmath.mpf(c) / mpmath.mpf(sigma))


def alt_cdf(n: int, x: int, spec: AlternativeSpec) -> Prob:
    """Pr(L_n <= x) under the alternative."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= x <= n:
        raise ValueError("x must lie in 0..n")
    if x == 0:
        return Fraction(0) if isinstance(spec.p, Fraction) else mpmath.mpf(0)
    counts = snk_dp(n, x).counts
    p = spec.p
    if isinstance(p, Fraction):
        q = 1 - p
        return sum(
            counts[k] * p**k * q ** (n - k) for k in range(n + 1) if counts[k]
        )
    with mpmath.workdps(INTERNAL_DPS):
        p = mpmath.mpf(p)
        q = 1 - p
        return mpmath.fsum(
            counts[k] * p**k * q ** (n - k) for k in range(n + 1) if counts[k]
        )


def power(
    n: int,
    alpha: Fraction | float | str,
    tail: str,
    convention: str,
    spec: AlternativeSpec,
) -> PowerResult:
    """Exact rejection probability of the longest-run test under the alternative."""
    alpha = Fraction(alpha)
    if tail not in TAILS:
        raise ValueError(f"unknown tail {tail!r}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if tail == "unilateral":
        cv = critical_value(n, alpha, convention)
        pw = 1 - alt_cdf(n, min(cv.c, n), spec)
        region = f"L > {cv.c}"
    else:
        lo = critical_value(n, 1 - alpha / 2, convention)
        hi = critical_value(n, alpha / 2, convention)
        pw = alt_cdf(n, min(lo.c - 1, n), spec) if lo.c >= 1 else (
            Fraction(0) if isinstance(spec.p, Fraction) else mpmath.mpf(0)
        )
        pw = pw + (1 - alt_cdf(n, min(hi.c, n), spec))
        region = f"L < {lo.c} or L > {hi.c}"
    return PowerResult(
        n=n,
        alpha=alpha,
        tail=tail,
        convention=convention,
        spec=spec,
        power=pw,
        critical_region=region,
    )


def attained_size(n: int, alpha: Fraction | float | str, tail: str, convention: str) -> Fraction:
    """Exact null probability of the configured rejection region."""
    alpha = Fraction(alpha)
    table = null_table_by_counting(n)
    if tail == "unilateral":
        cv = critical_value(n, alpha, convention)
        return table.sf(cv.c)
    lo = critical_value(n, 1 - alpha / 2, convention)
    hi = critical_value(n, alpha / 2, convention)
    return table.cdf(lo.c - 1) + table.sf(hi.c)

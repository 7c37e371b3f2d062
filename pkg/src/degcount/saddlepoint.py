"""Saddle-point machinery and asymptotic counts for degree-constrained graphs.

The mean-degree function x * Set_{D-1}(x) / Set_D(x) is strictly increasing
from min(D) to max(D) on the positive axis whenever the set has at least two
members; its unique preimage of 2m/n is the saddle point driving every
asymptotic formula here.  Everything is computed in natural-log space since
the counts overflow doubles around n = 90.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .degree_sets import INFINITE, DegreeSet
from .tables import infeasibility_reason

_LN2 = math.log(2.0)


class RegularDegreeSetError(ValueError):
    """The degree set is a singleton; use the closed regular-case forms."""


class InfeasibleRegimeError(ValueError):
    """2m/n is not strictly between min(D) and max(D)."""


def mean_degree(degree_set: DegreeSet, x: float) -> float:
    """x * Set_{D-1}(x) / Set_D(x): the Boltzmann expected degree at x."""
    if degree_set.size == 1:
        raise RegularDegreeSetError(
            "mean-degree function is degenerate for a one-member set")
    if x <= 0:
        raise ValueError("argument must be positive")
    ratio = math.exp(degree_set.shift(1).egf_log(x) - degree_set.egf_log(x))
    return x * ratio


def mean_degree_slope(degree_set: DegreeSet, x: float) -> float:
    """Derivative of :func:`mean_degree`; positive on the whole axis."""
    if degree_set.size == 1:
        raise RegularDegreeSetError(
            "mean-degree function is degenerate for a one-member set")
    if x <= 0:
        raise ValueError("argument must be positive")
    log0 = degree_set.egf_log(x)
    r1 = math.exp(degree_set.shift(1).egf_log(x) - log0)
    r2 = math.exp(degree_set.shift(2).egf_log(x) - log0)
    return r1 + x * r2 - x * r1 * r1


def solve_mean_degree(degree_set: DegreeSet, target: float) -> float:
    """Unique positive x with mean_degree(x) == target.

    Brackets the root geometrically from x = 1, bisects the bracket down to
    1e-3 relative width, then polishes with Newton to 1e-13 relative.  The
    mean-degree function is continuous and strictly increasing with range
    ]min(D), max(D)[, so the bracketing always succeeds for an in-range
    target.
    """
    if degree_set.size == 1:
        raise RegularDegreeSetError(
            "no saddle point for a one-member set; use the regular closed form")
    r = degree_set.valuation
    mx = degree_set.max_degree
    if not (r < target and (mx is INFINITE or target < mx)):
        raise InfeasibleRegimeError(
            f"target {target} outside the open range ]{r}, {mx}[")

    f = lambda x: mean_degree(degree_set, x) - target
    lo = hi = 1.0
    f1 = f(1.0)
    if f1 == 0.0:
        return 1.0
    if f1 > 0.0:
        lo = 0.5
        for _ in range(200):
            if f(lo) < 0.0:
                break
            hi = lo
            lo *= 0.5
        else:
            raise ArithmeticError("failed to bracket the saddle point below 1")
    else:
        hi = 2.0
        for _ in range(200):
            if f(hi) > 0.0:
                break
            lo = hi
            hi *= 2.0
        else:
            raise ArithmeticError("failed to bracket the saddle point above 1")

    while hi - lo > 1e-3 * lo:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid

    x = 0.5 * (lo + hi)
    for _ in range(60):
        fx = f(x)
        if fx < 0.0:
            lo = max(lo, x)
        elif fx > 0.0:
            hi = min(hi, x)
        step = fx / mean_degree_slope(degree_set, x)
        nxt = x - step
        if not lo <= nxt <= hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - x) <= 1e-13 * x:
            return nxt
        x = nxt
    return x


def loop_intensity(degree_set: DegreeSet, n: int, m: int, x: float) -> float:
    """(n / 4m) * x^2 * Set_{D-2}(x) / Set_D(x).

    At the saddle point this is the limiting expected number of loops in a
    random multigraph of the model; its square is the expected number of
    double edges.
    """
    if x <= 0:
        raise ValueError("argument must be positive")
    ratio = math.exp(degree_set.shift(2).egf_log(x) - degree_set.egf_log(x))
    return (n / (4.0 * m)) * x * x * ratio


@dataclass(frozen=True)
class SaddlePoint:
    """Saddle-point bundle for one (degree set, n, m) instance."""

    x: float
    mean_degree: float
    slope: float
    loop_intensity: float
    log_egf: float


def saddle_point(degree_set: DegreeSet, n: int, m: int) -> SaddlePoint:
    """Solve mean_degree(x) = 2m/n and evaluate the companion quantities."""
    if n <= 0 or m <= 0:
        raise InfeasibleRegimeError("need at least one vertex and one edge")
    target = 2.0 * m / n
    x = solve_mean_degree(degree_set, target)
    return SaddlePoint(
        x=x,
        mean_degree=mean_degree(degree_set, x),
        slope=mean_degree_slope(degree_set, x),
        loop_intensity=loop_intensity(degree_set, n, m, x),
        log_egf=degree_set.egf_log(x),
    )


@dataclass(frozen=True)
class AsymptoticCount:
    """A count estimate carried in natural-log space."""

    log_value: float
    n: int
    m: int
    feasible: bool

    @property
    def log10_value(self) -> float:
        return self.log_value / math.log(10.0)

    def mantissa_exponent(self) -> tuple[float, int]:
        """(mantissa in [1, 10), decimal exponent); (0.0, 0) if infeasible."""
        if not self.feasible or self.log_value == -math.inf:
            return (0.0, 0)
        l10 = self.log10_value
        e = math.floor(l10)
        return (10.0 ** (l10 - e), int(e))


def _infeasible(n: int, m: int) -> AsymptoticCount:
    return AsymptoticCount(-math.inf, n, m, False)


def _regular_log_weight(d: int, n: int, m: int) -> float:
    return (math.lgamma(2 * m + 1) - m * _LN2 - math.lgamma(m + 1)
            - n * math.lgamma(d + 1))


def multigraph_count_asymptotic(degree_set: DegreeSet, n: int, m: int) -> AsymptoticCount:
    """Saddle-point estimate of the total multigraph weight.

    (2m)!/(2^m m!) * p / sqrt(2 pi n x slope) * Set(x)^n / x^(2m), with x the
    saddle point, accurate to a relative O(1/n).  A singleton degree set
    returns its exact closed form instead.  Infeasible (n, m) come back with
    feasible=False and log_value = -inf; a boundary regime (2m/n equal to
    min(D) or max(D), where instances may exist but the saddle point does
    not) raises InfeasibleRegimeError instead.
    """
    if n <= 0 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if degree_set.size == 1:
        d = degree_set.members[0]
        if 2 * m != n * d:
            return _infeasible(n, m)
        return AsymptoticCount(_regular_log_weight(d, n, m), n, m, True)
    if infeasibility_reason(degree_set, n, m) is not None:
        return _infeasible(n, m)
    sp = saddle_point(degree_set, n, m)
    p = degree_set.periodicity
    log_value = (math.lgamma(2 * m + 1) - m * _LN2 - math.lgamma(m + 1)
                 + math.log(p)
                 - 0.5 * math.log(2.0 * math.pi * n * sp.x * sp.slope)
                 + n * sp.log_egf - 2 * m * math.log(sp.x))
    return AsymptoticCount(log_value, n, m, True)


def simple_graph_count_asymptotic(degree_set: DegreeSet, n: int, m: int) -> AsymptoticCount:
    """Saddle-point estimate of the number of simple graphs.

    The multigraph estimate times exp(-L^2 - L) where L is the loop
    intensity at the saddle point.  For a singleton set {d} the correction
    uses L = n d (d-1) / (4m) directly.
    """
    base = multigraph_count_asymptotic(degree_set, n, m)
    if not base.feasible:
        return base
    if degree_set.size == 1:
        d = degree_set.members[0]
        lam = n * d * (d - 1) / (4.0 * m) if m > 0 and d >= 2 else 0.0
    else:
        lam = saddle_point(degree_set, n, m).loop_intensity
    return AsymptoticCount(base.log_value - lam * lam - lam, n, m, True)


def acceptance_probability(degree_set: DegreeSet, n: int, m: int) -> float:
    """Limiting probability that a model multigraph is simple.

    exp(-L^2 - L) with L the loop intensity at the saddle point; the ratio of
    the simple-graph estimate to the multigraph estimate.  The expected
    number of pairing attempts per simple graph is its reciprocal.
    """
    lam = saddle_point(degree_set, n, m).loop_intensity
    return math.exp(-lam * lam - lam)

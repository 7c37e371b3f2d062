"""Exact big-integer tables of scaled generating-function power coefficients.

The central object is the table T[i][j] = j! * [x^j] Set(x)^i, where Set is
the exponential generating function of a degree set.  Entry T[i][j] counts the
sequences of i disjoint labelled sets partitioning {1..j} with every block
size allowed, which is exactly the number of half-edge orderings of
multigraphs realised by i vertices carrying j half-edges.  All entries are
exact Python integers.

Each degree-set family gets a recurrence that fills a row in O(1) big-integer
operations per cell instead of the generic O(|D|) convolution:

* finite lists use the defining convolution over the members,
* minimum-degree sets use (e^x - head)' = (e^x - head) + x^(delta-1)/(delta-1)!,
* even sets use (cosh^i)'' = i^2 cosh^i - i(i-1) cosh^(i-2),
* odd sets use (sinh^i)'' = i^2 sinh^i + i(i-1) sinh^(i-2).

The generic convolution T[i][j] = sum_d C(j,d) T[i-1][j-d] remains the ground
truth; the test suite pins every fast path against it.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .degree_sets import INFINITE, DegreeSet


def _rows_finite(members, j_max):
    row = [1] + [0] * j_max
    yield row
    comb = math.comb
    prev = row
    while True:
        new = [0] * (j_max + 1)
        for j in range(j_max + 1):
            s = 0
            for d in members:
                if d > j:
                    break
                w = prev[j - d]
                if w:
                    s += comb(j, d) * w
            new[j] = s
        yield new
        prev = new


def _rows_min(delta, j_max):
    row = [1] + [0] * j_max
    yield row
    comb = math.comb
    prev = row
    i = 1
    while True:
        new = [0] * (j_max + 1)
        if delta == 0:
            new[0] = 1
            for j in range(j_max):
                new[j + 1] = i * new[j]
        else:
            dm1 = delta - 1
            for j in range(j_max):
                t = i * new[j]
                if j >= dm1:
                    w = prev[j - dm1]
                    if w:
                        t += i * comb(j, dm1) * w
                new[j + 1] = t
        yield new
        prev = new
        i += 1


def _rows_parity(kind_odd, j_max):
    row0 = [1] + [0] * j_max
    yield row0
    if kind_odd:
        row1 = [1 if j % 2 == 1 else 0 for j in range(j_max + 1)]
    else:
        row1 = [1 if j % 2 == 0 else 0 for j in range(j_max + 1)]
    yield row1
    back2, i = row0, 2
    prev = row1
    sign = 1 if kind_odd else -1
    while True:
        new = [0] * (j_max + 1)
        start = i % 2 if kind_odd else 0
        if not kind_odd:
            new[0] = 1
        ii, cross = i * i, sign * i * (i - 1)
        for j in range(start, j_max - 1, 2):
            new[j + 2] = ii * new[j] + cross * back2[j]
        yield new
        back2, prev = prev, new
        i += 1


def _iter_rows(degree_set: DegreeSet, j_max: int):
    if degree_set.kind == "finite":
        return _rows_finite(degree_set.members, j_max)
    if degree_set.kind == "min":
        return _rows_min(degree_set.delta, j_max)
    return _rows_parity(degree_set.kind == "odd", j_max)


class CoefficientTable:
    """All rows T[0..n_max][0..j_max] for one degree set, built eagerly."""

    def __init__(self, degree_set: DegreeSet, n_max: int, j_max: int):
        if n_max < 0 or j_max < 0:
            raise ValueError("table bounds must be nonnegative")
        self.degree_set = degree_set
        self.n_max = n_max
        self.j_max = j_max
        gen = _iter_rows(degree_set, j_max)
        self._rows = [next(gen) for _ in range(n_max + 1)]

    def value(self, i: int, j: int) -> int:
        """T[i][j]; zero for j < 0, so shifted lookups need no guards."""
        if j < 0:
            return 0
        return self._rows[i][j]

    def row(self, i: int):
        return tuple(self._rows[i])


def build_table(degree_set: DegreeSet, n_max: int, j_max: int) -> CoefficientTable:
    """Build the full table of T[i][j] = j! * [x^j] Set(x)^i."""
    return CoefficientTable(degree_set, n_max, j_max)


def power_coefficient(degree_set: DegreeSet, n: int, j: int) -> int:
    """T[n][j], keeping only the live rows (constant memory in n)."""
    if n < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    gen = _iter_rows(degree_set, j)
    row = next(gen)
    for _ in range(n):
        row = next(gen)
    return row[j]


def infeasibility_reason(degree_set: DegreeSet, n: int, m: int) -> str | None:
    """Why no multigraph on n vertices and m edges can fit, or None.

    These are the necessary emptiness conditions: total degree out of range,
    or the degree-set periodicity not dividing the excess total degree.  A
    singleton set {d} is covered by the range checks, which then force
    2m = n*d exactly.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if n == 0:
        return None if m == 0 else "no vertices to carry the edges"
    total = 2 * m
    r = degree_set.valuation
    if total < r * n:
        return f"total degree {total} is below n*min(D) = {r * n}"
    mx = degree_set.max_degree
    if mx is not INFINITE and total > n * mx:
        return f"total degree {total} exceeds n*max(D) = {n * mx}"
    p = degree_set.periodicity
    if p is not INFINITE and p > 0 and (total - r * n) % p != 0:
        return (f"periodicity {p} does not divide 2m - n*min(D) = "
                f"{total - r * n}")
    return None


def multigraph_weight(degree_set: DegreeSet, n: int, m: int,
                      table: CoefficientTable | None = None) -> Fraction:
    """Total orderings-compensated weight of multigraphs on n labelled
    vertices with m edges and every degree in the set.

    Equals T[n][2m] / (2^m m!), an exact rational.  Zero when no such
    multigraph exists.  A singleton set {d} short-circuits to the closed
    form (2m)! / (2^m m! d!^n).
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if degree_set.size == 1:
        d = degree_set.members[0]
        if 2 * m != n * d:
            return Fraction(0)
        return Fraction(math.factorial(2 * m),
                        (1 << m) * math.factorial(m) * math.factorial(d) ** n)
    if infeasibility_reason(degree_set, n, m) is not None:
        return Fraction(0)
    if table is not None and table.n_max >= n and table.j_max >= 2 * m:
        t = table.value(n, 2 * m)
    else:
        t = power_coefficient(degree_set, n, 2 * m)
    return Fraction(t, (1 << m) * math.factorial(m))


def mixed_power_coefficient(degree_set: DegreeSet, a: int, b: int, j: int) -> int:
    """j! * [x^j] ( Set_{D-2}(x)^a * Set_D(x)^b ), exact.

    Computed as the binomial convolution of the tables of the twice-shifted
    and the original set.  Raises DegenerateShiftError if the shift empties
    the set.
    """
    if a < 0 or b < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    shifted = degree_set.shift(2)
    ta = build_table(shifted, a, j)
    tb = build_table(degree_set, b, j)
    comb = math.comb
    total = 0
    row_a = ta.row(a)
    row_b = tb.row(b)
    for k in range(j + 1):
        wa = row_a[k]
        if not wa:
            continue
        wb = row_b[j - k]
        if wb:
            total += comb(j, k) * wa * wb
    return total

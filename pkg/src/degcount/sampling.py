"""Random generation: exact degree sequences, half-edge pairing, rejection.

Two generators are provided.  The exact one draws a degree sequence with
probability proportional to prod 1/d_i! among all admissible sequences of
fixed total, using the big-integer coefficient table; the draw compares a
uniform random integer against exact integer prefix weights, so there is no
floating-point bias at all.  The Boltzmann one draws degrees i.i.d. with
P(d) proportional to x^d/d!, giving a random edge count.

Both finish by pairing half-edges uniformly, which weights every multigraph
by its compensation factor; rejecting until simple therefore yields the
uniform distribution on simple graphs.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .degree_sets import DegenerateShiftError, DegreeSet
from .multigraph import Multigraph
from .saddlepoint import (InfeasibleRegimeError, RegularDegreeSetError,
                          acceptance_probability, solve_mean_degree)
from .tables import CoefficientTable, build_table

# Candidate lists no longer than this get a cached cumulative-weight row,
# turning repeat visits into a bisect.
_CACHE_WIDTH = 64


class InfeasibleInstanceError(ValueError):
    """No degree sequence from the set sums to 2m over n vertices."""


class SamplerExhausted(RuntimeError):
    """Rejection sampling hit its attempt budget; carries the report."""

    def __init__(self, message: str, report: "SampleReport"):
        super().__init__(message)
        self.report = report


@dataclass
class SampleReport:
    """Counters for one sampling run; merge by adding fields."""

    samples_requested: int = 0
    samples_produced: int = 0
    rejections: int = 0
    odd_sum_retries: int = 0

    @property
    def attempts(self) -> int:
        return self.samples_produced + self.rejections

    @property
    def empirical_acceptance(self) -> float:
        return self.samples_produced / self.attempts if self.attempts else 0.0

    def merge(self, other: "SampleReport") -> "SampleReport":
        return SampleReport(
            self.samples_requested + other.samples_requested,
            self.samples_produced + other.samples_produced,
            self.rejections + other.rejections,
            self.odd_sum_retries + other.odd_sum_retries,
        )

    def as_dict(self) -> dict:
        return {
            "samples_requested": self.samples_requested,
            "samples_produced": self.samples_produced,
            "rejections": self.rejections,
            "odd_sum_retries": self.odd_sum_retries,
            "empirical_acceptance": self.empirical_acceptance,
        }


def make_rng(seed) -> np.random.Generator:
    """Seedable generator; spawn per-worker streams via numpy SeedSequence."""
    return np.random.default_rng(seed)


def _randbelow(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in [0, bound), exact for arbitrary-size bounds."""
    if bound <= 0:
        raise ValueError("bound must be positive")
    if bound <= (1 << 63):
        return int(rng.integers(bound))
    k = bound.bit_length()
    nbytes = (k + 7) // 8
    shift = 8 * nbytes - k
    while True:
        value = int.from_bytes(rng.bytes(nbytes), "big") >> shift
        if value < bound:
            return value


def pair_half_edges(degrees, rng: np.random.Generator) -> Multigraph:
    """Uniform random pairing of the half-edges attached per the degrees.

    Shuffles the 2m half-edge slots and pairs consecutive slots, which
    induces the uniform perfect matching; each multigraph with the given
    degree sequence then appears with probability proportional to its
    compensation factor.
    """
    degrees = [int(d) for d in degrees]
    total = sum(degrees)
    if total % 2 != 0:
        raise ValueError("degree sum must be even to pair half-edges")
    n = len(degrees)
    stubs = [v for v in range(1, n + 1) for _ in range(degrees[v - 1])]
    perm = iter(rng.permutation(total).tolist())
    pairs = [(stubs[a], stubs[b]) for a, b in zip(perm, perm)]
    return Multigraph(n, pairs)


class DegreeSequenceSampler:
    """Exact sampler of degree sequences and multigraphs at fixed (n, m).

    Holds the coefficient table for its instance; immutable once built, so
    one sampler can serve many concurrent generators as long as each worker
    owns its own rng stream.
    """

    def __init__(self, degree_set: DegreeSet, n: int, m: int,
                 table: CoefficientTable | None = None):
        if n < 0 or m < 0:
            raise ValueError("n and m must be nonnegative")
        self.degree_set = degree_set
        self.n = n
        self.m = m
        if table is None or table.n_max < n or table.j_max < 2 * m:
            table = build_table(degree_set, n, 2 * m)
        self.table = table
        if table.value(n, 2 * m) <= 0:
            raise InfeasibleInstanceError(
                f"no degree sequence from {degree_set} on {n} vertices sums to {2 * m}")
        self._rows: dict[tuple[int, int], tuple[list[int], list[int]]] = {}
        self._default_attempts: int | None = None

    # -- degree sequences ---------------------------------------------------

    def _cached_row(self, i: int, j: int):
        key = (i, j)
        row = self._rows.get(key)
        if row is None:
            comb = math.comb
            value = self.table.value
            ds, cums = [], []
            acc = 0
            for d in self.degree_set.members_up_to(j):
                w = comb(j, d) * value(i - 1, j - d)
                if w:
                    acc += w
                    ds.append(d)
                    cums.append(acc)
            row = (ds, cums)
            self._rows[key] = row
        return row

    def _draw_degree(self, i: int, j: int, rng) -> int:
        total = self.table.value(i, j)
        target = _randbelow(rng, total)
        if self.degree_set.count_up_to(j) <= _CACHE_WIDTH:
            ds, cums = self._cached_row(i, j)
            return ds[bisect_right(cums, target)]
        comb = math.comb
        value = self.table.value
        acc = 0
        for d in self.degree_set.members_up_to(j):
            w = comb(j, d) * value(i - 1, j - d)
            if w:
                acc += w
                if target < acc:
                    return d
        raise AssertionError("prefix weights did not reach the row total")

    def sample_degrees(self, rng: np.random.Generator) -> list[int]:
        """One sequence (d_1..d_n), every d_i allowed, summing to 2m.

        Drawn with probability proportional to prod 1/d_i! among all such
        sequences, exactly: the last degree is drawn from the table ratio law,
        then the remainder recursively.
        """
        degrees = [0] * self.n
        j = 2 * self.m
        for i in range(self.n, 0, -1):
            d = self._draw_degree(i, j, rng)
            degrees[i - 1] = d
            j -= d
        if j != 0:
            raise AssertionError("degree sequence does not exhaust the total")
        return degrees

    # -- multigraphs ----------------------------------------------------------

    def sample_multigraph(self, rng: np.random.Generator) -> Multigraph:
        """One multigraph, weighted by its compensation factor."""
        return pair_half_edges(self.sample_degrees(rng), rng)

    def default_max_attempts(self) -> int:
        if self._default_attempts is None:
            try:
                acc = acceptance_probability(self.degree_set, self.n, self.m)
            except (RegularDegreeSetError, InfeasibleRegimeError,
                    DegenerateShiftError):
                acc = self._regular_acceptance()
            if acc is None or acc <= 0.0:
                self._default_attempts = 10 ** 6
            else:
                self._default_attempts = max(1, 10 * math.ceil(1.0 / acc))
        return self._default_attempts

    def _regular_acceptance(self):
        if self.degree_set.size != 1 or self.m == 0:
            return None
        d = self.degree_set.members[0]
        lam = self.n * d * (d - 1) / (4.0 * self.m)
        return math.exp(-lam * lam - lam)

    def sample_simple(self, rng: np.random.Generator,
                      max_attempts: int | None = None) -> tuple[Multigraph, SampleReport]:
        """Redraw multigraphs until one is simple; uniform over simple graphs."""
        if max_attempts is None:
            max_attempts = self.default_max_attempts()
        if max_attempts < 1:
            raise ValueError("max_attempts must be at least 1")
        report = SampleReport(samples_requested=1)
        for _ in range(max_attempts):
            graph = self.sample_multigraph(rng)
            if graph.is_simple():
                report.samples_produced += 1
                return graph, report
            report.rejections += 1
        raise SamplerExhausted(
            f"no simple graph in {max_attempts} attempts", report)


# -- Boltzmann generator ------------------------------------------------------

def boltzmann_degree_law(degree_set: DegreeSet, x: float,
                         tail: float = 1e-18) -> tuple[np.ndarray, np.ndarray]:
    """Support and probabilities of the degree law P(d) = (x^d/d!) / Set(x).

    Infinite sets are truncated where the factorial tail drops below `tail`
    relative to the accumulated mass.
    """
    if x <= 0:
        raise ValueError("parameter must be positive")
    support, weights = [], []
    acc = 0.0
    lx = math.log(x)
    for d in degree_set.members_up_to(10 ** 6):
        w = math.exp(d * lx - math.lgamma(d + 1))
        support.append(d)
        weights.append(w)
        acc += w
        if d > x and w < tail * acc:
            break
    probs = np.array(weights) / acc
    return np.array(support), probs


def boltzmann_sample(degree_set: DegreeSet, n: int, x: float,
                     rng: np.random.Generator) -> tuple[Multigraph, SampleReport]:
    """n i.i.d. degrees from the Boltzmann law at x, then a uniform pairing.

    A sequence with odd total is discarded wholesale and redrawn; the report
    counts those retries.  The edge count of the output is random with mean
    n * mean_degree(x) / 2.
    """
    support, probs = boltzmann_degree_law(degree_set, x)
    report = SampleReport(samples_requested=1)
    while True:
        degrees = rng.choice(support, size=n, p=probs)
        if int(degrees.sum()) % 2 == 0:
            break
        report.odd_sum_retries += 1
    graph = pair_half_edges(degrees, rng)
    report.samples_produced = 1
    return graph, report


def boltzmann_tune(degree_set: DegreeSet, target_mean_degree: float) -> float:
    """Parameter x making the Boltzmann mean degree equal the target.

    The expected degree at parameter x is exactly the mean-degree function,
    so this inverts it; the target must lie strictly between min(D) and
    max(D).
    """
    return solve_mean_degree(degree_set, target_mean_degree)

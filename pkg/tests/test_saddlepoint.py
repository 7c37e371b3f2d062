import math

import pytest

from degcount import (DegreeSet, InfeasibleRegimeError, RegularDegreeSetError,
                      acceptance_probability, loop_intensity, mean_degree,
                      mean_degree_slope, multigraph_count_asymptotic,
                      multigraph_weight, saddle_point,
                      simple_graph_count_asymptotic, solve_mean_degree)
from degcount.bruteforce import count_simple_graphs

from conftest import SADDLE_FAMILY, SADDLE_FAMILY_IDS


def log_fraction(f):
    return math.log(f.numerator) - math.log(f.denominator)


def grid_targets(ds, count=20):
    r = ds.valuation
    hi = min(ds.max_degree, r + 10)
    return [r + (hi - r) * (i + 0.5) / count for i in range(count)]


class TestMeanDegree:
    def test_unconstrained_is_identity(self):
        ds = DegreeSet.min_degree(0)
        for x in (0.2, 1.0, 7.5):
            assert mean_degree(ds, x) == pytest.approx(x, rel=1e-13)

    def test_even_is_x_tanh(self):
        ds = DegreeSet.even()
        for x in (0.4, 1.0, 3.0):
            assert mean_degree(ds, x) == pytest.approx(x * math.tanh(x), rel=1e-13)

    def test_one_three_at_two(self):
        assert mean_degree(DegreeSet.finite([1, 3]), 2.0) == pytest.approx(
            9 / 5, rel=1e-13)

    def test_singleton_rejected(self):
        with pytest.raises(RegularDegreeSetError):
            mean_degree(DegreeSet.finite([2]), 1.0)

    @pytest.mark.parametrize("ds", SADDLE_FAMILY, ids=SADDLE_FAMILY_IDS)
    def test_strictly_increasing(self, ds):
        xs = [0.05 * k for k in range(1, 401)]
        values = [mean_degree(ds, x) for x in xs]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("ds", SADDLE_FAMILY, ids=SADDLE_FAMILY_IDS)
    def test_range_endpoints(self, ds):
        assert mean_degree(ds, 1e-6) == pytest.approx(ds.valuation, abs=1e-4)
        if ds.kind == "finite":
            assert mean_degree(ds, 1e3) == pytest.approx(ds.max_degree, rel=1e-3)


class TestSlope:
    def test_unconstrained_slope_is_one(self):
        ds = DegreeSet.min_degree(0)
        for x in (0.3, 2.0, 9.0):
            assert mean_degree_slope(ds, x) == pytest.approx(1.0, rel=1e-12)

    def test_even_slope_closed_form(self):
        t = math.tanh(1.0)
        expected = t + 1.0 * (1 - t * t)
        assert mean_degree_slope(DegreeSet.even(), 1.0) == pytest.approx(
            expected, rel=1e-12)

    @pytest.mark.parametrize("ds", SADDLE_FAMILY, ids=SADDLE_FAMILY_IDS)
    @pytest.mark.parametrize("x", [0.35, 1.0, 2.2, 5.0])
    def test_matches_central_difference(self, ds, x):
        h = 1e-6 * x
        fd = (mean_degree(ds, x + h) - mean_degree(ds, x - h)) / (2 * h)
        assert mean_degree_slope(ds, x) == pytest.approx(fd, rel=1e-6)


class TestSolve:
    def test_unconstrained(self):
        ds = DegreeSet.min_degree(0)
        sp = saddle_point(ds, 100, 75)
        assert sp.x == pytest.approx(1.5, rel=1e-12)

    def test_even_target_one(self):
        x = solve_mean_degree(DegreeSet.even(), 1.0)
        assert x == pytest.approx(1.19968, abs=1e-5)
        assert x * math.tanh(x) == pytest.approx(1.0, rel=1e-12)

    def test_one_three_inverse(self):
        assert solve_mean_degree(DegreeSet.finite([1, 3]), 9 / 5) == pytest.approx(
            2.0, rel=1e-12)

    def test_out_of_range(self):
        with pytest.raises(InfeasibleRegimeError):
            solve_mean_degree(DegreeSet.finite([1, 3]), 3.5)
        with pytest.raises(InfeasibleRegimeError):
            solve_mean_degree(DegreeSet.min_degree(2), 1.5)

    @pytest.mark.parametrize("ds", SADDLE_FAMILY, ids=SADDLE_FAMILY_IDS)
    def test_solver_tolerance_grid(self, ds):
        for target in grid_targets(ds):
            x = solve_mean_degree(ds, target)
            assert abs(mean_degree(ds, x) - target) <= 1e-12 * target

    @pytest.mark.parametrize("ds", SADDLE_FAMILY, ids=SADDLE_FAMILY_IDS)
    def test_round_trip_identity(self, ds):
        for x in (0.3, 0.8, 1.7, 3.1):
            target = mean_degree(ds, x)
            assert solve_mean_degree(ds, target) == pytest.approx(x, rel=1e-10)


class TestLoopIntensity:
    def test_unconstrained_value(self):
        assert loop_intensity(DegreeSet.min_degree(0), 100, 75, 1.5) == \
            pytest.approx(0.75, rel=1e-12)

    def test_even_shift_invariance(self):
        # even - 2 = even makes the generating-function ratio equal 1
        n, m = 10, 7
        x = 1.3
        assert loop_intensity(DegreeSet.even(), n, m, x) == pytest.approx(
            (n / (4 * m)) * x * x, rel=1e-12)

    def test_positive(self):
        sp = saddle_point(DegreeSet.finite([2, 3]), 10, 12)
        assert sp.loop_intensity > 0


class TestSaddlePointBundle:
    @pytest.mark.parametrize("ds", SADDLE_FAMILY, ids=SADDLE_FAMILY_IDS)
    def test_invariants(self, ds):
        n = 30
        r = ds.valuation
        mx = min(ds.max_degree, r + 10)
        # pick a feasible m strictly inside the regime
        m = None
        for cand in range(1, 15 * n):
            if r < 2 * cand / n < mx and \
                    multigraph_weight(ds, n, cand) != 0:
                m = cand
                break
        assert m is not None
        sp = saddle_point(ds, n, m)
        assert abs(sp.mean_degree - 2 * m / n) <= 1e-12 * (2 * m / n)
        assert sp.slope > 0
        assert sp.loop_intensity > 0
        assert sp.log_egf == pytest.approx(ds.egf_log(sp.x))


class TestAsymptoticCounts:
    def test_infeasible_periodicity(self):
        res = multigraph_count_asymptotic(DegreeSet.finite([1, 3]), 3, 2)
        assert not res.feasible
        assert res.log_value == -math.inf

    def test_unconstrained_convergence(self):
        ds = DegreeSet.min_degree(0)
        n, m = 200, 150
        exact = multigraph_weight(ds, n, m)
        res = multigraph_count_asymptotic(ds, n, m)
        assert res.feasible
        assert abs(math.exp(res.log_value - log_fraction(exact)) - 1) < 0.02

    def test_even_convergence(self):
        ds = DegreeSet.even()
        n, m = 200, 100
        exact = multigraph_weight(ds, n, m)
        res = multigraph_count_asymptotic(ds, n, m)
        assert abs(math.exp(res.log_value - log_fraction(exact)) - 1) < 5 / n

    def test_regular_closed_form(self):
        ds = DegreeSet.finite([2])
        res = multigraph_count_asymptotic(ds, 10, 10)
        exact = multigraph_weight(ds, 10, 10)
        assert res.feasible
        assert res.log_value == pytest.approx(log_fraction(exact), abs=1e-10)
        assert not multigraph_count_asymptotic(ds, 10, 9).feasible

    def test_simple_below_multigraph(self):
        for ds, n, m in ((DegreeSet.even(), 100, 60),
                         (DegreeSet.min_degree(1), 80, 100),
                         (DegreeSet.finite([1, 3]), 60, 50)):
            mg = multigraph_count_asymptotic(ds, n, m)
            sg = simple_graph_count_asymptotic(ds, n, m)
            assert sg.log_value < mg.log_value

    def test_simple_vs_binomial_small(self):
        # against the unconstrained count C(C(n,2), m)
        n, m = 120, 120
        res = simple_graph_count_asymptotic(DegreeSet.min_degree(0), n, m)
        exact = math.comb(math.comb(n, 2), m)
        assert abs(math.exp(res.log_value - math.log(exact)) - 1) < 0.05

    def test_simple_vs_brute_force_tiny(self):
        ds = DegreeSet.min_degree(1)
        n, m = 6, 6
        res = simple_graph_count_asymptotic(ds, n, m)
        exact = count_simple_graphs(ds, n, m)
        assert abs(math.exp(res.log_value - math.log(exact)) - 1) < 0.5

    def test_regular_simple_matches_pairing_model(self):
        # 2-regular: correction exp(-W - W^2) with W = (d-1)/2
        ds = DegreeSet.finite([2])
        res = simple_graph_count_asymptotic(ds, 12, 12)
        base = multigraph_count_asymptotic(ds, 12, 12)
        assert res.log_value == pytest.approx(base.log_value - 0.75, abs=1e-12)

    def test_mantissa_exponent(self):
        res = multigraph_count_asymptotic(DegreeSet.even(), 100, 50)
        mant, expo = res.mantissa_exponent()
        assert 1.0 <= mant < 10.0
        assert math.log(mant) + expo * math.log(10) == pytest.approx(
            res.log_value, rel=1e-12)

    def test_error_shrinks_with_n(self):
        ds = DegreeSet.even()
        errs = []
        for n in (32, 128):
            m = n // 2
            exact = multigraph_weight(ds, n, m)
            res = multigraph_count_asymptotic(ds, n, m)
            errs.append(abs(math.exp(res.log_value - log_fraction(exact)) - 1))
        assert errs[1] < errs[0]


class TestAcceptanceProbability:
    def test_unconstrained_value(self):
        # loop intensity m/n = 1/2 gives exp(-1/4 - 1/2)
        p = acceptance_probability(DegreeSet.min_degree(0), 100, 50)
        assert p == pytest.approx(math.exp(-0.75), rel=1e-10)

    def test_small_intensity_limit(self):
        p = acceptance_probability(DegreeSet.min_degree(0), 10_000, 50)
        assert p > 0.98

    def test_matches_estimate_ratio(self):
        ds = DegreeSet.even()
        n, m = 500, 300
        mg = multigraph_count_asymptotic(ds, n, m)
        sg = simple_graph_count_asymptotic(ds, n, m)
        assert acceptance_probability(ds, n, m) == pytest.approx(
            math.exp(sg.log_value - mg.log_value), rel=1e-10)

    def test_singleton_rejected(self):
        with pytest.raises(RegularDegreeSetError):
            acceptance_probability(DegreeSet.finite([2]), 10, 10)

import math
from fractions import Fraction

import pytest

from degcount import (INFINITE, DegreeSet, build_table, infeasibility_reason,
                      mixed_power_coefficient, multigraph_weight,
                      power_coefficient)

from conftest import FAMILY, FAMILY_IDS


def reference_table(ds, n_max, j_max):
    """The defining convolution, written independently of the library."""
    rows = [[1] + [0] * j_max]
    for _ in range(n_max):
        prev = rows[-1]
        row = [0] * (j_max + 1)
        for j in range(j_max + 1):
            row[j] = sum(math.comb(j, d) * prev[j - d]
                         for d in ds.members_up_to(j))
        rows.append(row)
    return rows


class TestTable:
    def test_row_zero(self):
        t = build_table(DegreeSet.even(), 3, 6)
        assert t.value(0, 0) == 1
        assert all(t.value(0, j) == 0 for j in range(1, 7))

    @pytest.mark.parametrize("ds", FAMILY, ids=FAMILY_IDS)
    def test_matches_defining_recursion(self, ds):
        t = build_table(ds, 7, 14)
        ref = reference_table(ds, 7, 14)
        for i in range(8):
            assert list(t.row(i)) == ref[i]

    @pytest.mark.parametrize("ds", [DegreeSet.min_degree(3),
                                    DegreeSet.min_degree(5),
                                    DegreeSet.finite([0, 4, 7]),
                                    DegreeSet.finite([3, 6, 9])],
                             ids=str)
    def test_matches_defining_recursion_wider_sets(self, ds):
        t = build_table(ds, 6, 18)
        ref = reference_table(ds, 6, 18)
        for i in range(7):
            assert list(t.row(i)) == ref[i]

    def test_unconstrained_powers(self):
        t = build_table(DegreeSet.min_degree(0), 6, 10)
        for i in range(7):
            for j in range(11):
                assert t.value(i, j) == i ** j

    def test_two_regular(self):
        t = build_table(DegreeSet.finite([2]), 4, 8)
        assert t.value(2, 4) == 6
        for n in range(5):
            for j in range(9):
                expected = math.factorial(j) // 2 ** n if j == 2 * n else 0
                assert t.value(n, j) == expected

    @pytest.mark.parametrize("ds", FAMILY, ids=FAMILY_IDS)
    def test_support_constraints(self, ds):
        t = build_table(ds, 6, 12)
        r = ds.valuation
        mx = ds.max_degree
        p = ds.periodicity
        for i in range(7):
            for j in range(13):
                v = t.value(i, j)
                if j < i * r or (mx is not INFINITE and j > i * mx):
                    assert v == 0
                if v and p is not INFINITE:
                    assert (j - i * r) % p == 0

    @pytest.mark.parametrize("ds", FAMILY, ids=FAMILY_IDS)
    def test_convolution_identity(self, ds):
        # Set^(i+i') = Set^i * Set^i' means the rows convolve binomially
        t = build_table(ds, 8, 12)
        for i in range(5):
            for i2 in range(5):
                for j in range(13):
                    direct = t.value(i + i2, j)
                    conv = sum(math.comb(j, k) * t.value(i, k) * t.value(i2, j - k)
                               for k in range(j + 1))
                    assert direct == conv

    def test_power_coefficient_matches_table(self):
        for ds in FAMILY:
            t = build_table(ds, 6, 9)
            for n in (0, 3, 6):
                for j in (0, 4, 9):
                    assert power_coefficient(ds, n, j) == t.value(n, j)


class TestFeasibility:
    def test_range_violations(self):
        assert infeasibility_reason(DegreeSet.min_degree(2), 4, 1) is not None
        assert infeasibility_reason(DegreeSet.finite([1, 3]), 2, 4) is not None

    def test_periodicity_violation(self):
        # 2m - n*min(D) = 4 - 3 = 1 is not divisible by the periodicity 2
        assert infeasibility_reason(DegreeSet.finite([1, 3]), 3, 2) is not None

    def test_feasible_cases(self):
        assert infeasibility_reason(DegreeSet.even(), 4, 2) is None
        assert infeasibility_reason(DegreeSet.finite([1, 3]), 2, 1) is None

    def test_empty_graph(self):
        assert infeasibility_reason(DegreeSet.even(), 0, 0) is None
        assert infeasibility_reason(DegreeSet.even(), 0, 1) is not None


class TestMultigraphWeight:
    def test_unconstrained_small(self):
        assert multigraph_weight(DegreeSet.min_degree(0), 2, 1) == 2

    def test_regular_closed_form(self):
        assert multigraph_weight(DegreeSet.finite([2]), 3, 3) == Fraction(15, 8)
        assert multigraph_weight(DegreeSet.finite([2]), 3, 2) == 0

    def test_one_three(self):
        assert multigraph_weight(DegreeSet.finite([1, 3]), 2, 1) == 1

    def test_feasibility_zeros(self):
        assert multigraph_weight(DegreeSet.finite([1, 3]), 3, 2) == 0
        assert multigraph_weight(DegreeSet.min_degree(3), 2, 1) == 0

    def test_unconstrained_closed_form_grid(self):
        ds = DegreeSet.min_degree(0)
        for n in range(1, 13):
            for m in range(0, 13):
                expected = Fraction(n ** (2 * m), 2 ** m * math.factorial(m))
                assert multigraph_weight(ds, n, m) == expected

    def test_empty_instances(self):
        for ds in FAMILY:
            assert multigraph_weight(ds, 0, 0) == 1
            assert multigraph_weight(ds, 0, 2) == 0

    def test_accepts_prebuilt_table(self):
        ds = DegreeSet.even()
        t = build_table(ds, 6, 8)
        assert multigraph_weight(ds, 6, 4, table=t) == multigraph_weight(ds, 6, 4)


class TestMixedCoefficient:
    def test_empty_first_factor_reduces(self):
        ds = DegreeSet.finite([2, 3])
        for b in range(4):
            for j in range(7):
                assert (mixed_power_coefficient(ds, 0, b, j)
                        == power_coefficient(ds, b, j))

    def test_even_self_shift(self):
        # even - 2 = even, so the mixed power collapses to a plain power
        ds = DegreeSet.even()
        for a in range(3):
            for b in range(3):
                for j in range(9):
                    assert (mixed_power_coefficient(ds, a, b, j)
                            == power_coefficient(ds, a + b, j))

    def test_min_two_shift_is_exp(self):
        assert mixed_power_coefficient(DegreeSet.min_degree(2), 1, 0, 1) == 1

    def test_degenerate_shift_propagates(self):
        from degcount import DegenerateShiftError
        with pytest.raises(DegenerateShiftError):
            mixed_power_coefficient(DegreeSet.finite([0, 1]), 1, 1, 2)

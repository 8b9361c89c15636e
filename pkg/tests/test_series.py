import pytest

from scpartitions import (
    TruncatedSeries,
    check_identity,
    core_count_table,
    core_product_series,
    count_t_core,
    gauss_product_series,
    partition_count_table,
    sc_core_count_table,
    sc_count_table,
    sc_even_core_product_series,
    sc_sim_core_count_table,
    series_from_counts,
    sim_core_count_table,
    triangular_series,
)


class TestArithmetic:
    def test_construction_pads(self):
        s = TruncatedSeries([1, 2], order=4)
        assert s.coeffs == (1, 2, 0, 0, 0)
        assert s.order == 4

    def test_construction_rejects_overflowing_coeffs(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1, 2, 3], order=1)

    def test_add_mul(self):
        a = TruncatedSeries([1, 1], order=3)       # 1 + q
        b = TruncatedSeries([1, -1], order=3)      # 1 - q
        assert (a + b).coeffs == (2, 0, 0, 0)
        assert (a * b).coeffs == (1, 0, -1, 0)

    def test_mul_truncates(self):
        q = TruncatedSeries.monomial(2, 1)
        assert (q * q * q).coeffs == (0, 0, 0)

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError, match="order mismatch"):
            TruncatedSeries([1], order=2) + TruncatedSeries([1], order=3)
        with pytest.raises(ValueError, match="order mismatch"):
            check_identity(TruncatedSeries([1], 2), TruncatedSeries([1], 3))

    def test_geometric(self):
        s = TruncatedSeries.one(6).times_geometric(2)
        assert s.coeffs == (1, 0, 1, 0, 1, 0, 1)
        # multiplying back by (1 - q^2) recovers 1
        one_minus = TruncatedSeries.one(6) - TruncatedSeries.monomial(6, 2)
        assert s * one_minus == TruncatedSeries.one(6)

    def test_json_round_trip(self):
        s = TruncatedSeries([3, 0, -2], order=5)
        obj = s.to_json_dict()
        assert obj == {"order": 5, "coefficients": [3, 0, -2, 0, 0, 0]}
        assert TruncatedSeries.from_json_dict(obj) == s


class TestTriangular:
    def test_order_six(self):
        assert triangular_series(6).coeffs == (1, 1, 0, 1, 0, 0, 1)

    def test_order_zero(self):
        assert triangular_series(0).coeffs == (1,)

    def test_coefficient_at_ten(self):
        assert triangular_series(10).coefficient(10) == 1


class TestSeriesFromCounts:
    def test_stride_one(self):
        s = series_from_counts(sc_count_table(6), 1, 6)
        assert s.coeffs == (1, 1, 0, 1, 1, 1, 1)

    def test_stride_four(self):
        s = series_from_counts(partition_count_table(2), 4, 8)
        assert s.coeffs == (1, 0, 0, 0, 1, 0, 0, 0, 2)

    def test_insufficient_table_rejected(self):
        with pytest.raises(ValueError, match="needs"):
            series_from_counts(partition_count_table(1), 1, 10)


class TestProductForms:
    def test_core_gf_small(self):
        assert core_product_series(3, 2).coeffs == (1, 1, 2)

    def test_core_gf_matches_enumeration(self):
        for t in (2, 3, 5):
            prod = core_product_series(t, 30)
            table = core_count_table(t, 30)
            assert check_identity(series_from_counts(table, 1, 30), prod).equal

    def test_core_gf_pointwise(self):
        prod = core_product_series(4, 12)
        for n in range(13):
            assert prod.coefficient(n) == count_t_core(n, 4)

    def test_sc_even_core_gf_matches_enumeration(self):
        for t in (1, 2, 3):
            prod = sc_even_core_product_series(t, 30)
            table = sc_core_count_table(2 * t, 30)
            assert check_identity(series_from_counts(table, 1, 30), prod).equal

    def test_sc_two_core_is_staircase_indicator(self):
        assert sc_even_core_product_series(1, 20) == triangular_series(20)

    def test_gauss_up_to_60(self):
        assert gauss_product_series(60) == triangular_series(60)


class TestIdentities:
    def test_sc_counts_factor(self):
        order = 24
        lhs = series_from_counts(sc_count_table(order), 1, order)
        rhs = series_from_counts(
            partition_count_table(order // 4), 4, order
        ) * triangular_series(order)
        assert check_identity(lhs, rhs).equal

    @pytest.mark.parametrize("t", [2, 3])
    def test_sc_core_series_factor(self, t):
        order = 24
        lhs = series_from_counts(sc_core_count_table(2 * t, order), 1, order)
        rhs = series_from_counts(
            core_count_table(t, order // 4), 4, order
        ) * triangular_series(order)
        assert check_identity(lhs, rhs).equal

    @pytest.mark.parametrize("pair", [(2, 3), (3, 4)])
    def test_sc_sim_core_series_factor(self, pair):
        order = 20
        t1, t2 = pair
        lhs = series_from_counts(
            sc_sim_core_count_table((2 * t1, 2 * t2), order), 1, order
        )
        rhs = series_from_counts(
            sim_core_count_table(pair, order // 4), 4, order
        ) * triangular_series(order)
        assert check_identity(lhs, rhs).equal

    def test_perturbed_coefficient_is_caught(self):
        lhs = triangular_series(12)
        coeffs = list(lhs.coeffs)
        coeffs[6] += 1
        outcome = check_identity(lhs, TruncatedSeries(coeffs, 12))
        assert not outcome.equal
        assert outcome.first_mismatch == 6
        assert outcome.lhs_coefficient == 1
        assert outcome.rhs_coefficient == 2

    def test_equal_report(self):
        outcome = check_identity(triangular_series(8), triangular_series(8))
        assert outcome.equal
        assert outcome.first_mismatch is None

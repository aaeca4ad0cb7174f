import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import small_series, unit_series
from hookcounts.series import (
    Series,
    csv_lines,
    divide_unit,
    geometric,
    partition_gf,
    pochhammer_inf,
    t_regular_gf,
)


def S(*coeffs, order=None):
    return Series(coeffs, order)


class TestRingOps:
    def test_add_sub_neg(self):
        one_plus = S(1, 1)
        one_minus = S(1, -1)
        assert (one_plus + one_minus).coeffs == (2, 0)
        assert (one_plus - one_plus).coeffs == (0, 0)
        assert (S(0, 0, 1, 0) - S(0, 0, 0, 1)).coeffs == (0, 0, 1, -1)
        assert (-one_plus).coeffs == (-1, -1)

    def test_mul_truncates(self):
        assert (S(1, 1, order=2) * S(1, -1, order=2)).coeffs == (1, 0, -1)

    def test_mul_identity(self):
        a = S(3, -2, 7, 0, 5)
        assert a * Series.one(4) == a

    def test_scalar_mul(self):
        assert (2 * S(1, -1)).coeffs == (2, -2)

    def test_float_scalars_rejected(self):
        with pytest.raises(TypeError):
            1.5 * S(1, -1)

    def test_inverse_pair_product(self):
        prod = partition_gf(10) * pochhammer_inf(1, 1, 10)
        assert prod == Series.one(10)

    def test_mixed_orders_truncate_to_smaller(self):
        a = Series([1] * 8, 7)
        b = Series([1] * 4, 3)
        assert (a + b).order == 3
        assert (a * b).order == 3

    def test_getitem_bounds(self):
        a = S(1, 2, 3)
        assert a[2] == 3
        with pytest.raises(IndexError):
            a[3]

    def test_shift(self):
        assert S(1, 2, 3).shift(1).coeffs == (0, 1, 2)
        with pytest.raises(ValueError):
            S(1).shift(-1)

    def test_monomial_beyond_order_is_zero(self):
        assert Series.monomial(5, 3) == Series.zero(3)


class TestGeometric:
    def test_examples(self):
        assert geometric(2, 6).coeffs == (1, 0, 1, 0, 1, 0, 1)
        assert geometric(1, 3).coeffs == (1, 1, 1, 1)
        assert geometric(7, 6).coeffs == (1, 0, 0, 0, 0, 0, 0)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            geometric(0, 5)

    @given(small_series(), st.integers(1, 6))
    def test_times_geometric_is_multiplication(self, a, k):
        assert a.times_geometric(k) == a * geometric(k, a.order)


class TestPochhammer:
    def test_pentagonal_prefix(self):
        assert pochhammer_inf(1, 1, 8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0)

    def test_first_factor_beyond_order(self):
        assert pochhammer_inf(3, 3, 2) == Series.one(2)

    def test_even_product(self):
        assert pochhammer_inf(2, 2, 4).coeffs == (1, 0, -1, 0, -1)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            pochhammer_inf(0, 1, 5)
        with pytest.raises(ValueError):
            pochhammer_inf(1, 0, 5)

    def test_pentagonal_number_theorem(self):
        s = pochhammer_inf(1, 1, 200)
        pentagonal = set()
        k = 1
        while k * (3 * k - 1) // 2 <= 200:
            pentagonal.add(k * (3 * k - 1) // 2)
            pentagonal.add(k * (3 * k + 1) // 2)
            k += 1
        pentagonal.add(0)
        for n, c in enumerate(s.coeffs):
            assert c in (-1, 0, 1)
            assert (c != 0) == (n in pentagonal)


class TestDivision:
    def test_partition_numbers(self):
        gf = partition_gf(10)
        assert gf.coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)

    def test_known_value_p100(self):
        assert partition_gf(100)[100] == 190569292

    def test_self_division(self):
        a = pochhammer_inf(1, 1, 12)
        assert divide_unit(a, a) == Series.one(12)

    def test_rejects_non_unit_divisor(self):
        with pytest.raises(ValueError):
            divide_unit(Series.one(4), S(0, 1, order=4))
        with pytest.raises(ValueError):
            divide_unit(Series.one(4), S(2, 1, order=4))

    @given(small_series(), unit_series())
    def test_division_inverts_multiplication(self, a, b):
        assert divide_unit(a * b, b) == a

    def test_big_coefficients_vs_dp_oracle(self):
        # independent oracle: classic coin-style DP over part sizes
        n = 500
        dp = [1] + [0] * n
        for part in range(1, n + 1):
            for s in range(part, n + 1):
                dp[s] += dp[s - part]
        gf = partition_gf(n)
        assert list(gf.coeffs) == dp
        assert gf[n] > 2**64


class TestTRegularSeries:
    def test_distinct_counts(self):
        assert t_regular_gf(2, 9).coeffs == (1, 1, 1, 2, 2, 3, 4, 5, 6, 8)

    def test_small_values(self):
        assert t_regular_gf(3, 3)[3] == 2
        assert t_regular_gf(5, 8)[0] == 1

    def test_rejects_t_below_two(self):
        with pytest.raises(ValueError):
            t_regular_gf(1, 5)


class TestCsv:
    def test_exact_rows(self):
        lines = list(csv_lines(S(1, 0, -2)))
        assert lines == ["n,coefficient", "0,1", "1,0", "2,-2"]

    def test_big_integers_stay_decimal(self):
        row = list(csv_lines(partition_gf(500)))[-1]
        assert row == f"500,{partition_gf(500)[500]}"
        assert "e" not in row and "." not in row

import pytest

from qcong.etaq import (
    BiregularSpec,
    EtaQuotient,
    biregular_gf,
    expand_monomial,
    materialize_eta,
    overpartition_gf,
    pochhammer,
    pochhammer_product,
    regular_overpartition_gf,
)
from qcong.series import ZZ, mod_ring


class TestPochhammer:
    def test_f1_low_order(self):
        # prod (1 - q^n) = 1 - q - q^2 + q^5 + q^7 - ...
        assert pochhammer(1, 7, ZZ).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)

    def test_f2_low_order(self):
        assert pochhammer(2, 3, ZZ).coeffs == (1, 0, -1, 0)

    def test_order_zero(self):
        assert pochhammer(1, 0, ZZ).coeffs == (1,)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_pentagonal_equals_finite_product(self, m):
        fast = pochhammer(m, 200, ZZ)
        slow = pochhammer(m, 200, ZZ, method="product")
        assert fast.coeffs == slow.coeffs

    def test_dilation_of_f1_is_f2(self):
        f1 = pochhammer(1, 100, ZZ)
        f2 = pochhammer(2, 200, ZZ, method="product")
        assert f1.dilate(2, cap=200).coeffs == f2.coeffs

    def test_f1f3_product_values(self):
        prod = pochhammer(1, 8, ZZ) * pochhammer(3, 8, ZZ)
        assert prod.coeffs[:6] == (1, -1, -1, -1, 1, 2)
        assert prod[8] == 0


class TestExpandMonomial:
    def test_constant(self):
        assert expand_monomial(1, 0, {}, 4, ZZ).coeffs == (1, 0, 0, 0, 0)

    def test_shift_beyond_order_warns_zero(self):
        with pytest.warns(UserWarning):
            s = expand_monomial(1, 9, {1: 1}, 4, ZZ)
        assert s.is_zero() and s.order == 4

    def test_inverse_square(self):
        # 1/f(1)^2 counts partitions into parts of two colours
        s = expand_monomial(1, 0, {1: -2}, 7, ZZ)
        assert s.coeffs == (1, 2, 5, 10, 20, 36, 65, 110)


class TestBiregularSpec:
    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            BiregularSpec(2, 4)

    def test_rejects_unit(self):
        with pytest.raises(ValueError):
            BiregularSpec(1, 3)

    def test_allows_part(self):
        spec = BiregularSpec(2, 9)
        assert [p for p in range(1, 12) if spec.allows_part(p)] == [1, 3, 5, 7, 11]


class TestGeneratingFunctions:
    def test_overpartitions_prefix(self):
        s = overpartition_gf(4, ZZ)
        assert s.coeffs == (1, 2, 4, 8, 14)  # fourteen overpartitions of 4

    def test_regular_overpartitions_ell2(self):
        s = regular_overpartition_gf(2, 3, ZZ)
        assert s.coeffs == (1, 2, 2, 4)

    def test_biregular_2_9_prefix(self):
        s = biregular_gf(BiregularSpec(2, 9), 5, ZZ)
        assert s.coeffs == (1, 2, 2, 4, 6, 8)

    def test_biregular_5_2_value(self):
        s = biregular_gf(BiregularSpec(5, 2), 3, ZZ)
        assert s[0] == 1 and s[3] == 4

    @pytest.mark.parametrize(
        "pair", [(2, 9), (5, 2), (5, 4), (8, 3), (4, 9), (3, 4), (5, 8)]
    )
    def test_coefficients_non_negative(self, pair):
        s = biregular_gf(BiregularSpec(*pair), 40, ZZ)
        assert all(c >= 0 for c in s.coeffs)

    def test_mod_ring_matches_exact_reduction(self):
        spec = BiregularSpec(2, 9)
        exact = biregular_gf(spec, 60, ZZ)
        mod = biregular_gf(spec, 60, mod_ring(8))
        assert exact.reduce_mod(8).coeffs == mod.coeffs


class TestMaterializeEta:
    def test_eta6_pow4(self):
        series, e = materialize_eta(EtaQuotient.of({6: 4}), 14, ZZ)
        assert e == 1
        assert series[1] == 1 and series[7] == -4 and series[13] == 2

    def test_eta4_eta20(self):
        series, e = materialize_eta(EtaQuotient.of({4: 1, 20: 1}), 25, ZZ)
        assert e == 1
        got = {n: c for n, c in enumerate(series.coeffs) if c}
        assert got[1] == 1 and got[5] == -1 and got[9] == -1 and got[25] == 1

    def test_fractional_power_rejected(self):
        with pytest.raises(ValueError, match="1"):
            materialize_eta(EtaQuotient.of({1: 1}), 10, ZZ)

    def test_support_of_eta6_pow4(self):
        series, _ = materialize_eta(EtaQuotient.of({6: 4}), 500, ZZ)
        for n, c in enumerate(series.coeffs):
            if n % 6 != 1:
                assert c == 0

    def test_level_divisibility_enforced(self):
        with pytest.raises(ValueError):
            EtaQuotient.of({5: 1}, level=36)


def test_pochhammer_product_handles_mixed_signs():
    # f(2)/f(1)^2 assembled from the shared helper
    direct = pochhammer_product({2: 1, 1: -2}, 10, ZZ)
    manual = pochhammer(2, 10, ZZ) * pochhammer(1, 10, ZZ).invert() ** 2
    assert direct.coeffs == manual.coeffs

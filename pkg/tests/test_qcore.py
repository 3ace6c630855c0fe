"""Core series arithmetic: ring laws, Pochhammer inverses, binomial families."""

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qlab.qcore import (
    QSeries, QZChar, compare, exact_div, poch, poch_inv,
    q_binomial, q_trinomial, supernomial2,
)

F = Fraction


def partitions(n_max: int) -> list[int]:
    """p(0..n_max) by the pentagonal-number recurrence (independent of poch_inv)."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def restricted_partitions(m: int, n_max: int) -> list[int]:
    # parts of size <= m, by the classical two-way recurrence
    table = [[0] * (n_max + 1) for _ in range(m + 1)]
    for k in range(m + 1):
        table[k][0] = 1
    for k in range(1, m + 1):
        for n in range(1, n_max + 1):
            table[k][n] = table[k - 1][n] + (table[k][n - k] if n >= k else 0)
    return table[m]


# -- strategies ---------------------------------------------------------------

exps = st.builds(F, st.integers(-6, 6), st.integers(1, 3))
term_dicts = st.dictionaries(exps, st.integers(-9, 9), max_size=6)


@st.composite
def exact_series(draw):
    return QSeries(draw(term_dicts), None)


@st.composite
def any_series(draw):
    terms = draw(term_dicts)
    cut = draw(st.one_of(st.none(), st.builds(F, st.integers(-4, 10), st.just(1))))
    return QSeries(terms, cut)


class TestRingLaws:
    @given(a=any_series(), b=any_series())
    def test_add_commutes(self, a, b):
        assert a + b == b + a

    @given(a=any_series(), b=any_series(), c=any_series())
    def test_add_associates(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(a=exact_series(), b=exact_series())
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(a=exact_series(), b=exact_series(), c=exact_series())
    @settings(max_examples=50)
    def test_mul_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(a=any_series())
    def test_neutral_elements(self, a):
        assert a + QSeries.zero(None) == a
        assert a * QSeries.one(None) == a

    @given(a=exact_series(), b=exact_series(), cut=st.integers(-2, 8))
    @settings(max_examples=60)
    def test_truncation_is_sound(self, a, b, cut):
        # multiplying truncations must agree with the full product wherever
        # the propagated cutoff claims validity
        full = a * b
        trunc = a.truncate(F(cut)) * b.truncate(F(cut))
        cmp = compare(full, trunc)
        assert cmp.ok, cmp

    @given(a=any_series())
    def test_immutable(self, a):
        with pytest.raises(AttributeError):
            a.cutoff = None


class TestJson:
    @given(a=any_series())
    def test_round_trip(self, a):
        assert QSeries.from_json_obj(a.to_json_obj()) == a
        assert QSeries.loads(a.dumps()) == a

    def test_shape_is_plain_data(self):
        s = QSeries({F(1, 2): 3, F(-1): 2}, F(5))
        obj = json.loads(s.dumps())
        assert obj["cutoff"] == {"num": 5, "den": 1}
        assert {"num": 1, "den": 2, "coeff": "3"} in obj["terms"]


class TestCompare:
    def test_mismatch_is_located(self):
        a = QSeries({0: 1, 2: 5}, F(10))
        b = QSeries({0: 1, 2: 7}, F(10))
        cmp = compare(a, b)
        assert not cmp.ok and cmp.first_mismatch == F(2)

    def test_agreement_below_min_cutoff(self):
        a = QSeries({0: 1, 7: 9}, F(8))
        b = QSeries({0: 1}, F(5))
        assert compare(a, b).ok
        assert compare(a, b).verified_below == F(5)


class TestPochhammer:
    def test_inverse_matches_partition_recurrence(self):
        series = poch_inv(None, F(41))
        expect = partitions(40)
        for n in range(41):
            assert series.coeff(F(n)) == expect[n], n

    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    def test_bounded_parts(self, m):
        series = poch_inv(m, F(26))
        expect = restricted_partitions(m, 25)
        for n in range(26):
            assert series.coeff(F(n)) == expect[n], (m, n)

    @pytest.mark.parametrize("m", [0, 1, 4])
    def test_product_with_poch_is_one(self, m):
        prod = poch(m) * poch_inv(m, F(20))
        assert compare(prod, QSeries.one(F(20))).ok

    def test_exact_div_rejects_remainder(self):
        with pytest.raises(ArithmeticError):
            exact_div(QSeries({0: 1, 1: 1}, None), QSeries({0: 1, 1: 1, 2: 1}, None))

    def test_exact_div_poch_quotient(self):
        got = exact_div(poch(4), poch(2))
        want = QSeries({0: 1, 3: -1}, None) * QSeries({0: 1, 4: -1}, None)
        assert got == want


class TestQBinomial:
    def test_hand_values(self):
        assert list(q_binomial(4, 2).items()) == [
            (F(0), 1), (F(1), 1), (F(2), 2), (F(3), 1), (F(4), 1)]
        # negative first argument gives Laurent polynomials
        assert list(q_binomial(-1, 2).items()) == [(F(-3), 1)]
        assert list(q_binomial(-2, 1).items()) == [(F(-2), -1), (F(-1), -1)]

    def test_degenerate_cases(self):
        assert q_binomial(3, 5).is_zero()
        assert q_binomial(0, 2).is_zero()
        assert q_binomial(5, -1).is_zero()
        assert q_binomial(0, 0) == QSeries.one(None)

    @given(L=st.integers(-4, 8), a=st.integers(0, 5))
    @settings(max_examples=80)
    def test_pascal_recurrence(self, L, a):
        if a == 0:
            return
        lhs = q_binomial(L, a)
        rhs = q_binomial(L - 1, a) + q_binomial(L - 1, a - 1).shift(L - a)
        assert lhs == rhs, (L, a)

    @given(L=st.integers(0, 10), a=st.integers(0, 10))
    def test_counts_at_q_one(self, L, a):
        assert q_binomial(L, a).coeff_sum() == math.comb(L, a)


class TestQTrinomial:
    def test_hand_value(self):
        assert list(q_trinomial(2, 1, 1, 0).items()) == [(F(0), 1), (F(1), 1)]

    def test_rejects_bad_composition(self):
        with pytest.raises(ValueError):
            q_trinomial(3, 1, 1, 0)

    @given(a=st.integers(0, 4), b=st.integers(0, 4), c=st.integers(0, 4))
    @settings(max_examples=60)
    def test_pascal_recurrence(self, a, b, c):
        n = a + b + c
        if n == 0:
            return
        lhs = q_trinomial(n, a, b, c)
        rhs = (q_trinomial(n - 1, a - 1, b, c)
               + q_trinomial(n - 1, a, b - 1, c).shift(a)
               + q_trinomial(n - 1, a, b, c - 1).shift(a + b))
        assert lhs == rhs, (a, b, c)

    @given(a=st.integers(0, 5), b=st.integers(0, 5), c=st.integers(0, 5))
    def test_counts_at_q_one(self, a, b, c):
        n = a + b + c
        want = math.factorial(n) // (
            math.factorial(a) * math.factorial(b) * math.factorial(c))
        assert q_trinomial(n, a, b, c).coeff_sum() == want


class TestSupernomial2:
    def test_hand_values(self):
        assert list(supernomial2(2, 1, 0).items()) == [(F(0), 1), (F(1), 1), (F(2), 2)]
        assert list(supernomial2(0, 2, 0).items()) == [(F(0), 1), (F(1), 1), (F(2), 1)]
        assert supernomial2(0, 0, 0) == QSeries.one(None)

    def test_base_row(self):
        for L1 in (0, 2, 4, 6):
            for a in range(-L1 // 2, L1 // 2 + 1):
                assert supernomial2(L1, 0, a) == q_binomial(L1, L1 // 2 + a)

    def test_step_recurrence(self):
        # raising the first row by two inserts one q-power shifted copy
        for L1 in (2, 4, 6):
            for L2 in range(0, 4):
                for a in range(-(L1 // 2 + L2), L1 // 2 + L2 + 1):
                    lhs = supernomial2(L1, L2, a)
                    rhs = (supernomial2(L1 - 2, L2, a).shift(L1 + L2 - 1)
                           + supernomial2(L1 - 2, L2 + 1, a))
                    assert lhs == rhs, (L1, L2, a)

    def test_symmetry_in_a(self):
        for m in range(9):
            for a in range(0, m + 1):
                assert supernomial2(0, m, a) == supernomial2(0, m, -a), (m, a)

    def test_total_dimension(self):
        for L1 in (0, 2, 4):
            for L2 in range(0, 4):
                n = L1 // 2 + L2
                total = sum(supernomial2(L1, L2, a).coeff_sum()
                            for a in range(-n, n + 1))
                assert total == 2 ** L1 * 3 ** L2, (L1, L2)

    def test_half_odd_weight_vanishes(self):
        assert supernomial2(2, 1, F(1, 2)).is_zero()


class TestQZChar:
    def test_convolve_multiplies_dimension(self):
        x = QZChar({1: QSeries.one(None), -1: QSeries.one(None)})
        y = x.convolve(x)
        assert y.dimension() == 4
        assert y.component(0).coeff_sum() == 2

    def test_json_round_trip(self):
        x = QZChar({0: QSeries({F(1, 2): 3}, F(4)), 2: QSeries.one(None)})
        assert QZChar.from_json_obj(x.to_json_obj()) == x

    def test_flip_q(self):
        x = QZChar({1: QSeries({2: 5}, None)})
        assert x.flip_q().component(1).coeff(F(-2)) == 5

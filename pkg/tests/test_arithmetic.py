import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

import zetacorr as z


def trial_factor_lambda(n: int) -> float:
    """Independent Lambda(n) by trial factorization."""
    if n < 2:
        return 0.0
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return math.log(p) if n == 1 else 0.0
    return 0.0


class TestMangoldtSieve:
    def test_rejects_zero_limit(self):
        with pytest.raises(ValueError):
            z.sieve_mangoldt(0)

    def test_prime_power_values(self, mangoldt_small):
        assert mangoldt_small.lambda_value(8) == math.log(2)
        assert mangoldt_small.lambda_value(7) == math.log(7)
        assert mangoldt_small.lambda_value(12) == 0.0
        assert mangoldt_small.lambda_value(1) == 0.0

    def test_matches_trial_factorization(self, mangoldt_small):
        for n in range(1, 10_001):
            assert mangoldt_small.lambda_value(n) == trial_factor_lambda(n), n

    def test_nonzero_iff_prime_power(self, mangoldt_small):
        for n in range(2, 10_001):
            is_pp = trial_factor_lambda(n) != 0.0
            assert (mangoldt_small.base_prime[n] != 0) == is_pp

    def test_chebyshev_identity(self, mangoldt_small):
        # sum of Lambda over divisors of n recovers log n
        for n in range(2, 1001):
            acc = math.fsum(
                mangoldt_small.lambda_value(d) for d in z.arithmetic.divisors(n)
            )
            assert acc == pytest.approx(math.log(n), rel=1e-12)

    def test_compressed_view_consistent(self, mangoldt_small):
        pp = mangoldt_small.prime_powers
        assert (np.diff(pp) > 0).all()
        recon = mangoldt_small.base_prime[pp].astype(float)
        assert np.allclose(np.log(recon), mangoldt_small.base_log)
        n_back = recon ** mangoldt_small.power_index
        assert np.array_equal(n_back.astype(np.int64), pp)

    def test_psi_at(self, mangoldt_small):
        expected = math.fsum(mangoldt_small.lambda_value(n) for n in range(1, 101))
        assert mangoldt_small.psi_at(100) == pytest.approx(expected, rel=1e-14)
        assert mangoldt_small.psi_at(1.5) == 0.0


class TestMobius:
    def test_rejects_zero_limit(self):
        with pytest.raises(ValueError):
            z.sieve_mobius(0)

    def test_small_values(self, mobius_table):
        assert mobius_table.mu(1) == 1
        assert mobius_table.mu(2) == -1
        assert mobius_table.mu(4) == 0
        assert mobius_table.mu(6) == 1
        assert mobius_table.mu(30) == -1

    def test_squarefull_vanish(self, mobius_table):
        for n in range(1, 101):
            vanish = any(n % (p * p) == 0 for p in range(2, int(n**0.5) + 1))
            assert (mobius_table.mu(n) == 0) == vanish

    def test_multiplicative_on_coprime_pairs(self, mobius_table):
        pairs = [(4, 9), (3, 8), (5, 6), (7, 10), (9, 10), (11, 12)]
        for a, b in pairs:
            assert math.gcd(a, b) == 1
            assert mobius_table.mu(a * b) == mobius_table.mu(a) * mobius_table.mu(b)


class TestBCoefficient:
    def test_unit_argument(self, mobius_table):
        for m in range(2, 7):
            assert z.b_coefficient(1, m, mobius_table) == 1

    def test_hand_value(self, mobius_table):
        # divisor sum over {1, 2}: 1 - 2^2
        assert z.b_coefficient(2, 3, mobius_table) == -3
        # over {1, 2, 3, 6}: 1 - 4 - 9 + 36
        assert z.b_coefficient(6, 3, mobius_table) == 24

    def test_out_of_range(self, mobius_table):
        with pytest.raises(ValueError):
            z.b_coefficient(mobius_table.limit + 1, 3, mobius_table)

    def test_magnitude_bound(self, mobius_table):
        for k in range(1, 200):
            for m in (2, 3, 4):
                assert abs(z.b_coefficient(k, m, mobius_table)) <= k ** (m - 1)


class TestNearestInt:
    def test_half_rounds_up(self):
        assert z.nearest_int(2.5) == 3
        assert z.nearest_int(-2.5) == -2
        assert z.nearest_int(0.5) == 1
        assert z.nearest_int(-0.5) == 0

    def test_plain_cases(self):
        assert z.nearest_int(2.49) == 2
        assert z.nearest_int(2.51) == 3
        assert z.nearest_int(-7.2) == -7

    def test_rejects_non_finite(self):
        for bad in (math.inf, -math.inf, math.nan):
            with pytest.raises(ValueError):
                z.nearest_int(bad)

    @given(st.floats(min_value=-1e9, max_value=1e9))
    def test_shift_by_one(self, x):
        # only meaningful when x + 1 incurs no float rounding
        assume(Fraction(x) + 1 == Fraction(x + 1.0))
        assert z.nearest_int(x + 1.0) == z.nearest_int(x) + 1

    @given(st.integers(min_value=-10**12, max_value=10**12))
    def test_fixed_on_integers(self, n):
        assert z.nearest_int(float(n)) == n

    @given(st.floats(min_value=-1e6, max_value=1e6))
    def test_distance_at_most_half(self, x):
        n = z.nearest_int(x)
        assert abs(x - n) <= 0.5

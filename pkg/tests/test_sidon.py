import pytest
import sympy

from urbasis.errors import BuildInfeasible, InputError, InvariantViolation
from urbasis.intset import IntSet, is_sidon
from urbasis.sidon import (
    Method,
    bose_chowla,
    erdos_turan,
    mian_chowla,
    prime_field_ext,
    sidon_in_interval,
)


class TestPrimeFieldExt:
    def test_modulus_irreducible(self):
        for q in (2, 3, 5, 7, 11):
            ext = prime_field_ext(q)
            b, c = ext.modulus
            assert all((x * x + b * x + c) % q != 0 for x in range(q))

    def test_generator_has_full_order(self):
        for q in (2, 3, 5, 7, 13):
            ext = prime_field_ext(q)
            assert ext.element_order(ext.generator) == q * q - 1

    def test_deterministic(self):
        assert prime_field_ext(11) == prime_field_ext(11)

    def test_mul_is_field_multiplication(self):
        ext = prime_field_ext(7)
        one = (0, 1)
        g = ext.generator
        assert ext.mul(g, one) == g
        # associativity spot check
        a, b, c = (1, 2), (3, 4), (5, 6)
        assert ext.mul(ext.mul(a, b), c) == ext.mul(a, ext.mul(b, c))

    def test_rejects_composite(self):
        with pytest.raises(InputError):
            prime_field_ext(9)


class TestBoseChowla:
    def test_small_primes(self):
        for q in (2, 3, 5, 7, 11, 13):
            result = bose_chowla(q)
            assert result.cardinality == q
            assert len(result.set) == q
            assert result.set.min() >= 1
            assert result.set.max() <= q * q - 1
            assert is_sidon(result.set).ok
            assert result.method is Method.BOSE_CHOWLA

    def test_q5_density_gap_zero(self):
        assert bose_chowla(5).density_gap == 0.0

    def test_q101(self):
        result = bose_chowla(101)
        assert result.cardinality == 101
        assert is_sidon(result.set).ok

    def test_rejects_composite(self):
        with pytest.raises(InputError):
            bose_chowla(100)

    def test_deterministic(self):
        assert bose_chowla(31).set == bose_chowla(31).set


class TestErdosTuran:
    def test_hand_values(self):
        assert erdos_turan(2).set.elements == (0, 5)
        assert erdos_turan(3).set.elements == (0, 7, 13)
        assert erdos_turan(5).set.elements == (0, 11, 24, 34, 41)

    def test_bounds_and_sidon(self):
        for p in (2, 3, 5, 7, 11, 13, 17):
            result = erdos_turan(p)
            assert result.cardinality == p
            assert result.set.max() < 2 * p * p
            assert is_sidon(result.set).ok

    def test_rejects_composite(self):
        with pytest.raises(InputError):
            erdos_turan(15)


class TestMianChowla:
    def test_prefix(self):
        assert mian_chowla(8).set.elements == (1, 2, 4, 8, 13, 21, 31, 45)

    def test_empty_and_singleton(self):
        assert mian_chowla(0).set.elements == ()
        assert mian_chowla(1).set.elements == (1,)

    def test_greedy_monotone(self):
        shorter = mian_chowla(9).set.elements
        longer = mian_chowla(10).set.elements
        assert longer[: len(shorter)] == shorter

    def test_rejects_negative(self):
        with pytest.raises(InputError):
            mian_chowla(-1)


class TestSidonInInterval:
    def test_picks_largest_prime_below_sqrt(self):
        # q is the largest prime with q^2 - 1 < n (large n: no fallback)
        assert sidon_in_interval(10**4).param == 97
        assert sidon_in_interval(10**6).param == 997

    def test_greedy_fallback_on_small_intervals(self):
        # prime gaps bite at small n: greedy {1,2,4,8,13,21} beats q = 5
        result = sidon_in_interval(26)
        assert result.method is Method.MIAN_CHOWLA
        assert result.cardinality == 6
        assert sidon_in_interval(100).cardinality == 11

    def test_elements_inside_interval(self):
        result = sidon_in_interval(1000)
        assert 0 <= result.set.min() and result.set.max() < 1000
        assert is_sidon(result.set).ok

    def test_density_targets(self):
        assert sidon_in_interval(26, 0.9).cardinality == 6
        assert sidon_in_interval(10**4, 0.9).cardinality == 97

    def test_tiny_interval_boundary(self):
        # n = 4 admits q = 2, cardinality 2 = 0.99 * sqrt(4) + 0.02: passes
        assert sidon_in_interval(4, 0.99).cardinality == 2

    def test_rejects_small_n(self):
        with pytest.raises(InputError):
            sidon_in_interval(1)

    def test_prime_cap(self):
        with pytest.raises(BuildInfeasible) as exc:
            sidon_in_interval(10**6, max_prime=500)
        assert exc.value.required_prime == 997

    def test_density_realization(self):
        for n in (10**2, 10**3, 10**4):
            result = sidon_in_interval(n)
            # cardinality >= 0.85 sqrt(n), exactly: 400 card^2 >= 289 n
            assert 400 * result.cardinality**2 >= 289 * n

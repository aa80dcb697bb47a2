"""Exact field arithmetic, number-theoretic primitives, and Gauss sums."""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

import pytest

from mubsupport.cyclotomic import (
    Cyclotomic,
    QuadraticGaussElement,
    gauss_sum,
    is_prime,
    jacobi_symbol,
    mod_inverse,
)
from mubsupport.errors import DimensionMismatchError

PRIMES = [2, 3, 5, 7, 11, 13]
ODD_PRIMES = [3, 5, 7, 11, 13]


def w(order, e):
    return Cyclotomic.root_power(order, e)


def random_element(rng, order, span=4):
    from mubsupport.cyclotomic import degree

    return Cyclotomic(
        order,
        [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(degree(order))],
    )


class TestPrimitives:
    def test_is_prime_small(self):
        assert [n for n in range(2, 24) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23]

    @pytest.mark.parametrize("a,d,expected", [(4, 3, 1), (4, 5, 4), (7, 11, 8)])
    def test_mod_inverse(self, a, d, expected):
        assert mod_inverse(a, d) == expected
        assert (a * mod_inverse(a, d)) % d == 1

    def test_mod_inverse_solves_4x_congruence(self):
        # 4*(j-k)*chi = 1 mod d with j-k=1, d=5 gives chi=4.
        chi = mod_inverse(4 * 1, 5)
        assert chi == 4
        assert (4 * 1 * chi) % 5 == 1

    def test_mod_inverse_rejects_zero_class(self):
        with pytest.raises(ValueError):
            mod_inverse(10, 5)

    def test_jacobi_matches_square_enumeration(self):
        for d in ODD_PRIMES:
            squares = {(x * x) % d for x in range(1, d)}
            for a in range(1, d):
                expected = 1 if a in squares else -1
                assert jacobi_symbol(a, d) == expected
        assert jacobi_symbol(1, 5) == 1
        assert jacobi_symbol(2, 5) == -1
        assert jacobi_symbol(2, 7) == 1
        assert jacobi_symbol(10, 5) == 0

    def test_jacobi_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            jacobi_symbol(3, 10)
        with pytest.raises(ValueError):
            jacobi_symbol(3, -7)


class TestCyclotomicArithmetic:
    def test_sum_of_nontrivial_cube_roots(self):
        assert w(3, 1) + w(3, 2) == Cyclotomic(3, [-1, 0])

    def test_conjugate_reduces_via_minimal_polynomial(self):
        # conj(w) = w^4 = -1 - w - w^2 - w^3 for d = 5.
        assert w(5, 1).conjugate() == Cyclotomic(5, [-1, -1, -1, -1])

    def test_root_product_wraps(self):
        assert w(3, 1) * w(3, 2) == Cyclotomic.one(3)

    def test_inverse_of_root(self):
        assert w(3, 1).inverse() == w(3, 2)

    def test_inverse_defining_property(self):
        a = Cyclotomic.one(5) + w(5, 1)
        assert a.inverse() * a == Cyclotomic.one(5)

    def test_inverse_of_rational_scalar(self):
        assert Cyclotomic.rational(7, 2).inverse() == Cyclotomic.rational(7, Fraction(1, 2))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Cyclotomic.zero(5).inverse()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            w(3, 1) + w(5, 1)

    def test_order_two_degenerates_to_rationals(self):
        minus_one = w(2, 1)
        assert minus_one == Cyclotomic.rational(2, -1)
        assert minus_one * minus_one == Cyclotomic.one(2)

    def test_order_four_is_gaussian(self):
        i = w(4, 1)
        assert i * i == Cyclotomic.rational(4, -1)
        assert i.conjugate() == w(4, 3)

    @pytest.mark.parametrize("order", [2, 3, 4, 5, 7, 11, 13])
    def test_field_axioms_on_random_triples(self, order):
        rng = random.Random(order * 101)
        for _ in range(25):
            a, b, c = (random_element(rng, order) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a * b == b * a
            if not a.is_zero:
                assert a * a.inverse() == Cyclotomic.one(order)

    @pytest.mark.parametrize("order", [3, 4, 5, 7, 11])
    def test_canonical_form_and_conjugation(self, order):
        rng = random.Random(order)
        for _ in range(25):
            a = random_element(rng, order)
            assert (a - a).is_zero
            assert a.conjugate().conjugate() == a
            sq = a * a.conjugate()
            assert sq.conjugate() == sq  # fixed by conjugation: real

    def test_power_basis_round_trip_strings(self):
        a = Cyclotomic(5, [Fraction(1, 2), -2, 0, Fraction(7, 3)])
        assert Cyclotomic.from_strings(5, a.to_strings()) == a

    def test_complex_embedding_agrees(self):
        a = w(7, 3) + Cyclotomic.rational(7, 2)
        expected = cmath.exp(2j * cmath.pi * 3 / 7) + 2
        assert abs(complex(a) - expected) < 1e-12


class TestGaussSums:
    def test_small_sums_against_direct_float(self):
        for d in ODD_PRIMES:
            for a in range(1, d):
                for shift in range(d):
                    exact = complex(gauss_sum(d, a, shift))
                    direct = sum(
                        cmath.exp(2j * cmath.pi * ((a * x * x + shift * x) % d) / d)
                        for x in range(d)
                    )
                    assert abs(exact - direct) < 1e-9

    @pytest.mark.parametrize("d", ODD_PRIMES)
    def test_closed_form_identity(self, d):
        # gauss_sum(d,a,l) = w^(-l^2 chi_a) * (a/d) * g with 4 a chi_a = 1 mod d.
        g = gauss_sum(d, 1, 0)
        for a in range(1, d):
            chi = mod_inverse(4 * a, d)
            for shift in range(d):
                expected = (
                    Cyclotomic.root_power(d, (-shift * shift * chi) % d)
                    * jacobi_symbol(a, d)
                    * g
                )
                assert gauss_sum(d, a, shift) == expected

    @pytest.mark.parametrize("d", ODD_PRIMES)
    def test_square_of_quadratic_sum(self, d):
        g = QuadraticGaussElement.for_dimension(d)
        expected = d if d % 4 == 1 else -d
        assert g.squared_expected() == expected
        assert g.value * g.value == Cyclotomic.rational(d, expected)

    def test_specific_squares(self):
        assert gauss_sum(5, 1, 0) * gauss_sum(5, 1, 0) == Cyclotomic.rational(5, 5)
        assert gauss_sum(7, 1, 0) * gauss_sum(7, 1, 0) == Cyclotomic.rational(7, -7)

    @pytest.mark.parametrize("d", ODD_PRIMES)
    def test_scale_bridge_to_sqrt(self, d):
        # One-off numeric check that g equals eps_d * sqrt(d) in C.
        eps = 1 if d % 4 == 1 else 1j
        assert abs(complex(gauss_sum(d, 1, 0)) - eps * math.sqrt(d)) < 1e-9

    def test_degenerate_sum_rejected(self):
        with pytest.raises(ValueError):
            gauss_sum(5, 5, 1)
        with pytest.raises(ValueError):
            gauss_sum(2, 1, 0)

from fractions import Fraction

import pytest

from ginv.errors import InputError
from ginv.fields import (PrimeField, Rationals, is_prime, parse_scalar,
                         scalar_to_json)


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 97, 2 ** 31 - 1]
    composites = [0, 1, 4, 6, 9, 15, 91, 2 ** 20]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)


def test_prime_field_rejects_composite_and_huge():
    with pytest.raises(InputError):
        PrimeField(4)
    with pytest.raises(InputError):
        PrimeField(2 ** 31 + 11)


def test_prime_field_arithmetic_canonical():
    f = PrimeField(5)
    assert f.normalize(7) == 2
    assert f.normalize(-1) == 4
    assert f.inv(2) == 3            # 2*3 = 6 = 1 mod 5
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_rationals_reduced_and_positive_denominator():
    f = Rationals()
    v = parse_scalar(f, "-4/6", "x")
    assert v == Fraction(-2, 3)
    assert v.denominator == 3
    assert f.inv(Fraction(-2, 3)) == Fraction(-3, 2)


def test_parse_scalar_errors():
    q = Rationals()
    with pytest.raises(InputError):
        parse_scalar(q, "1/0", "a[0][0]")
    with pytest.raises(InputError):
        parse_scalar(q, "1.5", "a[0][0]")
    with pytest.raises(InputError):
        parse_scalar(q, 3, "a[0][0]")          # ints not allowed over Q
    g = PrimeField(5)
    with pytest.raises(InputError):
        parse_scalar(g, "3", "a[0][0]")        # strings not allowed over GF
    assert parse_scalar(g, 12, "a[0][0]") == 2


def test_scalar_serialization_canonical():
    q = Rationals()
    assert scalar_to_json(q, Fraction(3)) == "3"
    assert scalar_to_json(q, Fraction(-1, 2)) == "-1/2"
    assert scalar_to_json(PrimeField(5), 4) == 4


def test_field_equality():
    assert PrimeField(5) == PrimeField(5)
    assert PrimeField(5) != PrimeField(7)
    assert Rationals() == Rationals()
    assert Rationals() != PrimeField(2)

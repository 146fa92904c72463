"""Field arithmetic in Q(v): axioms, division, and string forms."""

import random
from fractions import Fraction

import pytest

from qvertex.scalars import (
    DenominatorVanishes, is_zero, one, qq, rat, scalar_str,
    substitute_power, vpow, zero, LevelPoly,
)


def random_scalar(rng, depth=4):
    acc = zero
    for _ in range(depth):
        acc = acc + rat(rng.randint(-5, 5)) * vpow(rng.randint(-6, 6))
    return acc


def cyclotomic_divisor(rng):
    """A nonzero product of (1 - qq^k) factors times a monomial."""
    acc = vpow(rng.randint(-3, 3)) * rat(rng.choice([1, 2, 3, -1]))
    for _ in range(rng.randint(0, 2)):
        k = rng.choice([1, 2, 3, 4, 5])
        acc = acc * (one - qq ** k)
    return acc


def test_field_axioms_fuzz():
    rng = random.Random(20260826)
    for _ in range(60):
        a = random_scalar(rng)
        b = random_scalar(rng)
        c = random_scalar(rng)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a - a == zero
        assert is_zero(a * zero)


def test_division_by_cyclotomic_products():
    rng = random.Random(7)
    for _ in range(40):
        a = random_scalar(rng)
        d = cyclotomic_divisor(rng)
        assert (a / d) * d == a
        assert d / d == one


def test_divide_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        one / zero


def test_power_and_negation():
    assert vpow(3) * vpow(-3) == one
    assert vpow(2) ** 3 == vpow(6)
    assert (-one) * (-one) == one
    assert (one - qq) ** 0 == one


def test_rational_specialization_consistency():
    # substituting a concrete power of v must be a ring homomorphism
    rng = random.Random(99)
    for _ in range(20):
        a = random_scalar(rng)
        b = random_scalar(rng)
        for k in (1, 2, 3):
            assert substitute_power(a + b, k) == \
                substitute_power(a, k) + substitute_power(b, k)
            assert substitute_power(a * b, k) == \
                substitute_power(a, k) * substitute_power(b, k)


def test_scalar_str_basics():
    assert scalar_str(zero) == "0"
    assert scalar_str(one) == "1"
    assert scalar_str(rat(-3)) == "-3"
    # a monomial keeps an explicit power of v
    assert "v" in scalar_str(vpow(5))


def test_rat_fractions():
    assert rat(1, 2) + rat(1, 2) == one
    assert rat(2, 4) == rat(1, 2)
    assert rat(3) / rat(3) == one


def test_level_poly_ring():
    c = LevelPoly.cvar()
    p = (c + 1) * (c - 1)
    assert p == c * c - 1
    assert p.at(3) == Fraction(8)
    assert (c * c).at(Fraction(1, 2)) == Fraction(1, 4)

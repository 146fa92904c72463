"""q-integers, the noncommutative binomial layer, and q-derivations."""

import random

from qvertex.qcalc import (
    ASYM, SYM, NCPoly, mul_poly, nc_binomial, qbinom, qderiv_poly, qfact,
    qint, shift_poly,
)
from qvertex.scalars import is_zero, one, qq, rat, vpow
from qvertex import cli


def test_qint_values():
    assert qint(0, ASYM) == rat(0)
    assert qint(1, ASYM) == one
    assert qint(2, ASYM) == one + qq
    assert qint(3, ASYM) == one + qq + qq * qq
    # symmetric flavour is the asymmetric one recentred
    for m in range(-4, 5):
        assert qint(m, SYM) == vpow(-2 * (m - 1)) * qint(m, ASYM)


def test_qfact_recurrence():
    for m in range(1, 7):
        assert qfact(m) == qint(m, ASYM) * qfact(m - 1)


def test_qbinom_symmetry_via_values():
    # both arguments' factorials divide cleanly: check m over l times
    # l-factorial times (m-l)-factorial recovers m-factorial
    for m in range(0, 7):
        for l in range(0, m + 1):
            assert qbinom(m, l) * qfact(l) * qfact(m - l) == qfact(m)


def test_ncpoly_commutation_rule():
    z = NCPoly.monomial(1, 0)
    z0 = NCPoly.monomial(0, 1)
    # z0 z = qq z z0, normal ordering puts z first
    assert z0 * z == (z * z0).scale(qq)


def test_nc_binomial_small():
    z = NCPoly.monomial(1, 0)
    z0 = NCPoly.monomial(0, 1)
    two = z + z0
    assert nc_binomial(2) == two * two
    assert nc_binomial(3) == two * two * two


def test_qderiv_poly_monomials():
    p = {3: one, 0: rat(5), -2: one}
    d = qderiv_poly(p)
    assert d[2] == qint(3, ASYM)
    assert -1 not in d  # the constant term dies
    assert d[-3] == qint(-2, ASYM)


def test_shift_and_mul_poly():
    rng = random.Random(3)
    a = cli._random_poly(rng)
    b = cli._random_poly(rng)
    assert cli._poly_eq(mul_poly(a, b), mul_poly(b, a))
    assert cli._poly_eq(shift_poly(shift_poly(a, 2), -2), a)
    assert cli._poly_eq(shift_poly(mul_poly(a, b), 1),
                        mul_poly(shift_poly(a, 1), shift_poly(b, 1)))


def test_q_leibniz_product_rule():
    assert cli.check_q_leibniz(seed=5, pairs=6, mmax=3)

"""Windowed Laurent blocks and the small vector helpers."""

import pytest

from qvertex.laurent import (
    LaurentBlock, WindowUnderflow, vec_eq, vec_iadd, vec_scale,
)
from qvertex.qcalc import ASYM, qint
from qvertex.scalars import one, qq, rat, vpow, zero


S = ("a",)
T = ("b",)


def test_vec_helpers():
    acc = {S: one}
    vec_iadd(acc, {S: -one, T: rat(2)})
    assert acc == {T: rat(2)}
    assert vec_scale({T: rat(2)}, rat(1, 2)) == {T: one}
    assert vec_eq({S: one}, {S: rat(2) - one})


def make_block():
    return LaurentBlock({0: {S: one}, 2: {T: rat(3)}}, -2, 4)


def test_block_window_discipline():
    b = make_block()
    assert b.get(-2) == {}
    assert b.get(2) == {T: rat(3)}
    with pytest.raises(WindowUnderflow):
        b.get(6)
    with pytest.raises(ValueError):
        LaurentBlock({8: {S: one}}, 0, 4)


def test_block_restrict_and_eq():
    b = make_block()
    r = b.restrict(0, 2)
    assert r.support() == [0, 2]
    with pytest.raises(WindowUnderflow):
        b.restrict(0, 10)
    assert b == LaurentBlock(dict(b.coeffs), b.lo, b.hi)


def test_block_add_scale_shift():
    b = make_block()
    s = b.add(b.scale(-one))
    assert s.is_zero()
    z = b.zshift(2)
    assert z.get(2) == {S: one} and z.lo == 0 and z.hi == 6


def test_arg_scaling():
    b = make_block()
    # z -> z * qq is v^4 on each half-exponent pair
    assert b.arg_qqshift(1).get(2) == {T: rat(3) * vpow(4)}
    assert b.arg_scale(0).coeffs == b.coeffs


def test_qqderiv_matches_q_integer():
    b = LaurentBlock({4: {S: one}}, 0, 4)  # z^2 in doubled exponents
    d = b.qqderiv()
    assert d.get(2) == {S: qint(2, ASYM)}
    # constants die
    c = LaurentBlock({0: {S: one}}, 0, 0).qqderiv()
    assert c.is_zero()

"""Oscillator action, vertex-operator blocks, and normal ordering."""

from qvertex import cli, fock, levelc
from qvertex.laurent import vec_iadd
from qvertex.qcalc import SYM, qint
from qvertex.scalars import is_zero, one, rat, vpow


VAC = fock.state()


def test_state_invariants():
    st = fock.state((3, 1), -2)
    assert fock.deg(st) == 4
    assert fock.charge2(st) == -2
    assert fock.weight4(st) == 4 * 4 + 4
    assert fock.weight4(VAC) == 0


def test_heisenberg_action_small():
    # a(-1) then a(1) on the vacuum returns kappa(1) * vacuum
    up = fock.heis_act(-1, {VAC: one})
    down = fock.heis_act(1, up)
    assert down == {VAC: fock.kappa(1)}
    # annihilation kills the vacuum
    assert fock.heis_act(2, {VAC: one}) == {}


def test_kappa_values():
    assert fock.kappa(1) == qint(2, SYM)
    assert fock.kappa(2) == qint(4, SYM) * qint(2, SYM) / rat(2)


def test_heisenberg_relation_window():
    assert cli.check_heisenberg(weight4_max=12, rmax=3)


def test_x_plus_charge_and_window():
    blk = fock.x_plus_state(VAC, 4)
    assert blk
    for e, vec in blk.items():
        assert e <= 4
        for st in vec:
            assert fock.charge2(st) == 2  # the current raises charge by 2
            # grading: exponent e costs deg - (charge reading)
            assert fock.deg(st) == e


def test_generic_block_matches_x_plus():
    # one specialized current with no shift is the plain current
    for st in (VAC, fock.state((1,), 0), fock.state((), -2)):
        want = fock.x_plus_state(st, 5)
        got = fock.gen_item_block(st, [("x", 0)], 5)
        assert got == want


def test_normal_ordered_vacuum_diagonal():
    # on the vacuum no annihilation happens: the (0,0) coefficient is
    # the charge-4 vacuum with coefficient one
    bi = fock.normal_ordered_xx_state(VAC, 3, 3)
    assert bi[(0, 0)] == {fock.state((), 4): one}
    for (e1, e2), vec in bi.items():
        for st in vec:
            assert fock.charge2(st) == 4


def test_normal_order_identity_small():
    assert cli.check_xx_normal_order(cli.sample_states(3, 4), 3)


def test_phi_block_invertible_leading():
    blk = fock.phi_state(VAC, 3)
    assert blk[0] == {VAC: one}  # unit leading coefficient

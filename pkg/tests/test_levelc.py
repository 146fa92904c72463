"""Tensor-level currents, coproduct slots, and state enumeration."""

from qvertex import fock, levelc
from qvertex.laurent import vec_iadd
from qvertex.scalars import is_zero, one


VAC = fock.state()


def test_enumerate_states_level1_counts():
    # weight4 <= 8: 4*deg + charge2^2 <= 8
    got = list(levelc.enumerate_states(1, 8))
    assert all(len(sts) == 1 for sts in got)
    assert ((VAC,)) in [tuple(s) for s in got] or (VAC,) in got
    # deg 0: charge2 in {-2, 0, 2}; deg 1: charge2 in {-2, 0, 2};
    # deg 2: charge2 = 0 (two partitions)
    weights = sorted(levelc.tensor_weight4(s) for s in got)
    assert weights[0] == 0
    assert all(w <= 8 for w in weights)
    assert len(got) == len(set(got))


def test_enumerate_states_level2_total_weight():
    for sts in levelc.enumerate_states(2, 8):
        assert len(sts) == 2
        assert levelc.tensor_weight4(sts) <= 8


def test_block_caches_are_stable():
    levelc.clear_caches()
    a = levelc.x_block(VAC, 4)
    b = levelc.x_block(VAC, 6)  # grows the cached window
    c = levelc.x_block(VAC, 4)
    for e, vec in a.items():
        assert c[e] == vec
        assert b[e] == vec


def test_level1_coproduct_is_plain_current():
    # one tensor slot: the coproduct current is the single-factor current
    for st in (VAC, fock.state((1,), 0)):
        want = fock.x_plus_state(st, 4)
        got = levelc.coproduct_current_state((st,), 1, -8, 4)
        unwrapped = {e: {sts[0]: c for sts, c in v.items()}
                     for e, v in got.items()}
        assert unwrapped == want


def test_coproduct_slots_sum_preserves_charge():
    states = (VAC, VAC)
    for l in (1, 2):
        got = levelc.coproduct_current_state(states, l, -8, 4)
        for e, vec in got.items():
            for sts in vec:
                assert levelc.total_charge2(sts) == 2


def test_k_eigen2():
    assert levelc.k_eigen2((VAC, VAC)) == 0
    assert levelc.k_eigen2((fock.state((), 2), VAC)) == 1


def test_charge_profile_project():
    vec = {(fock.state((), 2), VAC): one, (VAC, VAC): one}
    kept = levelc.charge_profile_project(vec, (1, 0))
    assert kept == {(fock.state((), 2), VAC): one}

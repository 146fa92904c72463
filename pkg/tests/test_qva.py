"""Current expressions, iterate products, and word evaluation."""

import pytest

from qvertex import combinatorics, fock, levelc, qva
from qvertex.scalars import is_zero, one


VAC = fock.state()


def test_generator_and_vacuum():
    x = qva.generator(1)
    assert qva.wt(x) == 1
    vac = qva.CurrentExpr.vacuum()
    assert qva.wt(vac) == 0


def test_rth_product_weight_law():
    x = qva.generator(1)
    for r in (-3, -2, -1, 0, 1):
        p = qva.rth_product(x, x, r)
        if p.terms:
            assert qva.wt(p) == qva.wt(x) + qva.wt(x) - r - 1


def test_fast_and_cleared_paths_agree():
    # extra admissible clearing factors do not change the value but
    # force the slow clearing evaluation
    for c, shifts in ((1, (0,)), (1, (0, 2)), (2, (0, 1))):
        for states in list(levelc.enumerate_states(c, 8))[:6]:
            vec = {states: one}
            qva.clear_caches()
            fast, lo_f = qva.eval_word(shifts, c, vec, 3)
            qva.clear_caches()
            slow, lo_s = qva.eval_word(shifts, c, vec, 3, extra_clearing=(3,))
            assert fast == slow
            # both certified lower bounds must sit below the support
            for e in fast:
                assert e >= lo_f and e >= lo_s


def test_adjacent_equal_shifts_vanish():
    # two currents at the same argument annihilate every level-1 state
    out, _ = qva.eval_word((0, 0), 1, {(VAC,): one}, 4)
    assert out == {}


def test_evaluate_matches_eval_word():
    x = qva.generator(1)
    blk = qva.evaluate(x, 1, {(VAC,): one}, 8)
    raw, _ = qva.eval_word((0,), 1, {(VAC,): one}, 4)
    for e, vec in raw.items():
        assert blk.coeffs.get(2 * e, {}) == vec


def test_check_pole_free():
    x = qva.generator(1)
    qva.check_pole_free(x)  # no poles: must not raise
    x2 = qva.rth_product(x, x, -1)
    qva.check_pole_free(x2)
    bad = qva.CurrentExpr({(0, 0, (0, -1)): one})
    with pytest.raises(qva.PoleOnDiagonal):
        qva.check_pole_free(bad)


def test_associativity_level1_spot():
    x = qva.generator(1)
    vectors = combinatorics.default_vectors(1)
    for r, s in ((-1, -1), (-2, 0)):
        report = qva.check_associativity(
            x, x, qva.CurrentExpr.vacuum(), r, s, 1, vectors, 6)
        assert all(ok for _, ok, _ in report)


def test_blocks_equal_tolerates_windows():
    x = qva.generator(1)
    a = qva.evaluate(x, 1, {(VAC,): one}, 8)
    b = qva.evaluate(x, 1, {(VAC,): one}, 8)
    assert qva.blocks_equal(a, b, -8, 8)

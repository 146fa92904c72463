"""Quasi-particles: fusion, integrability, straightening, leading terms."""

import random

import pytest

from qvertex import combinatorics, fock, levelc, quasiparticle, qva
from qvertex.scalars import is_zero, one


def test_quasi_particle_charges():
    x1 = quasiparticle.quasi_particle(1)
    assert x1.terms == qva.generator(1).terms
    x2 = quasiparticle.quasi_particle(2)
    assert all(len(shifts) == 2 for _, _, shifts in x2.terms)
    with pytest.raises(ValueError):
        quasiparticle.quasi_particle(0)


def test_deg_wt_and_basis_form():
    pairs = ((7, -3), (4, -2), (5, -2), (6, -1))
    assert quasiparticle.deg_q(pairs) == 17
    assert quasiparticle.wt_pairs(pairs) == 26
    assert quasiparticle.is_basis_form(((2, -2), (1, -1)), 2)
    assert not quasiparticle.is_basis_form(((2, -1), (1, -1)), 2)  # interior -1
    assert not quasiparticle.is_basis_form(((3, -2), (1, -1)), 2)  # charge > c


def test_fuse_check_small():
    for m in (1, 2):
        for k in (1, 2):
            assert quasiparticle.fuse_check(m, k)


def test_integrability_boundary():
    assert quasiparticle.integrability_test(2, 1, 2) is None
    witness = quasiparticle.integrability_test(1, 1, 2)
    assert witness is not None


def test_straighten_outputs_basis_form():
    rng = random.Random(11)
    c = 2
    for _ in range(10):
        k = rng.randint(1, 3)
        pairs = tuple(sorted(
            ((rng.randint(1, 2), rng.randint(-4, -1)) for _ in range(k)),
            key=lambda p: p[1]))
        combo = quasiparticle.straighten(pairs, c)
        for mono in combo:
            assert quasiparticle.is_basis_form(mono, c)


def test_straighten_preserves_evaluation():
    c = 2
    cases = [((1, -1), (1, -1)), ((2, -2), (2, -2)), ((1, -3), (2, -1))]
    vectors = combinatorics.default_vectors(c)
    for pairs in cases:
        expr = quasiparticle.monomial_expr(pairs)
        combo = quasiparticle.straighten(pairs, c)
        expr2 = quasiparticle.straightened_expr(combo)
        for vec in vectors:
            a = qva.evaluate(expr, c, vec, 6)
            b = qva.evaluate(expr2, c, vec, 6)
            assert qva.blocks_equal(a, b, -6, 6)


def test_expand_A_terms_leading_coefficient():
    pairs = ((2, -2), (1, -1))
    terms = quasiparticle.expand_A_terms(pairs)
    assert terms  # nonempty expansion with an invertible leading term
    lead = min(k[0] for k in terms) if isinstance(next(iter(terms)), tuple) \
        else None
    assert lead is None or not is_zero(terms[min(terms)])


def test_leading_term_nonzero():
    for pairs, c in ((((1, -1),), 1), (((2, -2), (1, -1)), 2)):
        assert quasiparticle.leading_term_nonzero(pairs, c)


def test_charge_profile():
    prof = quasiparticle.charge_profile(((2, -2), (1, -1)), 2)
    assert sum(prof) == 3

"""Basis enumeration, diagrams, characters, and the rank certificate."""

from fractions import Fraction

from qvertex import combinatorics, quasiparticle
from qvertex.combinatorics import QSeries
from qvertex.scalars import LevelPoly


def test_enumerate_basis_counts():
    assert len(combinatorics.enumerate_basis(1, 6)) == 11
    assert len(combinatorics.enumerate_basis(2, 4)) == 13
    for pairs in combinatorics.enumerate_basis(2, 5):
        assert quasiparticle.is_basis_form(pairs, 2)
        assert quasiparticle.deg_q(pairs) <= 5


def test_ordering_key_sorts_basis_listing():
    elems = combinatorics.enumerate_basis(2, 4)
    keys = [combinatorics.ordering_key(p) for p in elems]
    assert keys == sorted(keys)


def test_stats_example():
    pairs = ((7, -3), (4, -2), (5, -2), (6, -1))
    dq, wt, diag = combinatorics.stats(pairs)
    assert dq == 17
    assert wt == 26
    assert diag == combinatorics.diagram(pairs)


def test_diagram_shape():
    pairs = ((2, -2), (1, -1))
    diag = combinatorics.diagram(pairs)
    text = combinatorics.diagram_str(diag)
    assert isinstance(text, str) and text
    # column heights are weakly decreasing
    heights = [h for h, colour in diag]
    assert heights == sorted(heights, reverse=True)


def test_qseries_ring():
    one_ = LevelPoly.const(1)
    a = QSeries([one_, one_ + one_], 8)
    b = QSeries([one_, LevelPoly(), -one_], 8)
    prod = a * b
    assert prod.coeffs[0] == one_
    assert prod.coeffs[3] == -(one_ + one_)
    assert not any((a - a).coeffs)


def test_character_level1_sequence():
    ch = combinatorics.character(1, 10)
    want = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]
    assert [ch.coeffs[n].at(1) for n in range(11)] == want


def test_character_matches_formula():
    for c in (1, 2):
        lhs = combinatorics.character(c, 8)
        rhs = combinatorics.character_formula(c, 8)
        for n in range(9):
            assert lhs.coeffs[n].at(c) == rhs.coeffs[n].at(c)


def test_series_identity_short():
    assert combinatorics.series_identity_check(8)


def test_independence_rank_tiny():
    rep = combinatorics.independence_rank(1, 3)
    assert rep["rank_graded"] == rep["count"]
    assert rep["rank_t1"] == rep["count"]

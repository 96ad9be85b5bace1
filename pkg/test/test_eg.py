import pytest

from app import engine
from app.engine.eg_engine import COUNTEREXAMPLE_WITNESS
from app.models.filling_model import Filling
from app.models.shape_model import Cell
from app.models.tableau_model import BiWord, Tableau
from app.utils.exceptions import (ChainBoundExceededException,
                                  HypothesisViolatedException,
                                  InsertionUndefinedException,
                                  InvalidBiWordException, NotAStackException,
                                  ParseException)


def test_insert_appends_and_bumps():
    eg = engine.eg
    assert eg.eg_insert(Tableau(), 3).rows == ((3,),)
    assert eg.eg_insert(Tableau(rows=((1, 3),)), 2).rows == ((1, 2), (3,))
    assert eg.eg_insert(Tableau(rows=((1, 3),)), 4).rows == ((1, 3, 4),)


def test_insert_special_rule_keeps_row():
    assert engine.eg.eg_insert(Tableau(rows=((1, 2),)), 1).rows == ((1, 2), (2,))


def test_insert_undefined():
    with pytest.raises(InsertionUndefinedException):
        engine.eg.eg_insert(Tableau(rows=((1, 3),)), 1)


def test_pair_records_growth():
    p, q = engine.eg.eg_pair(BiWord(u=(1, 2, 3, 4), v=(3, 4, 5, 4)))
    assert p.rows == ((3, 4, 5), (5,))
    assert q.rows == ((1, 2, 3), (4,))


def test_biword_order_is_validated():
    with pytest.raises(InvalidBiWordException):
        BiWord(u=(1, 1), v=(2, 3))
    with pytest.raises(InvalidBiWordException):
        BiWord(u=(2, 1), v=(1, 1))


def test_reading_word_bottom_row_first():
    tableau = Tableau(rows=((3, 4, 5), (5,)))
    assert engine.eg.reading_word(tableau).letters == (5, 3, 4, 5)


def test_pair_of_attained_filling(counterexample_shape):
    zeros = {Cell(1, 3), Cell(2, 3), Cell(3, 3), Cell(4, 1)}
    filling = Filling(shape=counterexample_shape, ones=counterexample_shape.cell_set - zeros)
    biword = engine.eg.biword_of_filling(filling, 1)
    assert biword.u == (1, 2, 3, 4)
    assert biword.v == (3, 4, 5, 4)
    p, q = engine.eg.pair_of_filling(filling, 1)
    assert p.rows == ((3, 4, 5), (5,))
    assert q.rows == ((1, 2, 3), (4,))


def test_biword_rejects_long_chain():
    shape = engine.shape.ferrers([2, 2])
    with pytest.raises(ChainBoundExceededException):
        engine.eg.biword_of_filling(Filling(shape=shape, ones=shape.cell_set), 1)


def test_p_tableau_reads_to_the_filling_word(ten_shape):
    for filling in engine.filling.enumerate_maximal(ten_shape, 1):
        p, _ = engine.eg.pair_of_filling(filling, 1)
        dream = engine.pipedream.from_filling(filling)
        w = engine.pipedream.permutation_of(dream)
        word = engine.eg.reading_word(p)
        assert engine.pipedream.evaluate_word(word, dream.ambient) == w


def test_counterexample():
    report = engine.eg.check_counterexample()
    assert report.p == [[3, 4, 5], [5]]
    assert report.q_top == [[1, 2, 3], [3]]
    assert report.q_bot == [[2, 3, 4], [4]]
    assert report.witness == [list(r) for r in COUNTEREXAMPLE_WITNESS.rows]
    assert report.witness_between
    assert not report.witness_in_image
    assert not report.image_equals_between


def test_between():
    low, high = Tableau(rows=((1, 2),)), Tableau(rows=((2, 3),))
    found = engine.eg.between(low, high)
    assert [t.rows for t in found] == [((1, 2),), ((1, 3),), ((2, 3),)]


def test_candidate_q_tableaux_bounds():
    for tableau in engine.eg.candidate_q_tableaux((2, 1), (1, 1, 1), 1):
        assert tableau.is_row_strict() and tableau.is_column_weak()
        assert all(v <= j + 1 for j in (1, 2) for v in tableau.column(j))


def test_mu_vector_needs_stack(ten_shape):
    with pytest.raises(NotAStackException):
        engine.eg.mu_vector(ten_shape)
    assert engine.eg.mu_vector(engine.shape.stack([1, 2])).mu == (0, 1)


@pytest.mark.parametrize("k", [1, 2])
def test_ne_se_on_ferrers(k):
    report = engine.eg.check_ne_se(engine.shape.ferrers([4, 4, 4, 3]), k)
    assert report.passed, report
    assert report.fillings > 0


def test_ne_se_on_stack():
    report = engine.eg.check_ne_se(engine.shape.stack([3, 4, 4, 2]), 1)
    assert report.passed, report


def test_ne_se_hypothesis(ten_shape):
    with pytest.raises(HypothesisViolatedException):
        engine.eg.check_ne_se(ten_shape, 1)
    with pytest.raises(HypothesisViolatedException):
        engine.eg.check_ne_se(engine.shape.stack([1, 2]), 1)


def test_tableau_text():
    tableau = engine.eg.tableau_from_text("1 2 4\n3\n")
    assert tableau == COUNTEREXAMPLE_WITNESS
    assert engine.eg.tableau_document(tableau) == {"rows": [[1, 2, 4], [3]]}
    with pytest.raises(ParseException):
        engine.eg.tableau_from_text("1 x")

import pytest

from app import engine
from app.deps.permutation_deps import parse_permutation, parse_vector
from app.models.pipedream_model import Permutation, PipeDream
from app.models.shape_model import Cell
from app.utils.exceptions import (CrossOutsideShapeException,
                                  CrossOutsideStaircaseException,
                                  GuardExceededException,
                                  InvalidPermutationException,
                                  LetterOutOfRangeException, ParseException)

WORD_EXAMPLE_W = Permutation(one_line=(1, 2, 6, 4, 7, 5, 3))


def test_word_example_by_tracing(word_example):
    assert engine.pipedream.word_of(word_example).letters == (3, 5, 4, 5, 3, 6, 5)
    assert engine.pipedream.permutation_of(word_example) == WORD_EXAMPLE_W


def test_word_example_by_evaluation(word_example):
    word = engine.pipedream.word_of(word_example)
    assert engine.pipedream.evaluate_word(word, 7) == WORD_EXAMPLE_W
    assert engine.pipedream.is_reduced(word_example)


def test_trailing_fixed_points_do_not_matter():
    assert Permutation(one_line=(1, 3, 2)) == Permutation(one_line=(1, 3, 2, 4))
    assert len({Permutation(one_line=(2, 1)), Permutation(one_line=(2, 1, 3))}) == 1


def test_permutation_must_be_bijection():
    with pytest.raises(InvalidPermutationException):
        Permutation(one_line=(1, 1, 3))


def test_length_and_code():
    w = Permutation(one_line=(1, 4, 3, 2))
    assert engine.pipedream.coxeter_length(w) == 3
    assert engine.pipedream.lehmer_code(w) == [0, 2, 1, 0]
    assert engine.pipedream.inverse(Permutation(one_line=(2, 3, 1))).one_line == (3, 1, 2)


def test_non_reduced_word():
    assert not engine.pipedream.is_reduced_word([1, 1], 3)
    assert engine.pipedream.is_reduced_word([1, 2, 1], 3)


def test_letter_out_of_range():
    with pytest.raises(LetterOutOfRangeException):
        engine.pipedream.evaluate_word([3], 3)


def test_cross_outside_staircase():
    with pytest.raises(CrossOutsideStaircaseException):
        PipeDream(crosses=frozenset({Cell(2, 2)}), ambient=3)


def test_bb_extremes_of_132():
    w = Permutation(one_line=(1, 3, 2))
    assert engine.pipedream.bb_top(w).crosses == {Cell(1, 2)}
    assert engine.pipedream.bb_bot(w).crosses == {Cell(2, 1)}


def test_rc_of_132_and_long_element():
    dreams = engine.pipedream.enumerate_rc(Permutation(one_line=(1, 3, 2)))
    assert [d.crosses for d in dreams] == [{Cell(1, 2)}, {Cell(2, 1)}]
    (only,) = engine.pipedream.enumerate_rc(engine.pipedream.long_element(3))
    assert only.crosses == {Cell(1, 1), Cell(1, 2), Cell(2, 1)}


def test_rc_closure_matches_subsets():
    for w in (Permutation(one_line=(1, 4, 3, 2)), Permutation(one_line=(2, 1, 4, 3))):
        assert engine.pipedream.enumerate_rc(w, method="both")
        assert engine.pipedream.unreachable_from_top(w) == []


def test_rc_of_vexillary_remark():
    assert len(engine.pipedream.enumerate_rc(Permutation(one_line=(4, 2, 5, 1, 3)))) == 2


def test_rc_row_filter():
    w = Permutation(one_line=(1, 3, 2))
    (dream,) = engine.pipedream.enumerate_rc(w, [0, 1])
    assert dream.crosses == {Cell(2, 1)}


def test_rc_guard():
    with pytest.raises(GuardExceededException):
        engine.pipedream.enumerate_rc(engine.pipedream.long_element(6), max_length=10)


def test_fillings_are_dreams_of_shape_permutation(ten_shape):
    w = engine.pipedream.shape_permutation(ten_shape, 1)
    assert w == Permutation(one_line=(1, 2, 6, 4, 5, 3))
    rc = set(engine.pipedream.enumerate_rc(w))
    for filling in engine.filling.enumerate_maximal(ten_shape, 1):
        assert engine.pipedream.from_filling(filling) in rc


def test_to_filling_rejects_outside_crosses(ten_shape):
    dream = engine.pipedream.dream([(1, 1)], 4)
    with pytest.raises(CrossOutsideShapeException):
        engine.pipedream.to_filling(dream, ten_shape)


def test_render_and_parse(word_example):
    text = engine.pipedream.render_pipedream(word_example)
    assert engine.pipedream.parse_pipedream(text) == word_example


def test_document(word_example):
    document = engine.pipedream.document(word_example)
    assert document["word"] == [3, 5, 4, 5, 3, 6, 5]
    assert document["row_vector"] == [1, 2, 2, 2]


@pytest.mark.parametrize(
    "text, expected",
    [("1,3,2", (1, 3, 2)), ("identity(3)", (1, 2, 3)), ("w0(3)", (3, 2, 1))],
)
def test_parse_permutation(text, expected):
    assert parse_permutation(text).one_line == expected


def test_parse_permutation_rejects_words():
    with pytest.raises(ParseException):
        parse_permutation("one,two")


def test_parse_vector():
    assert parse_vector("0,1,2") == [0, 1, 2]
    assert parse_vector(None) is None
    with pytest.raises(ParseException):
        parse_vector("1,-1")


def test_row_filtered_counts_match_dreams_inside_shape(ten_shape):
    w = engine.pipedream.shape_permutation(ten_shape, 1)
    fillings = engine.filling.enumerate_maximal(ten_shape, 1)
    for vector in {engine.filling.zeros_per_row(f).counts for f in fillings}:
        inside = [
            d
            for d in engine.pipedream.enumerate_rc(w, vector)
            if all(ten_shape.has(*c) for c in d.crosses)
        ]
        assert len(inside) == len(engine.filling.enumerate_maximal(ten_shape, 1, vector))


def test_traced_permutation_drops_ambient_fixed_points(ten_shape, word_example):
    assert str(engine.pipedream.shape_permutation(ten_shape, 1)) == "1,2,6,4,5,3"
    assert str(engine.pipedream.permutation_of(word_example)) == "1,2,6,4,7,5,3"
    assert engine.pipedream.permutation_of(engine.pipedream.dream([], 4)).one_line == ()

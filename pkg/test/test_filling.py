import pytest

from app import engine
from app.models.filling_model import Filling
from app.models.shape_model import Cell, ShapeClass
from app.utils.exceptions import (ChainBoundExceededException,
                                  NotAFillingException, ParseException)

ATTAINED_ZEROS = {(1, 3), (2, 3), (3, 3), (4, 1)}


def filling_with_zeros(shape, zeros) -> Filling:
    return Filling(shape=shape, ones=shape.cell_set - {Cell(*z) for z in zeros})


def test_ten_fillings(ten_shape):
    fillings = engine.filling.enumerate_maximal(ten_shape, 1)
    assert len(fillings) == 10
    assert all(engine.filling.is_maximal(f, 1) for f in fillings)


def test_backtracking_agrees_with_closure(ten_shape):
    closure = engine.filling.enumerate_maximal(ten_shape, 1)
    backtrack = engine.filling.enumerate_maximal(ten_shape, 1, method="backtrack")
    assert set(closure) == set(backtrack)
    assert engine.filling.enumerate_maximal(ten_shape, 1, cross_check=True) == closure


def test_rows_filter_partitions_fillings(ten_shape):
    fillings = engine.filling.enumerate_maximal(ten_shape, 1)
    vectors = {engine.filling.zeros_per_row(f).counts for f in fillings}
    total = sum(
        len(engine.filling.enumerate_maximal(ten_shape, 1, list(v))) for v in vectors
    )
    assert total == 10
    for v in vectors:
        by_backtrack = engine.filling.enumerate_maximal(
            ten_shape, 1, list(v), method="backtrack"
        )
        assert set(by_backtrack) == set(
            engine.filling.enumerate_maximal(ten_shape, 1, list(v))
        )


def test_short_row_vector_is_padded(ten_shape):
    top = engine.filling.d_top(ten_shape, 1)
    full = list(engine.filling.zeros_per_row(top).counts)
    short = full[:]
    while short and short[-1] == 0:
        short.pop()
    found = engine.filling.enumerate_maximal(ten_shape, 1, short)
    assert found == engine.filling.enumerate_maximal(ten_shape, 1, full)
    assert top in found


@pytest.mark.parametrize("n, expected", [(4, 2), (5, 5), (6, 14)])
def test_staircase_counts_are_catalan(n, expected):
    staircase = engine.shape.staircase(n)
    assert len(engine.filling.enumerate_maximal(staircase, 1)) == expected


def test_chain_needs_rectangle_inside_shape(counterexample_shape):
    # (3,1) and (2,2) are NE-ordered but column 1 misses row 2
    assert engine.filling.chain_length(counterexample_shape, [(3, 1), (2, 2)]) == 1
    assert engine.filling.chain_length(counterexample_shape, [(4, 1), (3, 2)]) == 2


def test_longest_chain_is_north_east():
    shape = engine.shape.ferrers([3, 3, 3])
    chain = engine.filling.longest_chain(Filling(shape=shape, ones=shape.cell_set))
    assert len(chain) == 3
    assert chain.cells == (Cell(3, 1), Cell(2, 2), Cell(1, 3))


def test_attained_filling_is_maximal(counterexample_shape):
    filling = filling_with_zeros(counterexample_shape, ATTAINED_ZEROS)
    assert engine.filling.longest_ne_chain(filling) == 1
    assert engine.filling.is_maximal(filling, 1)
    assert filling in engine.filling.enumerate_maximal(counterexample_shape, 1)


def test_is_maximal_rejects_long_chain():
    shape = engine.shape.ferrers([2, 2])
    with pytest.raises(ChainBoundExceededException):
        engine.filling.is_maximal(Filling(shape=shape, ones=shape.cell_set), 1)


def test_non_maximal_filling():
    shape = engine.shape.ferrers([2, 2])
    empty = Filling(shape=shape, ones=frozenset())
    assert not engine.filling.is_maximal(empty, 1)


def test_zeros_per_row_and_purity(ten_shape):
    fillings = engine.filling.enumerate_maximal(ten_shape, 1)
    sizes = {sum(engine.filling.zeros_per_row(f).counts) for f in fillings}
    assert len(sizes) == 1


def test_extremes_have_no_moves(ten_shape):
    top = engine.filling.d_top(ten_shape, 1)
    bottom = engine.filling.d_bot(ten_shape, 1)
    assert engine.filling.inverse_chute_moves(top) == []
    assert engine.filling.chute_moves(bottom) == []
    assert top != bottom


def test_chute_moves_stay_maximal(ten_shape):
    for filling in engine.filling.enumerate_maximal(ten_shape, 1):
        for moved in engine.filling.chute_moves(filling):
            assert engine.filling.is_maximal(moved, 1)


def test_geometric_report_shape(ten_shape):
    report = engine.filling.geometric_report(ten_shape, 1)
    assert set(report) == {"adjacent", "corner"}
    assert all(set(sides) == {"top", "bottom"} for sides in report.values())


def test_geometric_reading_is_validated(ten_shape):
    with pytest.raises(ParseException):
        engine.filling.geometric_extreme(ten_shape, 1, reading="diagonal")


def test_parse_render(ten_shape):
    filling = engine.filling.d_top(ten_shape, 1)
    text = engine.filling.render_filling(filling)
    assert set(text) <= {".", "0", "1", "\n"}
    assert engine.filling.parse_filling(text) == filling


def test_parse_rejects_symbols():
    with pytest.raises(ParseException):
        engine.filling.parse_filling("1x\n01")


def test_ones_outside_shape():
    shape = engine.shape.ferrers([1])
    with pytest.raises(NotAFillingException):
        Filling(shape=shape, ones=frozenset({Cell(2, 2)}))


def test_filling_document(counterexample_shape):
    filling = filling_with_zeros(counterexample_shape, ATTAINED_ZEROS)
    document = engine.filling.filling_document(filling)
    assert document["zeros_per_row"] == [1, 1, 1, 1]
    assert document["zeros"] == [[1, 3], [2, 3], [3, 3], [4, 1]]


def test_greedy_seeds_reach_the_same_extremes(ten_shape):
    for reverse in (False, True):
        seed = engine.filling.greedy_seed(ten_shape, 1, reverse=reverse)
        assert engine.filling.is_maximal(seed, 1)
    assert engine.filling.inverse_chute_moves(engine.filling.d_top(ten_shape, 1)) == []
    assert engine.filling.chute_moves(engine.filling.d_bot(ten_shape, 1)) == []


@pytest.mark.parametrize("k", [1, 2])
def test_closure_matches_backtracking_on_small_moons(k):
    for shape in engine.shape.enumerate_moon_shapes(3, 3):
        closure = engine.filling.enumerate_maximal(shape, k)
        backtrack = engine.filling.enumerate_maximal(shape, k, method="backtrack")
        assert set(closure) == set(backtrack), engine.shape.render_shape(shape)


EIGHT_ROW_TOP = """\
...1100.
..11000.
..11000.
11100000
11100000
.1111001
.1111111
...1111.
"""
EIGHT_ROW_BOTTOM = """\
...1111.
..11111.
..10011.
11000111
11000111
.0000011
.0000011
...0011.
"""
WORD_EXAMPLE_FILLING = """\
.10.
1100
0101
.001
.11.
"""


def test_eight_row_extremes():
    top = engine.filling.parse_filling(EIGHT_ROW_TOP)
    bottom = engine.filling.parse_filling(EIGHT_ROW_BOTTOM)
    assert top.shape == bottom.shape
    assert engine.filling.d_top(top.shape, 2) == top
    assert engine.filling.d_bot(top.shape, 2) == bottom
    assert engine.filling.longest_ne_chain(top) == 2
    assert engine.filling.longest_ne_chain(bottom) == 2
    assert len(top.zeros) == len(bottom.zeros) == 20


def test_word_example_filling(word_example):
    filling = engine.filling.parse_filling(WORD_EXAMPLE_FILLING)
    assert len(filling.shape.rows) == 5
    assert engine.filling.is_maximal(filling, 1)
    assert len(filling.zeros) == 7
    dream = engine.pipedream.from_filling(filling)
    assert dream.crosses == word_example.crosses
    assert str(engine.pipedream.permutation_of(dream)) == "1,2,6,4,7,5,3"
    assert engine.pipedream.is_reduced(dream)
    assert engine.pipedream.shape_permutation(filling.shape, 1) == engine.pipedream.permutation_of(
        dream
    )


@pytest.mark.parametrize("k", [1, 2])
def test_ferrers_padding_keeps_the_zeros(k):
    ferrers = [
        s
        for s in engine.shape.enumerate_moon_shapes(3, 3)
        if engine.shape.classify(s) == ShapeClass.ferrers
    ]
    assert ferrers
    for shape in ferrers:
        padded = engine.shape.pad_ferrers(shape, k)
        before = {f.zeros for f in engine.filling.enumerate_maximal(shape, k)}
        after = {f.zeros for f in engine.filling.enumerate_maximal(padded, k)}
        assert before == after, engine.shape.render_shape(shape)

import pytest

from app import engine
from app.models.bijection_model import DiagonalSet, DyckFan
from app.models.filling_model import Filling
from app.models.shape_model import Cell
from app.utils.exceptions import (DiagonalOutOfRangeException,
                                  FanExtractionFailedException,
                                  HeightMultisetMismatchException,
                                  NotAStackException, NotStaircaseException)

HEPTAGON_ZEROS = {Cell(1, 6), Cell(2, 4), Cell(4, 4)}
HEPTAGON_PATHS = ("UUDUDD", "UDUUDD")


def heptagon_filling() -> Filling:
    shape = engine.shape.reverse_staircase(7)
    return Filling(shape=shape, ones=shape.cell_set - HEPTAGON_ZEROS)


def test_crossing():
    bijection = engine.bijection
    assert bijection.crosses((3, 1), (4, 2))
    assert not bijection.crosses((3, 1), (5, 4))
    assert not bijection.crosses((3, 1), (3, 5))


def test_pentagon_triangulations():
    staircase = engine.shape.staircase(5)
    images = set()
    for filling in engine.filling.enumerate_maximal(staircase, 1):
        diagonals = engine.bijection.filling_to_diagonals(filling)
        assert len(diagonals) == 2
        assert engine.bijection.is_crossing_free(diagonals)
        assert engine.bijection.is_triangulation(diagonals)
        assert engine.bijection.diagonals_to_filling(diagonals) == filling
        images.add(diagonals)
    assert len(images) == 5


def test_hexagon_two_triangulations():
    staircase = engine.shape.staircase(6)
    for filling in engine.filling.enumerate_maximal(staircase, 2):
        diagonals = engine.bijection.filling_to_diagonals(filling)
        assert engine.bijection.max_mutual_crossing(diagonals) <= 2
        assert engine.bijection.is_triangulation(diagonals, 2)


def test_non_triangulation():
    diagonals = DiagonalSet(n=5, diagonals=[(3, 1)])
    assert not engine.bijection.is_triangulation(diagonals)


def test_polygon_edges_are_not_diagonals():
    with pytest.raises(DiagonalOutOfRangeException):
        DiagonalSet(n=5, diagonals=[(2, 1)])
    assert len(engine.bijection.all_diagonals(5)) == 5


def test_diagonals_need_staircase(ten_shape):
    with pytest.raises(NotStaircaseException):
        engine.bijection.filling_to_diagonals(Filling(shape=ten_shape, ones=frozenset()))


def test_forced_cells():
    assert engine.bijection.forced_cells(7, 2) == {
        Cell(1, 1),
        Cell(1, 2),
        Cell(5, 6),
        Cell(6, 6),
    }


def test_heptagon_fan():
    fan = engine.bijection.filling_to_fan(heptagon_filling(), 2)
    assert fan.paths == HEPTAGON_PATHS
    assert engine.bijection.fan_to_filling(fan, 7) == heptagon_filling()


def test_square_fans():
    fans = {
        engine.bijection.filling_to_fan(f, 1).paths
        for f in engine.filling.enumerate_maximal(engine.shape.reverse_staircase(4), 1)
    }
    assert fans == {("UUDD",), ("UDUD",)}


def test_fans_are_distinct_for_maximal_fillings():
    shape = engine.shape.reverse_staircase(7)
    fillings = engine.filling.enumerate_maximal(shape, 2)
    fans = {engine.bijection.filling_to_fan(f, 2) for f in fillings}
    assert len(fans) == len(fillings) == engine.schubert.ktriangulation_count(7, 2)


def test_fan_extraction_fails_on_empty_filling():
    shape = engine.shape.reverse_staircase(4)
    with pytest.raises(FanExtractionFailedException):
        engine.bijection.filling_to_fan(Filling(shape=shape, ones=frozenset()), 1)


def test_fan_validation():
    with pytest.raises(FanExtractionFailedException):
        engine.bijection.fan_to_filling(DyckFan(paths=("DU",)), 3)
    with pytest.raises(FanExtractionFailedException):
        engine.bijection.fan_to_filling(DyckFan(paths=("UDUD", "UUDD")), 8)


def test_column_permutation_invariance():
    first, second = engine.shape.stack([1, 2, 3]), engine.shape.stack([3, 2, 1])
    for k in (1, 2):
        report = engine.bijection.jonsson_check(first, second, k)
        assert report.equal


def test_jonsson_inputs(ten_shape):
    with pytest.raises(NotAStackException):
        engine.bijection.jonsson_check(ten_shape, ten_shape, 1)
    with pytest.raises(HeightMultisetMismatchException):
        engine.bijection.jonsson_check(
            engine.shape.stack([1, 2]), engine.shape.stack([2, 2]), 1
        )


def test_jonsson_sweep():
    shapes = engine.shape.enumerate_stack_shapes(3, 3)
    for k in (1, 2):
        assert all(r.equal for r in engine.bijection.jonsson_sweep(shapes, k))


@pytest.mark.parametrize("n", range(3, 8))
@pytest.mark.parametrize("k", [1, 2])
def test_chains_are_crossings(n, k):
    staircase = engine.shape.staircase(n)
    for filling in engine.filling.enumerate_maximal(staircase, k):
        assert engine.bijection.crossing_number(filling) == engine.filling.longest_ne_chain(
            filling
        )


def test_triangle_has_no_diagonals_but_one_segment():
    staircase = engine.shape.staircase(3)
    (filling,) = engine.filling.enumerate_maximal(staircase, 1)
    assert len(engine.bijection.filling_to_diagonals(filling)) == 0
    assert engine.bijection.crossing_number(filling) == 1
    empty = Filling(shape=staircase, ones=frozenset())
    assert engine.bijection.crossing_number(empty) == 0

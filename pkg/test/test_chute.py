import pytest

from app import engine
from app.models.chute_model import ChutableRect
from app.models.pipedream_model import Permutation
from app.utils.exceptions import NotAnElbowException, NotChutableException

W_132 = Permutation(one_line=(1, 3, 2))


def test_find_and_apply_chute():
    top = engine.pipedream.bb_top(W_132)
    (rect,) = engine.chute.find_chutable(top)
    assert rect == ChutableRect(1, 2, 1, 2)
    moved = engine.chute.apply_chute(top, rect)
    assert moved == engine.pipedream.bb_bot(W_132)
    (back,) = engine.chute.find_inverse_chutable(moved)
    assert engine.chute.apply_inverse_chute(moved, back) == top


def test_apply_chute_checks_pattern():
    bottom = engine.pipedream.bb_bot(W_132)
    with pytest.raises(NotChutableException):
        engine.chute.apply_chute(bottom, ChutableRect(1, 2, 1, 2))


def test_chute_preserves_permutation_on_s4():
    pipedream = engine.pipedream
    for w in engine.schubert.sample_permutations(4, 24):
        for dream in pipedream.rc_brute_force(w):
            for moved in engine.chute.chute_moves(dream):
                assert pipedream.permutation_of(moved) == w
                assert pipedream.is_reduced(moved)


def test_poset_extremes_are_bergeron_billey():
    w = Permutation(one_line=(1, 4, 3, 2))
    dreams = engine.pipedream.enumerate_rc(w)
    poset = engine.chute.chute_poset(dreams)
    assert len(poset) == 5
    assert poset.maximal == [poset.index(engine.pipedream.bb_top(w))]
    assert poset.minimal == [poset.index(engine.pipedream.bb_bot(w))]


def test_two_element_chain_is_lattice():
    verdict = engine.chute.lattice_verdict(W_132)
    assert verdict.is_lattice
    assert verdict.size == 2
    assert verdict.w == "1,3,2"


def test_lattice_table_columns():
    table = engine.chute.lattice_table([W_132, Permutation(one_line=(2, 1))])
    assert list(table.columns) == ["w", "size", "is_lattice", "witness", "reason"]
    assert len(table) == 2


def test_is_lattice_finds_missing_join():
    # two maximal elements have no join
    poset = engine.chute.poset_from_relations(["a", "b", "c"], [(0, 2), (1, 2)])
    verdict = engine.chute.is_lattice(poset)
    assert not verdict.is_lattice
    assert verdict.witness == ("a", "b")
    assert verdict.reason == "no unique join"


def test_ten_fillings_interval(ten_shape):
    verdict = engine.chute.interval_check(ten_shape, 1)
    assert verdict.holds
    assert verdict.fillings == 10
    assert verdict.interval_size == 10
    assert verdict.permutation == "1,2,6,4,5,3"


def test_filling_poset_extremes(ten_shape):
    fillings = engine.filling.enumerate_maximal(ten_shape, 1)
    dreams = [engine.pipedream.from_filling(f) for f in fillings]
    poset = engine.chute.chute_poset(dreams, ten_shape)
    top = engine.pipedream.from_filling(engine.filling.d_top(ten_shape, 1))
    bottom = engine.pipedream.from_filling(engine.filling.d_bot(ten_shape, 1))
    assert [poset.elements[i] for i in poset.maximal] == [top]
    assert [poset.elements[i] for i in poset.minimal] == [bottom]


def test_two_row_comparison_reports():
    comparison = engine.chute.two_row_order_comparison(Permutation(one_line=(1, 4, 3, 2)))
    assert comparison.w == "1,4,3,2"
    if comparison.coincide:
        assert comparison.only_general == []


def test_flip_requires_elbow():
    top = engine.pipedream.bb_top(W_132)
    with pytest.raises(NotAnElbowException):
        engine.chute.flip(top, (1, 2))


def test_flip_swaps_crossing_pair():
    top = engine.pipedream.bb_top(W_132)
    assert engine.chute.flip(top, (2, 1)) == engine.pipedream.bb_bot(W_132)
    assert engine.pipedream.bb_bot(W_132) in engine.chute.flips(top)


def test_chute_edges_are_flips_on_s4():
    for w in engine.schubert.sample_permutations(4, 24):
        verdict = engine.chute.chute_subgraph_of_flips(w)
        assert verdict.holds, verdict.missing


def test_dot_output():
    dreams = engine.pipedream.enumerate_rc(Permutation(one_line=(1, 4, 3, 2)))
    poset = engine.chute.chute_poset(dreams)
    dot = engine.chute.poset_to_dot(poset, emphasize=dreams[:1])
    assert "digraph" in dot.splitlines()[0]
    assert "->" in dot
    assert "fillcolor" in dot
    flips = engine.chute.flip_graph_to_dot(engine.chute.flip_graph(dreams))
    assert "digraph" not in flips
    assert "--" in flips

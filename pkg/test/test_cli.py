import json

import pytest

from app import engine
from app.cli import main
from app.commands.verify_command import FaultyChuteEngine, Suite, injected_fault


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate(capsys, ten_shape_file):
    code, out, _ = run(capsys, "enumerate", "--shape", ten_shape_file, "--k", "1")
    assert code == 0
    assert out.startswith("10 fillings")


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "--json", "enumerate", "--staircase", "5", "--k", "1")
    assert code == 0
    outcome = json.loads(out)
    assert outcome["status"] == "ok"
    assert outcome["payload"]["count"] == 5
    assert outcome["exit_code"] == 0


def test_enumerate_needs_one_shape(capsys):
    with pytest.raises(SystemExit):
        main(["enumerate", "--staircase", "5", "--ferrers", "2,1", "--k", "1"])


def test_bad_shape_file_is_input_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("#.#\n")
    code, _, err = run(capsys, "enumerate", "--shape", str(path), "--k", "1")
    assert code == 2
    assert "Not convex" in err


def test_poset_on_shape(capsys, ten_shape_file, tmp_path):
    dot = tmp_path / "ten.dot"
    code, out, _ = run(
        capsys,
        "--json",
        "poset",
        "--shape",
        ten_shape_file,
        "--k",
        "1",
        "--perm",
        "1,2,6,4,5,3",
        "--dot",
        str(dot),
    )
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["max_is_d_top"] and payload["min_is_d_bot"]
    assert payload["interval"]["holds"]
    assert payload["max_is_bb_top"] and payload["min_is_bb_bot"]
    assert "digraph" in dot.read_text()


def test_lattice_check_small(capsys):
    code, out, _ = run(capsys, "lattice-check", "--all-sn", "3", "--table")
    assert code == 0
    assert "6 permutations" in out


def test_lattice_guard(capsys):
    code, _, err = run(capsys, "lattice-check", "--all-sn", "7")
    assert code == 2
    assert "guard" in err


def test_length_guard(capsys):
    code, _, _ = run(capsys, "--max-length", "2", "schubert", "--perm", "w0(4)")
    assert code == 2


def test_schubert(capsys):
    code, out, _ = run(capsys, "schubert", "--perm", "1,3,2", "--oracle")
    assert code == 0
    assert out.strip() == "S_1,3,2 = x1 + x2"


def test_invalid_permutation(capsys):
    code, _, _ = run(capsys, "schubert", "--perm", "1,1,3")
    assert code == 2


def test_count(capsys):
    code, out, _ = run(capsys, "--json", "count", "--n", "5", "--k", "1", "--method", "all")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["value"] == 5
    assert payload["square"] == "25/3"


def test_eg_counterexample(capsys):
    code, out, _ = run(capsys, "--json", "eg", "--counterexample")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["witness"] == [[1, 2, 4], [3]]
    assert not payload["image_equals_between"]


def test_eg_check_hypothesis_violation(capsys, ten_shape_file):
    code, _, err = run(capsys, "eg", "--shape", ten_shape_file, "--k", "1", "--check")
    assert code == 2
    assert "hypothesis" in err


def test_shapes(capsys):
    code, out, _ = run(capsys, "shapes", "--rows", "1", "--cols", "3", "--list")
    assert code == 0
    assert out.startswith("3 shapes")


def test_verify_quick_subset(capsys):
    code, out, _ = run(capsys, "verify", "--quick", "--only", "1,2,3,9,12")
    assert code == 0
    assert "5/5 criteria passed" in out


def test_verify_catches_injected_fault(capsys):
    code, out, _ = run(capsys, "--json", "verify", "--inject-fault", "chute")
    assert code == 1
    (criterion,) = json.loads(out)["payload"]["criteria"]
    assert criterion["number"] == 5
    assert not criterion["passed"]
    assert engine.chute.__class__ is not FaultyChuteEngine


def test_fault_is_removed_after_failure():
    original = engine.chute
    with pytest.raises(RuntimeError):
        with injected_fault("chute"):
            assert isinstance(engine.chute, FaultyChuteEngine)
            raise RuntimeError
    assert engine.chute is original


def test_suite_reports_timings():
    (result,) = Suite(quick=True).run({13})
    assert result.passed
    assert result.seconds >= 0


def test_filling_criterion_does_not_trust_closure(monkeypatch):
    monkeypatch.setattr(
        engine.filling, "_by_closure", lambda shape, k: [engine.filling.d_top(shape, k)]
    )
    (result,) = Suite(quick=True).run({4})
    assert not result.passed
    assert "connected" in result.detail

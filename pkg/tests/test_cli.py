import json

import pytest

from greenseq.cli import main

from data import B_CYCLE3, B_FIVE, B_MARKOV, B_TWO


@pytest.fixture
def cycle3_file(tmp_path):
    path = tmp_path / "cycle3.json"
    path.write_text(json.dumps({"b": B_CYCLE3}))
    return str(path)


@pytest.fixture
def five_file(tmp_path):
    path = tmp_path / "five.json"
    path.write_text(json.dumps({"b": B_FIVE}))
    return str(path)


@pytest.fixture
def markov_file(tmp_path):
    path = tmp_path / "markov.json"
    path.write_text(json.dumps({"b": B_MARKOV}))
    return str(path)


class TestMutateCommand:
    def test_trace_printed(self, cycle3_file, capsys):
        assert main(["mutate", "--seq", "2,3,1,2", cycle3_file]) == 0
        out = capsys.readouterr().out
        assert "initial" in out
        assert "after mu_2 (step 1)" in out
        assert "after mu_2 (step 4)" in out
        assert "greens:" in out

    def test_bad_sequence(self, cycle3_file, capsys):
        assert main(["mutate", "--seq", "2,x", cycle3_file]) == 1

    def test_index_out_of_range(self, cycle3_file):
        assert main(["mutate", "--seq", "9", cycle3_file]) == 1


class TestVerifyCommand:
    def test_maximal(self, cycle3_file, capsys):
        assert main(["verify", "--seq", "2,3,1,2", cycle3_file]) == 0
        out = capsys.readouterr().out
        assert "maximal green:  yes" in out

    def test_violation_reported(self, cycle3_file, capsys):
        assert main(["verify", "--seq", "1,1", cycle3_file]) == 0
        out = capsys.readouterr().out
        assert "maximal green:  no" in out
        assert "first violation: step 2, index 1 was red" in out


class TestFindCommand:
    def test_found(self, cycle3_file, capsys):
        assert main(["find", "--target", "mgs", "--max-depth", "4", cycle3_file]) == 0
        assert "found" in capsys.readouterr().out

    def test_exhausted_exit_code(self, markov_file, capsys):
        assert main(["find", "--target", "mgs", "--max-depth", "6", markov_file]) == 2
        assert "exhausted to depth 6" in capsys.readouterr().out

    def test_env_depth(self, markov_file, capsys, monkeypatch):
        monkeypatch.setenv("GREENSEQ_DEPTH", "2")
        assert main(["find", markov_file]) == 2
        assert "depth 2" in capsys.readouterr().out

    def test_bad_env_depth(self, markov_file, monkeypatch):
        monkeypatch.setenv("GREENSEQ_DEPTH", "soon")
        assert main(["find", markov_file]) == 1

    def test_iddfs_strategy(self, cycle3_file):
        assert main(["find", "--strategy", "iddfs", "--max-depth", "4", cycle3_file]) == 0


class TestDecomposeCommand:
    def test_five(self, five_file, capsys):
        assert main(["decompose", five_file]) == 0
        out = capsys.readouterr().out
        assert "block 1: 1 2 3" in out
        assert "block 2: 4" in out
        assert "block 3: 5" in out
        assert "order: 1 2 3 4 5" in out


class TestCoherenceCommand:
    def test_verified(self, cycle3_file, tmp_path, capsys):
        attached = tmp_path / "attached.txt"
        attached.write_text("1 2 0\n0 1 1\n")
        assert main(["coherence", "--attached", str(attached), "--depth", "4", cycle3_file]) == 0
        assert "verified to depth 4" in capsys.readouterr().out

    def test_counterexample_exit_code(self, tmp_path, capsys):
        matrix = tmp_path / "path2.txt"
        matrix.write_text("0 1 / -1 0")
        attached = tmp_path / "attached.txt"
        attached.write_text("1 0 / 0 -1")
        assert main(["coherence", "--attached", str(attached), "--depth", "3", str(matrix)]) == 2
        assert "counterexample" in capsys.readouterr().out

    def test_incoherent_input_is_error(self, cycle3_file, tmp_path):
        attached = tmp_path / "attached.txt"
        attached.write_text("1 0 0 / -1 0 0")
        assert main(["coherence", "--attached", str(attached), cycle3_file]) == 1


class TestQuiverCommand:
    def test_arrow_list(self, cycle3_file, capsys):
        assert main(["quiver", cycle3_file]) == 0
        out = capsys.readouterr().out
        assert "1 -> 2" in out

    def test_dot_output(self, cycle3_file, capsys):
        assert main(["quiver", "--dot", cycle3_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph quiver {")

    def test_dot_to_file(self, cycle3_file, tmp_path):
        out_path = tmp_path / "q.dot"
        assert main(["quiver", "--dot", "--out", str(out_path), cycle3_file]) == 0
        assert out_path.read_text().startswith("digraph quiver {")


class TestErrors:
    def test_missing_file(self):
        assert main(["find", "/nonexistent/matrix.json"]) == 1

    def test_invalid_matrix(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"b": [[0, 1], [1, 0]]}))
        assert main(["find", str(path)]) == 1

    def test_unknown_command(self):
        assert main(["frobnicate"]) == 1

    def test_missing_required_arg(self):
        assert main(["mutate"]) == 1


def test_two_by_two_grid_workflow(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text("0 -2 / 3 0")
    assert main(["verify", "--seq", "1,2", str(path)]) == 0
    assert "maximal green:  yes" in capsys.readouterr().out

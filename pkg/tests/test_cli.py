"""End-to-end tests of the command-line interface via main()."""

import json

import pytest

from pebbling import verify
from pebbling.cli import main
from pebbling.strategy import load_strategy_set
from pebbling.verify import CheckResult


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def path4_file(tmp_path, capsys):
    path = tmp_path / "path4.txt"
    code, _, _ = run(capsys, "family", "--kind", "path", "--size", "4",
                     "--out", str(path))
    assert code == 0
    return str(path)


@pytest.fixture
def petersen_file(tmp_path, capsys):
    path = tmp_path / "petersen.txt"
    code, _, _ = run(capsys, "family", "--kind", "petersen", "--out", str(path))
    assert code == 0
    return str(path)


# -- family -------------------------------------------------------------------

def test_family_prints_edge_list(capsys):
    code, out, err = run(capsys, "family", "--kind", "path", "--size", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["3", "2"]
    assert lines[1:] == ["0 1", "1 2"]


def test_family_json(capsys):
    code, out, _ = run(capsys, "family", "--kind", "cycle", "--size", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "cycle"
    assert (payload["n"], payload["m"]) == (4, 4)
    assert [0, 1] in payload["edges"]


def test_family_tree_parents_equals_form(capsys):
    # the leading dash of the sentinel requires --parents=...
    code, out, _ = run(capsys, "family", "--kind", "tree", "--parents=-1,0,0,1,1,2,2",
                       "--json")
    assert code == 0
    assert json.loads(out)["n"] == 7


def test_family_writes_file(path4_file, capsys):
    with open(path4_file, encoding="utf-8") as fh:
        header = fh.readline().split()
    assert header == ["4", "3"]


def test_family_bad_parents(capsys):
    code, _, err = run(capsys, "family", "--kind", "tree", "--parents=-1,zero")
    assert code == 1
    assert err.startswith("error:")


# -- solve --------------------------------------------------------------------

def test_solve_solvable_with_witness(path4_file, capsys):
    code, out, _ = run(capsys, "solve", "--graph", path4_file, "--root", "0",
                       "--config", "3:8")
    assert code == 0
    assert "solvable in 7 moves" in out


def test_solve_unsolvable_is_still_exit_zero(path4_file, capsys):
    code, out, _ = run(capsys, "solve", "--graph", path4_file, "--root", "0",
                       "--config", "3:7")
    assert code == 0
    assert "unsolvable" in out


def test_solve_json_witness_replays(path4_file, capsys):
    code, out, _ = run(capsys, "solve", "--graph", path4_file, "--root", "0",
                       "--config", "3:8", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["solvable"] is True
    assert len(payload["witness"]) == 7
    assert all(len(move) == 2 for move in payload["witness"])


def test_solve_config_file(path4_file, tmp_path, capsys):
    cfg = tmp_path / "config.txt"
    cfg.write_text("0:1\n")
    code, out, _ = run(capsys, "solve", "--graph", path4_file, "--root", "0",
                       "--config-file", str(cfg))
    assert code == 0
    assert "no moves" in out


def test_solve_malformed_config(path4_file, capsys):
    code, _, err = run(capsys, "solve", "--graph", path4_file, "--root", "0",
                       "--config", "nonsense")
    assert code == 1
    assert err.startswith("error:")


# -- pi and max-unsolvable ------------------------------------------------------

def test_pi_single_root(path4_file, capsys):
    code, out, _ = run(capsys, "pi", "--graph", path4_file, "--root", "0",
                       "--threads", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 8
    assert payload["root"] == 0
    assert payload["critical_config"] == "3:7"


def test_pi_all_roots(path4_file, capsys):
    code, out, _ = run(capsys, "pi", "--graph", path4_file, "--threads", "1")
    assert code == 0
    assert "pebbling number 8" in out
    assert "all roots" in out


def test_pi_json_stable_between_runs(path4_file, capsys):
    argv = ("pi", "--graph", path4_file, "--root", "3", "--threads", "1", "--json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    a, b = json.loads(first), json.loads(second)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_max_unsolvable(path4_file, capsys):
    code, out, _ = run(capsys, "max-unsolvable", "--graph", path4_file,
                       "--root", "0", "--threads", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 7
    assert payload["config"] == "3:7"


# -- strategies, bound, lp ------------------------------------------------------

def test_strategies_to_bound_to_lp_round_trip(petersen_file, tmp_path, capsys):
    ss_path = tmp_path / "strategies.json"
    code, out, _ = run(capsys, "strategies", "--graph", petersen_file,
                       "--root", "0", "--out", str(ss_path))
    assert code == 0
    assert "ratio bound 10" in out
    ss = load_strategy_set(str(ss_path))
    assert ss.root == 0

    code, out, _ = run(capsys, "bound", "--graph", petersen_file,
                       "--strategies", str(ss_path), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ratio_bound"] == 10
    assert payload["lp_bound"] == 10

    code, out, _ = run(capsys, "lp", "--graph", petersen_file,
                       "--strategies", str(ss_path))
    assert code == 0
    assert "optimal value 9" in out
    assert "(bound 10)" in out


def test_strategies_json_deterministic(petersen_file, capsys):
    argv = ("strategies", "--graph", petersen_file, "--root", "0", "--json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    payload = json.loads(first)
    assert payload["root"] == 0
    assert payload["kappa"] >= 1


def test_bound_generated_single_root(petersen_file, capsys):
    code, out, _ = run(capsys, "bound", "--graph", petersen_file, "--root", "0",
                       "--method", "ratio")
    assert code == 0
    assert "ratio bound 10" in out
    assert "lp" not in out


def test_bound_all_roots_json(path4_file, capsys):
    code, out, _ = run(capsys, "bound", "--graph", path4_file, "--threads", "1",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["graph"] == {"n": 4, "m": 3}
    assert payload["overall_bound"] == 8
    assert len(payload["per_root"]) == 4


def test_bound_coverage_failure_exits_one(tmp_path, capsys):
    path3 = tmp_path / "path3.txt"
    run(capsys, "family", "--kind", "path", "--size", "3", "--out", str(path3))
    code, out, err = run(capsys, "bound", "--graph", str(path3),
                         "--gen", "all-paths", "--maxlen", "1", "--threads", "1")
    assert code == 1
    assert "overall bound: None" in out
    assert "root 0: failed" in err and "root 2: failed" in err


def test_bound_strategy_root_mismatch(petersen_file, tmp_path, capsys):
    ss_path = tmp_path / "strategies.json"
    run(capsys, "strategies", "--graph", petersen_file, "--root", "0",
        "--out", str(ss_path))
    code, _, err = run(capsys, "bound", "--graph", petersen_file,
                       "--strategies", str(ss_path), "--root", "3")
    assert code == 1
    assert "rooted at 0" in err


def test_lp_bad_json_reports_line(petersen_file, tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"root": 0,\n  broken\n}')
    code, _, err = run(capsys, "lp", "--graph", petersen_file,
                       "--strategies", str(bad))
    assert code == 1
    assert "line 2" in err


# -- tree-pi --------------------------------------------------------------------

def test_tree_pi_specific_root(tmp_path, capsys):
    tree = tmp_path / "star.txt"
    run(capsys, "family", "--kind", "tree", "--parents=-1,0,0,0",
        "--out", str(tree))
    code, out, _ = run(capsys, "tree-pi", "--graph", str(tree), "--root", "1",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 5
    assert payload["critical_config"] == "2:3,3:1"


def test_tree_pi_all_roots(tmp_path, capsys):
    tree = tmp_path / "binary7.txt"
    run(capsys, "family", "--kind", "tree", "--parents=-1,0,0,1,1,2,2",
        "--out", str(tree))
    code, out, _ = run(capsys, "tree-pi", "--graph", str(tree))
    assert code == 0
    assert "tree pebbling number 18" in out
    assert "max at root 3" in out


def test_tree_pi_rejects_non_tree(petersen_file, capsys):
    code, _, err = run(capsys, "tree-pi", "--graph", petersen_file)
    assert code == 1
    assert "not a tree" in err


# -- verify ---------------------------------------------------------------------

def test_verify_all_pass(monkeypatch, capsys):
    fake = [CheckResult("alpha", True, "fine", 0.01),
            CheckResult("beta", True, "also fine", 0.02)]
    monkeypatch.setattr(verify, "run_checks", lambda level: fake)
    code, out, err = run(capsys, "verify")
    assert code == 0
    assert out.count("PASS") == 2
    assert err == ""


def test_verify_failure_lists_names(monkeypatch, capsys):
    fake = [CheckResult("alpha", True, "fine", 0.01),
            CheckResult("beta", False, "value drifted", 0.02)]
    monkeypatch.setattr(verify, "run_checks", lambda level: fake)
    code, out, err = run(capsys, "verify", "--level", "full")
    assert code == 1
    assert "FAIL" in out
    assert "failed checks: beta" in err


def test_verify_json(monkeypatch, capsys):
    fake = [CheckResult("alpha", True, "fine", 0.5)]
    monkeypatch.setattr(verify, "run_checks", lambda level: fake)
    code, out, _ = run(capsys, "verify", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == [{"name": "alpha", "ok": True, "detail": "fine",
                        "elapsed_ms": 500.0}]


# -- error and usage handling ----------------------------------------------------

def test_missing_graph_file(capsys):
    code, _, err = run(capsys, "pi", "--graph", "/nonexistent/g.txt",
                       "--threads", "1")
    assert code == 1
    assert err.startswith("error:")


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--root", "0", "--config", "0:1"])  # --graph missing
    assert exc.value.code == 2


def test_unknown_verb_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["conquer"])
    assert exc.value.code == 2


def test_bad_thread_env_is_a_clean_error(path4_file, monkeypatch, capsys):
    monkeypatch.setenv("PEBBLING_THREADS", "many")
    code, _, err = run(capsys, "pi", "--graph", path4_file, "--root", "0")
    assert code == 1
    assert "PEBBLING_THREADS" in err


def test_thread_env_sets_default(path4_file, monkeypatch, capsys):
    monkeypatch.setenv("PEBBLING_THREADS", "1")
    code, out, _ = run(capsys, "pi", "--graph", path4_file, "--root", "0",
                       "--json")
    assert code == 0
    assert json.loads(out)["value"] == 8

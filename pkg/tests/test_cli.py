import json
import subprocess
import sys

import pytest

from hurwitz.cache import ResultCache
from hurwitz.cli import main
from hurwitz.dessin import dessin_graph, to_dot
from hurwitz.enumerate import enumerate_strong
from hurwitz.partitions import Partition, heart


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_check(capsys):
    code, js = run_json(capsys, "check", "[2,2,1],[2,3],[2,3]")
    assert code == 0 and js["compatible"] and js["genus"] == 0 and js["degree"] == 5
    assert js["zieve"] == "applicable"
    code, js = run_json(capsys, "check", "[2,2,x]")
    assert code == 2 and "error" in js
    code, js = run_json(capsys, "check", "[2,2],[3]")
    assert code == 2
    code, js = run_json(capsys, "check", "[2,2,1],[5],[5]", "--genus", "0")
    assert code == 1 and not js["compatible"]
    code, js = run_json(capsys, "check", "[2,1],[2,1],[2,1]")
    assert code == 1 and js["genus"] == "-1/2"


def test_check_two_points(capsys):
    # one full cycle above two branch points: chi = 2, the cyclic cover of the sphere
    code, js = run_json(capsys, "check", "[3],[3]")
    assert (code, js["genus"], js["n"]) == (0, 0, 2)


def test_count_examples(capsys):
    code, js = run_json(capsys, "count", "[2,2,2,2,1],[2,7],[2,7]")
    assert code == 0 and js["count"] == 5 and js["mode"] == "weak"
    assert js["strong_count"] == 11 and js["mirror_count"] == 6
    assert js["frobenius_check"] == "pass"
    code, js = run_json(capsys, "count", "[2,1],[2,1],[3]", "--mode", "strong", "--classes")
    assert js["count"] == 1
    assert js["classes"] == [{"monodromy": js["classes"][0]["monodromy"], "aut_order": 1}]
    assert js["tuple_count"] == 6 and js["raw_tuple_count"] == 6 == js["frobenius_count"]


def test_count_errors(capsys):
    assert run(capsys, "count", "[2,,1]")[0] == 2
    assert run(capsys, "count", "[2,1],[2,1],[2,1]")[0] == 1
    assert run(capsys, "count", "[2,1],[2,1],[2,1],[2,1]")[0] == 1


def test_count_pretty_and_timing(capsys):
    code, out = run(capsys, "count", "[2,1],[2,1],[3]", "--pretty", "--timing")
    assert code == 0 and out.startswith("degree") and "elapsed_ms" in out


def test_cache_never_changes_counts(capsys, tmp_path):
    cache = tmp_path / "cache.jsonl"
    suite = ["[2,2,1],[3,2],[3,2]", "[2,2,2,2,1],[2,7],[2,7]", "[2,2,1],[5],[5]",
             "[3,1,1],[3,1,1],[5]", "[2,2,2,1],[3,2,2],[5,2]"]
    for mode in ("weak", "strong"):
        for text in suite:
            code, plain = run_json(capsys, "count", text, "--mode", mode)
            assert code == 0
            first = run_json(capsys, "count", text, "--mode", mode, "--cache", str(cache))[1]
            second = run_json(capsys, "count", text, "--mode", mode, "--cache", str(cache))[1]
            assert plain == first == second
    assert len(ResultCache(cache)) == 2 * len(suite)


def test_cache_env_var_and_stale_entries(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "c.jsonl"
    cache.write_text(json.dumps({"key": "[2,1],[2,1],[3]", "mode": "weak",
                                 "version": "0.0.0+alg0", "result": {"count": 99}}) + "\n"
                     + "not json\n")
    monkeypatch.setenv("HURWITZ_CACHE", str(cache))
    js = run_json(capsys, "count", "[2,1],[2,1],[3]")[1]
    assert js["count"] == 1
    assert len(cache.read_text().splitlines()) == 3


def test_formula(capsys):
    assert run_json(capsys, "formula", "g1h2", "--k", "4")[1]["value"] == 4
    js = run_json(capsys, "formula", "g2h4", "--k", "4")[1]
    assert js["value"] == 10 and js["uncorrected"] == 13
    js = run_json(capsys, "formula", "g0h2", "--k", "4", "--pqr", "3,3,3")[1]
    assert js["value"] == 0 and js["case"] == "EE"
    js = run_json(capsys, "formula", "g1h3", "--k", "4", "--p", "7")[1]
    assert js["value"] == 5 and js["uncorrected"] == 6 and sum(js["claims"].values()) == 6
    assert run(capsys, "formula", "g1h3", "--k", "4")[0] == 1
    assert run(capsys, "formula", "g0h2", "--k", "4", "--pqr", "a,b")[0] == 2
    assert run(capsys, "formula", "nope", "--k", "4")[0] == 2


def test_scan_stdout_and_file(capsys, tmp_path):
    code, out = run(capsys, "scan", "--degree", "4", "--no-timing")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and "report" in lines[-1]
    assert len(lines[-1]["report"]["exceptional"]) == 1
    assert all("elapsed_ms" not in x for x in lines[:-1])
    out_file = tmp_path / "d5.jsonl"
    code, js = run_json(capsys, "scan", "--degree", "5", "--out", str(out_file))
    assert code == 0 and js["exceptional"] == [] and js["prime_degree_holds"]
    assert len(out_file.read_text().splitlines()) == js["total"] == 18
    assert run(capsys, "scan", "--degree", "10")[0] == 1


def test_scan_output_thread_independent(capsys):
    a = run(capsys, "scan", "--degree", "5", "--no-timing", "--threads", "1")[1]
    b = run(capsys, "scan", "--degree", "5", "--no-timing", "--threads", "2")[1]
    assert a == b


def _check_dessin(graph, datum):
    assert sorted((v["valence"] for v in graph["black"]), reverse=True) == list(datum.partitions[0])
    assert sorted((v["valence"] for v in graph["white"]), reverse=True) == list(datum.partitions[1])
    regions = sorted((r["length"] for r in graph["regions"]), reverse=True)
    assert regions == list(datum.partitions[2])
    assert len(graph["edges"]) == datum.degree
    assert sorted(x for v in graph["black"] for x in v["darts"]) == list(range(1, datum.degree + 1))


@pytest.mark.parametrize("k,h,pi,nu", [(1, 0, [3], 1), (2, 2, [5], 1), (4, 4, [9], 10),
                                       (4, 2, [4, 3, 2], 3)])
def test_dessin_export_invariants(capsys, k, h, pi, nu):
    datum = heart(k, h, pi)
    code, js = run_json(capsys, "dessin", str(datum))
    assert code == 0 and js["nu"] == nu == len(js["dessins"])
    for g in js["dessins"]:
        _check_dessin(g, datum)


def test_dessin_files(capsys, tmp_path):
    code, js = run_json(capsys, "dessin", "[2,2,1],[5],[5]", "--emit", "dot",
                        "--out", str(tmp_path))
    assert code == 0 and js["nu"] == 1
    dot = (tmp_path / "dessin_1.dot").read_text()
    assert dot.startswith("graph dessin_1 {") and "->" not in dot
    assert "color=black" in dot and "color=white" in dot
    side = json.loads((tmp_path / "dessin_1.json").read_text())
    assert [r["length"] for r in side["regions"]] == [5]


def test_dessin_invalid(capsys):
    assert run(capsys, "dessin", "[2,2,x]")[0] == 1
    assert run(capsys, "dessin", "[2,1],[2,1],[2,1]")[0] == 1


def test_dessin_graph_direct():
    datum = heart(4, 3, [7, 2])
    for c in enumerate_strong(datum).classes:
        g = dessin_graph(c.representative)
        _check_dessin(g, datum)
        assert to_dot(g).count("--") == datum.degree


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hurwitz", "formula", "g1h2", "--k", "5"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["value"] == 6
    assert Partition([3]) == Partition((3,))

import json

import pytest

from cspqubo.cli import RunConfig, format_table, ingest, main, run, split_windows
from cspqubo.core import EmptySet, LengthMismatch
from cspqubo.sets import BENCHMARK_SETS, EXPECTED, SETTINGS


@pytest.fixture
def set_file(tmp_path):
    def write(set_id):
        p = tmp_path / f"set{set_id}.txt"
        p.write_text("# comment\n\n" + "\n".join(BENCHMARK_SETS[set_id]) + "\n", encoding="utf-8")
        return p

    return write


def test_ingest(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("aaa\naaa\nddd\n")
    inst = ingest(p)
    assert inst.strings == ("aaa", "aaa", "ddd")
    p.write_text("\n")
    with pytest.raises(EmptySet):
        ingest(p)
    p.write_text("ab\nabc\n")
    with pytest.raises(LengthMismatch, match="line 2"):
        ingest(p)


def test_run_exact_set1(set_file):
    out = run(RunConfig(set_file(1), solver="exact"))
    assert out["P"] == "aaa" and out["params"]["A"] == 2


def test_run_sa_set4(set_file):
    out = run(RunConfig(set_file(4), A=4, solver="sa", seed=0))
    assert out["P"] == "abcjkl"
    best = max(out["results"], key=lambda r: r["OR"])
    assert best["string"] == "abcjkl" and best["OR"] == out["MOR"]


def test_run_numeric_set2(set_file):
    out = run(RunConfig(set_file(2), hamiltonian="numeric", A=3, solver="exact"))
    assert out["P"] == "ddd"


@pytest.mark.parametrize("set_id", sorted(BENCHMARK_SETS))
def test_exact_and_decomposed_agree(set_file, set_id):
    A = SETTINGS[set_id][0]
    dec = run(RunConfig(set_file(set_id), A=A, solver="decomposed"))
    assert dec["P"] == EXPECTED[set_id]
    if set_id != 4:
        ex = run(RunConfig(set_file(set_id), A=A, solver="exact"))
        assert ex["P"] == dec["P"] and abs(ex["min_energy"] - dec["min_energy"]) < 1e-9


def test_window_mode(set_file):
    out = run(RunConfig(set_file(4), A=4, solver="exact", window=3))
    assert out["P"] == "abcjkl" and len(out["windows"]) == 2
    with pytest.raises(ValueError):
        run(RunConfig(set_file(4), window=7))


def test_split_windows(sets):
    parts = split_windows(sets[4], 4)
    assert [p.m for p in parts] == [4, 2]
    assert parts[1].strings[0] == "ef"


def test_json_schema_and_table_agree(set_file, capsys):
    path = set_file(3)
    assert main(["run", str(path), "-A", "5", "--output", "json", "--num-reads", "20"]) == 0
    out = json.loads(capsys.readouterr().out)
    for key in ("instance", "advisor", "solver", "params", "results", "MOR", "invalid_count", "min_energy", "P"):
        assert key in out
    assert out["instance"] == {"n": 6, "m": 3}
    assert set(out["params"]) == {"A", "B", "num_reads", "seed"}
    assert main(["run", str(path), "-A", "5", "--num-reads", "20"]) == 0
    table = capsys.readouterr().out
    assert table == format_table(out) + "\n"
    row = table.splitlines()[1].split()
    assert float(row[2]) == out["params"]["A"] and float(row[6]) == out["MOR"]
    for r in out["results"]:
        assert f"{r['string']:<16}{r['N']:>6}{r['OR']!s:>10}" in table


def test_main_errors(tmp_path, capsys):
    assert main(["run", str(tmp_path / "missing.txt")]) == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("ab\nabc\n")
    assert main(["run", str(bad)]) == 2
    big = tmp_path / "big.txt"
    big.write_text("\n".join(BENCHMARK_SETS[4]))
    assert main(["run", str(big), "--solver", "exact"]) == 2
    assert "decomposed" in capsys.readouterr().err


def test_advise_command(set_file, capsys):
    assert main(["advise", str(set_file(1)), "--lambda-source", "paper"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["A_range"] == [1.0, 6] and rep["gamma_suggested"] == 0

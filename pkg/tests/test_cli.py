import json
import re
from pathlib import Path

import pytest

from rxnsum.cli import main

NETWORKS = Path(__file__).resolve().parent.parent / "networks"
GENE = str(NETWORKS / "gene.rn")
QUAL = re.compile(r"EXACT|UP_TO_BOUND")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sum(capsys):
    code, out, _ = run(capsys, "sum", "0->R", "R->R+P", "R->0")
    assert code == 0 and out.strip() == "0 -> P"


def test_sum_json(capsys):
    code, out, _ = run(capsys, "sum", "--json", "0->R", "R->R+P", "R->0")
    data = json.loads(out)
    assert data["schema_version"] == 1 and data["sum"]["product"] == [0, 1]


def test_reduce_gene(capsys):
    code, out, _ = run(capsys, "reduce", GENE, "--eliminate", "G'", "--fast",
                       "G'->G;G'->G'+P", "--cap", "5")
    assert code == 0
    assert "P -> 0" in out and "G -> G + 5P" in out and "G -> G + 6P" not in out
    assert QUAL.search(out)


def test_reduce_json_has_derivations(capsys):
    code, out, _ = run(capsys, "reduce", GENE, "--eliminate", "U", "--fast", "F",
                       "--cap", "3", "--json")
    data = json.loads(out)
    assert data["schema_version"] == 1 and data["truncated"] is True
    assert [g["text"] for g in data["generated"]] == ["G -> G + P", "G -> G + 2P", "G -> G + 3P"]
    assert all("(+)" in g["derivation"] for g in data["generated"])


def test_reduce_not_eliminable(capsys):
    code, _, err = run(capsys, "reduce", GENE, "--eliminate", "G'", "--fast", "G'->G'+P")
    assert code == 1 and "not eliminable" in err


def test_check_eliminable_fail_with_witness(capsys):
    code, out, _ = run(capsys, "check-eliminable", GENE, "--eliminate", "G'", "--fast",
                       "G'->G'+P")
    assert code == 1 and "FALSE_EXACT" in out and "witness" in out and "token graph" in out


def test_check_eliminable_default_fast(capsys):
    code, out, _ = run(capsys, "check-eliminable", GENE, "--eliminate", "G'")
    assert code == 0 and "TRUE_EXACT" in out


def test_closure(capsys):
    code, out, _ = run(capsys, "closure", str(NETWORKS / "reversible_pair.rn"),
                       "--max-summands", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["max_summands"] == 2 and not data["saturated"]
    assert data["qualification"] == "UP_TO_BOUND"
    assert len(data["elements"]) == 7


def test_reach_and_leads_to(capsys):
    path = str(NETWORKS / "single_gene.rn")
    code, out, _ = run(capsys, "reach", path, "--from", "0", "--box", "3")
    assert code == 0 and "16 states" in out and "UP_TO_BOUND" in out
    code, out, _ = run(capsys, "leads-to", path, "--from", "0,2", "--to", "0,3", "--box", "3,3",
                       "--via-closure", "--max-summands", "3")
    assert code == 0 and out.startswith("YES") and "via closure: YES" in out


def test_leads_to_negative(capsys):
    path = str(NETWORKS / "reach_counterexample.rn")
    red = NETWORKS / "reach_counterexample.rn"
    code, out, _ = run(capsys, "leads-to", str(red), "--from", "S1", "--to", "S5", "--box", "6")
    assert code == 0 and "S4 + U -> S5" in out
    code, out, _ = run(capsys, "leads-to", path, "--from", "S5", "--to", "S1", "--box", "2")
    assert code == 1 and "NO_WITHIN_BOX [UP_TO_BOUND]" in out


def test_check_star(capsys):
    code, out, _ = run(capsys, "check-star", str(NETWORKS / "cycle_through_u.rn"), "--eliminate", "U",
                       "--fast", "F")
    assert code == 1 and "FALSE_EXACT" in out


def test_check_reversibility(capsys):
    code, out, _ = run(capsys, "check-reversibility", str(NETWORKS / "two_step_shuttle.rn"),
                       "--eliminate", "U", "--fast", "F", "--json")
    data = json.loads(out)
    assert code == 0 and data["reduced_reversible"] and not data["violations"]
    assert set(data["clauses"]) >= {"i", "ii", "iii-reversible", "iii-weak"}


def test_check_semilinear(capsys, tmp_path):
    s = {"components": [{"base": [0, 0, 0, 0],
                         "periods": [[1, 0, 0, 1], [0, 1, 1, 0], [1, 0, 1, 0], [0, 1, 0, 1]]}]}
    f = tmp_path / "s.json"
    f.write_text(json.dumps(s))
    net = str(NETWORKS / "reversible_pair.rn")
    code, out, _ = run(capsys, "check-semilinear", net, "--set", str(f), "--max-summands", "30",
                       "--coord-cap", "10", "--box", "5")
    assert code == 0 and "closure in set: True" in out
    s["components"][0]["periods"] = s["components"][0]["periods"][:2]
    f.write_text(json.dumps(s))
    code, out, _ = run(capsys, "check-semilinear", net, "--set", str(f))
    assert code == 1 and "outside set" in out


def test_compare_reach(capsys):
    code, out, _ = run(capsys, "compare-reach", str(NETWORKS / "reach_counterexample.rn"),
                       "--eliminate", "U", "--fast", "F", "--box", "6", "--from", "S1")
    assert code == 0 and "DIFFERENT_UP_TO_BOUND" in out and "S1 => S5" in out


def test_simulate_csv_and_plot(capsys, tmp_path):
    png = tmp_path / "traj.png"
    code, out, err = run(capsys, "simulate", str(NETWORKS / "single_gene.rn"), "--x0", "0,0",
                         "--max-jumps", "20", "--seed", "3", "--plot", str(png))
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "time,reaction,R,P" and len(lines) == 22
    assert "stop=max_jumps" in err
    assert png.exists() and png.stat().st_size > 0
    code2, out2, _ = run(capsys, "simulate", str(NETWORKS / "single_gene.rn"), "--x0", "0,0",
                         "--max-jumps", "20", "--seed", "3")
    assert out2 == out


def test_simulate_json(capsys):
    code, out, _ = run(capsys, "simulate", str(NETWORKS / "single_gene.rn"), "--x0", "R",
                       "--max-jumps", "5", "--json")
    data = json.loads(out)
    assert data["schema_version"] == 1 and data["trajectory"]["x0"] == [1, 0]


@pytest.mark.parametrize("argv", [
    ["reduce", "missing.rn", "--eliminate", "X"],
    ["reduce", GENE],
    ["reduce", GENE, "--eliminate", "Z"],
    ["reduce", GENE, "--eliminate", "G'", "--fast", "P->0"],
    ["reach", GENE, "--from", "0"],
    ["reach", GENE, "--from", "1,2", "--box", "a"],
    ["sum", "A->"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_parse_error_position(capsys, tmp_path):
    f = tmp_path / "bad.rn"
    f.write_text("A -> B\nA + -> C\n")
    code, _, err = run(capsys, "closure", str(f))
    assert code == 2 and "line 2" in err


def test_duplicate_warning(capsys, tmp_path):
    f = tmp_path / "dup.rn"
    f.write_text("A -> B\nA -> B\n")
    code, _, err = run(capsys, "closure", str(f), "--max-summands", "1")
    assert code == 0 and "warning" in err and "duplicate" in err


@pytest.mark.parametrize("argv", [
    ["check-eliminable", GENE, "--eliminate", "G'"],
    ["reduce", GENE, "--eliminate", "G'", "--cap", "2"],
    ["closure", GENE, "--max-summands", "1"],
    ["check-star", GENE, "--eliminate", "G'"],
    ["check-reversibility", GENE, "--eliminate", "G'"],
    ["leads-to", GENE, "--from", "G", "--to", "G + P", "--box", "2"],
])
def test_verdicts_are_qualified(capsys, argv):
    _, out, _ = run(capsys, *argv)
    assert QUAL.search(out)

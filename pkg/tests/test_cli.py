import csv
import io
import json

import pytest

from locdom.cli import CSV_COLUMNS, main, parse_sweep_spec
from locdom.families import star
from locdom.io import to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def values(report):
    return {k: v["value"] for k, v in report["results"][0]["values"].items()}


def test_compute_cycle(capsys):
    code, out = run(capsys, "compute", "--family", "cycle=7", "--targets", "all", "--no-timing")
    assert code == 0
    report = json.loads(out)
    assert values(report) == {"gamma_ld": 3, "lower_dld": 3, "upper_dld": 4}
    assert all(v["citation"] for v in report["results"][0]["values"].values())


def test_compute_complete_and_star(capsys):
    code, out = run(capsys, "compute", "--family", "complete=5", "--targets", "upper_dld")
    assert code == 0 and values(json.loads(out)) == {"upper_dld": 3}
    code, out = run(capsys, "compute", "--graph6", to_graph6(star(7)), "--no-timing")
    assert code == 0 and set(values(json.loads(out)).values()) == {6}


def test_compute_is_deterministic(capsys):
    a = run(capsys, "compute", "--family", "petersen", "--targets", "gamma_ld,lower_dld", "--no-timing")
    b = run(capsys, "compute", "--family", "petersen", "--targets", "gamma_ld,lower_dld", "--no-timing")
    assert a == b


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "compute", "--family", "complete=8", "--targets", "upper_dld")[0] == 3
    assert run(capsys, "compute", "--family", "complete=8", "--targets", "upper_dld", "--bounds-only")[0] == 0
    assert run(capsys, "compute", "--graph6", "!!")[0] == 2
    assert run(capsys, "compute")[0] == 2
    assert run(capsys, "compute", "--family", "nosuch=3")[0] == 2
    assert run(capsys, "construct", "twin-free", "--family", "cycle=4")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_graph6_corpus_file(capsys, tmp_path):
    f = tmp_path / "small.g6"
    f.write_text("A_\nBw\n")
    code, out = run(capsys, "compute", "--graph6", str(f), "--targets", "gamma_ld", "--no-timing")
    assert code == 0
    assert [r["values"]["gamma_ld"]["value"] for r in json.loads(out)["results"]] == [1, 2]


def test_construct_and_verify(capsys, tmp_path):
    code, out = run(capsys, "construct", "twin-free", "--family", "petersen", "--no-timing")
    assert code == 0
    report = json.loads(out)
    assert report["verified"] and report["size"] <= 5
    path = tmp_path / "cert.json"
    path.write_text(out)
    assert run(capsys, "verify", str(path), "--family", "petersen")[0] == 0
    report["certificate"]["codes"][next(iter(report["certificate"]["codes"]))] = 0
    path.write_text(json.dumps(report))
    code, out = run(capsys, "verify", str(path), "--family", "petersen")
    assert code == 1 and not json.loads(out)["valid"]


@pytest.mark.parametrize("name,extra", [
    ("matching", ["--family", "path=6"]),
    ("clique-subset", ["--n", "7"]),
    ("transitive", ["--n", "5"]),
    ("tree", ["--family", "path=7"]),
    ("regular-random", ["--family", "random_regular=16,100,2", "--seed", "2"]),
    ("regular-matching", ["--family", "petersen"]),
    ("worm", ["--family", "cycle=5"]),
    ("source-forcing", ["--family", "path=5"]),
    ("worst-upper", ["--family", "cycle=5"]),
    ("undirected-orient", ["--family", "path=5"]),
])
def test_every_construction(capsys, name, extra):
    code, out = run(capsys, "construct", name, *extra, "--no-timing")
    assert code == 0
    assert json.loads(out)["verified"]


def test_verify_paper(capsys):
    code, out = run(capsys, "verify-paper", "trees", "--max-n", "7", "--no-timing")
    assert code == 0
    claims = json.loads(out)["claims"]
    assert claims and all(c["passed"] for c in claims)
    code, out = run(capsys, "verify-paper", "c4free", "--max-n", "5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["passed"] == "True"
    assert run(capsys, "verify-paper", "nonsense")[0] == 2


def test_sweep_csv(capsys):
    code, out = run(capsys, "sweep", "--family", "path=2..15", "--targets", "gamma_ld", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == CSV_COLUMNS
    assert [int(r["gamma_ld"]) for r in rows] == [-(-2 * n // 5) for n in range(2, 16)]


def test_sweep_marks_cap(capsys):
    code, out = run(capsys, "sweep", "--family", "h_graph=2..3,2", "--targets", "gamma_ld,upper_dld", "--no-timing")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert [r["status"]["upper_dld"] for r in rows] == ["exact", "cap_exceeded"]
    assert rows[0]["ratio"] == 1.0


def test_sweep_spec_parsing():
    assert parse_sweep_spec("h_graph=2..3,2") == [("h_graph", (2, 2)), ("h_graph", (3, 2))]


def test_extremes(capsys):
    code, out = run(capsys, "extremes", "--family", "star=5", "--no-timing")
    r = json.loads(out)["results"][0]
    assert code == 0
    assert r["lower_dld"]["value"] == r["upper_dld"]["value"] == 4
    assert r["lower_is_n_minus_1"] == {"predicted": True, "actual": True}

"""Command-line surface: outputs, files, exit codes, determinism."""
from __future__ import annotations

import json

import pytest

import eccbounds as eb
from eccbounds.cli import main


@pytest.fixture()
def petersen_file(tmp_path):
    p = tmp_path / "petersen.el"
    p.write_text(eb.emit_edge_list(eb.petersen_graph()))
    return p


@pytest.fixture()
def k33_file(tmp_path):
    p = tmp_path / "k33.el"
    p.write_text(eb.emit_edge_list(eb.complete_bipartite(3, 3)))
    return p


# ---------------------------------------------------------------------------
# compute

def test_compute_petersen(petersen_file, capsys):
    assert main(["compute", str(petersen_file)]) == 0
    out = capsys.readouterr().out
    assert "n=10" in out and "girth=5" in out and "avec=2" in out


def test_compute_json(petersen_file, capsys):
    assert main(["compute", str(petersen_file), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["avec"] == "2" and payload["girth"] == 5
    assert payload["minDegree"] == payload["maxDegree"] == 3


def test_compute_p5_fraction(tmp_path, capsys):
    p = tmp_path / "p5.el"
    p.write_text(eb.emit_edge_list(eb.path_graph(5)))
    assert main(["compute", str(p)]) == 0
    assert "avec=16/5 (3.200000)" in capsys.readouterr().out


def test_compute_disconnected_exits_2(tmp_path, capsys):
    p = tmp_path / "disc.el"
    p.write_text("4 2\n0 1\n2 3\n")
    assert main(["compute", str(p)]) == 2
    assert "disconnected" in capsys.readouterr().err


def test_compute_missing_file_exits_2(capsys):
    assert main(["compute", "/nonexistent/graph.el"]) == 2


def test_compute_malformed_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.el"
    p.write_text("3 1\n0 0\n")
    assert main(["compute", str(p)]) == 2
    assert "line 2" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# bound

def test_bound_petersen(petersen_file, capsys):
    assert main(["bound", str(petersen_file)]) == 0
    out = capsys.readouterr().out
    assert "ThmGirthOdd" in out and "37/4" in out and "satisfied" in out


def test_bound_k33(k33_file, capsys):
    assert main(["bound", str(k33_file)]) == 0
    lines = {ln.split()[0]: ln for ln in capsys.readouterr().out.splitlines()}
    assert lines["ThmGirthEven"].split()[1] == "7"
    assert "satisfied" in lines["ThmGirthEven"]
    assert lines["Eq2"].split()[1] == "8"


def test_bound_only_filter(petersen_file, capsys):
    assert main(["bound", str(petersen_file), "--only", "eq1"]) == 0
    out = capsys.readouterr().out
    assert "Eq1" in out and "ThmGirthOdd" not in out


def test_bound_only_unknown_exits_1(petersen_file, capsys):
    assert main(["bound", str(petersen_file), "--only", "EqX"]) == 1


def test_bound_json(k33_file, capsys):
    assert main(["bound", str(k33_file), "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    by_id = {r["bound"]: r for r in rows}
    assert by_id["ThmGirthEven"]["value"] == "7"
    assert by_id["ThmGirthEven"]["satisfied"] is True
    assert by_id["Eq2"]["value"] == "8"


# ---------------------------------------------------------------------------
# certify

def test_certify_petersen(petersen_file, tmp_path, capsys):
    out_dir = tmp_path / "certs"
    assert main(["certify", str(petersen_file), "--out", str(out_dir)]) == 0
    cert_path = out_dir / "petersen.cert.json"
    payload = json.loads(cert_path.read_text())
    assert payload["allStepsHold"] is True and payload["variant"] == "odd"
    assert "allStepsHold=True" in capsys.readouterr().out


def test_certify_even_variant(k33_file, tmp_path):
    out_dir = tmp_path / "certs"
    assert main(["certify", str(k33_file), "--out", str(out_dir)]) == 0
    payload = json.loads((out_dir / "k33.cert.json").read_text())
    assert payload["variant"] == "even"


def test_certify_maxdeg_flag(k33_file, tmp_path):
    out_dir = tmp_path / "certs"
    assert main(["certify", str(k33_file), "--maxdeg", "--out", str(out_dir)]) == 0
    payload = json.loads((out_dir / "k33.cert.json").read_text())
    assert payload["boundId"] == "ThmGirthMaxDegEven"


def test_certify_low_degree_exits_3(tmp_path, capsys):
    p = tmp_path / "c6.el"
    p.write_text(eb.emit_edge_list(eb.cycle_graph(6)))
    assert main(["certify", str(p), "--out", str(tmp_path)]) == 3


def test_certify_acyclic_exits_3(tmp_path, capsys):
    p = tmp_path / "p4.el"
    p.write_text(eb.emit_edge_list(eb.path_graph(4)))
    assert main(["certify", str(p), "--out", str(tmp_path)]) == 3


def test_certify_deterministic_bytes(petersen_file, tmp_path):
    d1, d2 = tmp_path / "a", tmp_path / "b"
    assert main(["certify", str(petersen_file), "--out", str(d1)]) == 0
    assert main(["certify", str(petersen_file), "--out", str(d2)]) == 0
    assert (d1 / "petersen.cert.json").read_bytes() == (d2 / "petersen.cert.json").read_bytes()


# ---------------------------------------------------------------------------
# generate / chain

def test_generate_writes_parseable_file(tmp_path, capsys):
    assert main(["generate", "--n", "24", "--delta", "3", "--g", "5",
                 "--seed", "5", "--out", str(tmp_path)]) == 0
    path = tmp_path / "gen_n24_d3_g5_s5.el"
    g = eb.parse_edge_list(path.read_text())
    assert g.min_degree() >= 3 and eb.girth(g) >= 5


def test_generate_impossible_records_failure(capsys):
    assert main(["generate", "--n", "4", "--delta", "3", "--g", "4"]) == 0
    assert "generation failed" in capsys.readouterr().out


def test_generate_impossible_strict_exits_4(capsys):
    assert main(["generate", "--n", "4", "--delta", "3", "--g", "4", "--strict"]) == 4


def test_chain_command(tmp_path, capsys):
    assert main(["chain", "--delta", "3", "--g", "5", "--k", "3",
                 "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "n=30" in out and "diameter=10" in out
    g = eb.parse_edge_list((tmp_path / "chain_d3_g5_k3.el").read_text())
    assert g.n == 30


def test_chain_with_report(tmp_path, capsys):
    assert main(["chain", "--delta", "3", "--g", "6", "--k", "2",
                 "--out", str(tmp_path), "--report"]) == 0
    csv_text = (tmp_path / "sharpness_d3_g6.csv").read_text()
    assert csv_text.splitlines()[0].startswith("k,n,avec")


def test_chain_uncataloged_exits_3(capsys):
    assert main(["chain", "--delta", "4", "--g", "5", "--k", "2"]) == 3


# ---------------------------------------------------------------------------
# batch

def test_batch_generator_spec(tmp_path, capsys):
    assert main(["batch", "--delta", "3", "--g", "5", "--n", "40",
                 "--count", "5", "--seed", "7", "--out", str(tmp_path)]) == 0
    lines = (tmp_path / "report.csv").read_text().strip().splitlines()
    assert len(lines) == 6  # header + 5 rows
    header = lines[0].split(",")
    assert "avec" in header and "ThmGirthOdd" in header and "certificateOk" in header
    assert all(row.split(",")[1] == "ok" for row in lines[1:])


def test_batch_deterministic_bytes(tmp_path):
    d1, d2 = tmp_path / "r1", tmp_path / "r2"
    args = ["batch", "--delta", "3", "--g", "4", "--n", "30", "--count", "4", "--seed", "3"]
    assert main(args + ["--out", str(d1)]) == 0
    assert main(args + ["--out", str(d2)]) == 0
    assert (d1 / "report.csv").read_bytes() == (d2 / "report.csv").read_bytes()


def test_batch_directory_mode(tmp_path, capsys):
    src = tmp_path / "graphs"
    src.mkdir()
    (src / "petersen.el").write_text(eb.emit_edge_list(eb.petersen_graph()))
    (src / "k33.el").write_text(eb.emit_edge_list(eb.complete_bipartite(3, 3)))
    assert main(["batch", "--dir", str(src), "--out", str(tmp_path)]) == 0
    lines = (tmp_path / "report.csv").read_text().strip().splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("k33,") and lines[2].startswith("petersen,")


def test_batch_generation_failures_strict(tmp_path, capsys):
    args = ["batch", "--delta", "3", "--g", "4", "--n", "4", "--count", "2",
            "--seed", "1", "--out", str(tmp_path)]
    assert main(args) == 0                      # failures recorded, not fatal
    assert main(args + ["--strict"]) == 4


def test_batch_thread_env_keeps_row_order(tmp_path, monkeypatch):
    d1, d2 = tmp_path / "seq", tmp_path / "par"
    args = ["batch", "--delta", "3", "--g", "5", "--n", "30", "--count", "6", "--seed", "11"]
    assert main(args + ["--out", str(d1)]) == 0
    monkeypatch.setenv("ECCB_THREADS", "4")
    assert main(args + ["--out", str(d2)]) == 0
    assert (d1 / "report.csv").read_bytes() == (d2 / "report.csv").read_bytes()


def test_compute_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("3 2\n0 1\n1 2\n"))
    assert main(["compute", "-"]) == 0
    assert "n=3" in capsys.readouterr().out


def test_batch_missing_spec_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["batch"])
    assert exc.value.code == 1


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1

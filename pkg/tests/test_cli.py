"""End-to-end CLI behaviour: subcommands, exit codes, file outputs."""

import json

import pytest

from chordpack.cli import main

G2_2 = "H?~vfb~"  # K_{4,4,1}
G1_10 = "I?B~vrw}?"  # K_{5,5}
K4 = "C~"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_packs_k4(self, capsys):
        code, out, _ = run(capsys, "solve", "-k", "1", K4)
        assert code == 0
        obj = json.loads(out)
        assert obj["status"] == "packed" and len(obj["cycles"]) == 1

    def test_none_still_exit_zero(self, capsys):
        code, out, _ = run(capsys, "solve", "-k", "2", G1_10)
        assert code == 0 and json.loads(out)["status"] == "none"

    def test_budget_exit_two(self, capsys):
        code, _, _ = run(capsys, "solve", "-k", "2", "--budget", "2", G1_10)
        assert code == 2

    def test_bad_graph6_exit_three(self, capsys):
        code, _, err = run(capsys, "solve", "-k", "1", "C")
        assert code == 3 and "error[" in err

    def test_edges_file(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
        code, out, _ = run(capsys, "solve", "-k", "1", "--edges", str(f))
        assert code == 0 and json.loads(out)["status"] == "packed"


class TestVerify:
    def test_extremal_g2(self, capsys):
        code, out, _ = run(capsys, "verify", "-k", "2", G2_2)
        assert code == 0
        assert json.loads(out)["verdict"] == "EXTREMAL_G2"

    def test_json_file_output(self, capsys, tmp_path):
        f = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "-k", "2", "--json", str(f), G1_10)
        assert code == 0 and out == ""
        assert json.loads(f.read_text())["verdict"] == "EXTREMAL_G1"


class TestEnumerate:
    def test_n5_k1_with_artifacts(self, capsys, tmp_path):
        csv_path = tmp_path / "census.csv"
        png_path = tmp_path / "census.png"
        code, out, _ = run(
            capsys,
            "enumerate", "-n", "5", "-k", "1",
            "--csv", str(csv_path), "--plot", str(png_path),
        )
        obj = json.loads(out)
        assert obj["graphs_seen"] == 34
        rows = csv_path.read_text().splitlines()
        assert rows[0] == "metric,value"
        assert "graphs_seen,34" in rows
        assert png_path.stat().st_size > 0


class TestStream:
    def test_stdin_stream(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(f"{G1_10}\n{G2_2}\n"))
        code, out, _ = run(capsys, "stream", "-k", "2")
        obj = json.loads(out)
        assert code == 0
        assert obj["extremal_g1"] == 1 and obj["extremal_g2"] == 1


class TestGenExtremal:
    def test_g1(self, capsys):
        code, out, _ = run(capsys, "gen-extremal", "g1", "10", "2")
        assert code == 0 and out.strip() == G1_10

    def test_g2(self, capsys):
        code, out, _ = run(capsys, "gen-extremal", "g2", "2")
        assert code == 0 and out.strip() == G2_2

    def test_wrong_arity(self, capsys):
        code, _, err = run(capsys, "gen-extremal", "g1", "10")
        assert code == 3


class TestAudit:
    def test_all_lemmas_clean_on_g2(self, capsys):
        code, out, _ = run(capsys, "audit", "-k", "2", "--strict", G2_2)
        obj = json.loads(out)
        assert code == 0
        assert len(obj["audits"]) == 7
        assert all(a["violations"] == [] for a in obj["audits"])

    def test_single_lemma(self, capsys):
        code, out, _ = run(capsys, "audit", "-k", "2", "--lemma", "RCEDGES", G2_2)
        obj = json.loads(out)
        assert code == 0 and [a["lemma"] for a in obj["audits"]] == ["RCEDGES"]


class TestCorollaries:
    def test_k7_mixed(self, capsys):
        k7 = "F~~~w"
        code, out, _ = run(capsys, "corollaries", "-k", "1", "-r", "1", k7)
        obj = json.loads(out)
        assert code == 0 and obj["mixed"]["holds"] is True

import io

from rdnum import encode_graph6, petersen_graph, read_coloring
from rdnum.cli import main

PETERSEN = encode_graph6(petersen_graph())


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_bounds_only(self, capsys):
        code, out, _ = run(capsys, "analyze", PETERSEN)
        assert code == 0
        assert "n = 10" in out and "m = 15" in out
        assert "lambda_plus = 3" in out
        assert "rd_lower = 3" in out and "rd_upper = 4" in out

    def test_exact_tree(self, capsys):
        code, out, _ = run(capsys, "analyze", "Ch", "--exact")
        assert code == 0
        assert "rd = 1 (rule: tree)" in out

    def test_exact_search_with_witness(self, capsys, tmp_path):
        prefix = str(tmp_path / "w")
        code, out, _ = run(
            capsys, "analyze", PETERSEN, "--exact", "--witness", prefix
        )
        assert code == 0
        assert "rd = 4 (search" in out
        coloring = read_coloring((tmp_path / "w.coloring").read_text())
        assert coloring.graph.n == 10
        certs = (tmp_path / "w.certificates").read_text().splitlines()
        assert len(certs) == 45

    def test_edge_list_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("4 3\n0 1\n1 2\n2 3\n"))
        code, out, _ = run(capsys, "analyze", "-", "--exact")
        assert code == 0 and "rd = 1" in out

    def test_disconnected_rejected(self, capsys):
        code, out, err = run(capsys, "analyze", "C?")
        assert code == 2
        assert "connected" in (out + err)

    def test_malformed_rejected(self, capsys):
        code, _, err = run(capsys, "analyze", "~zz")
        assert code == 2 and "error:" in err

    def test_budget_exit_code(self, capsys):
        code, _, err = run(
            capsys, "analyze", PETERSEN, "--exact", "--budget", "10"
        )
        assert code == 3
        assert "budget" in err

    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("RD_BUDGET", "10")
        code, _, _ = run(capsys, "analyze", PETERSEN, "--exact")
        assert code == 3

    def test_size_cap_is_parameter_error(self, capsys):
        code, _, err = run(
            capsys, "analyze", PETERSEN, "--exact", "--max-edges", "5"
        )
        assert code == 2 and "error:" in err


class TestColorVerify:
    def test_round_trip(self, capsys, tmp_path):
        out_file = str(tmp_path / "c.txt")
        code, out, _ = run(capsys, "color", PETERSEN, "--out", out_file)
        assert code == 0
        assert "colors = 4" in out
        code, out, _ = run(capsys, "verify", out_file)
        assert code == 0
        assert out.strip().endswith("OK pairs=45 colors=4")

    def test_verify_failure(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "sys.stdin", io.StringIO("4 4 1\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n")
        )
        code, out, _ = run(capsys, "verify", "-")
        assert code == 1
        assert out.startswith("FAIL pair")


class TestConstruct:
    def test_extremal(self, capsys, tmp_path):
        prefix = str(tmp_path / "ex")
        code, out, _ = run(capsys, "construct", "extremal", "7", "3",
                           "--out", prefix)
        assert code == 0
        assert "m = 12" in out and "colors = 3" in out
        assert (tmp_path / "ex.g6").exists()
        assert (tmp_path / "ex.coloring").exists()

    def test_extremal_rejects_even_order(self, capsys):
        code, _, err = run(capsys, "construct", "extremal", "6", "2")
        assert code == 2 and "error:" in err

    def test_extremal_needs_k(self, capsys):
        code, _, err = run(capsys, "construct", "extremal", "7")
        assert code == 2

    def test_sharp_split(self, capsys):
        code, out, _ = run(capsys, "construct", "ng-sharp", "6")
        assert code == 0
        assert "value = 4" in out and "complement_value = 3" in out
        assert "sum = 7" in out


class TestSurvey:
    def test_census(self, capsys):
        code, out, _ = run(capsys, "survey", "--n", "4")
        assert code == 0
        assert out.startswith("SURVEY graphs=6\n")
        assert "RESULT ok" in out

    def test_rules_filter_and_alias(self, capsys):
        code, out, _ = run(capsys, "survey", "--n", "4", "--rules",
                           "ng,lemma_chain")
        assert code == 0
        assert "RULE ng_sum_lower" in out and "RULE lemma_chain" in out
        assert "RULE tree_rd_one" not in out

    def test_unknown_rule(self, capsys):
        code, _, err = run(capsys, "survey", "--n", "4", "--rules", "nope")
        assert code == 2 and "unknown" in err

    def test_input_file(self, capsys, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text(">>graph6<<\nCh\nC~\n")
        code, out, _ = run(capsys, "survey", "--in", str(path),
                           "--rules", "lemma_chain")
        assert code == 0
        assert "SURVEY graphs=2" in out

    def test_needs_exactly_one_source(self, capsys):
        code, _, _ = run(capsys, "survey")
        assert code == 2
        code, _, _ = run(capsys, "survey", "--n", "4", "--in", "x.g6")
        assert code == 2

    def test_report_written(self, capsys, tmp_path):
        out_file = tmp_path / "report.txt"
        code, out, _ = run(capsys, "survey", "--n", "4", "--out",
                           str(out_file), "--rules", "lemma_chain")
        assert code == 0
        assert out_file.read_text() == out

import json

from imbalanceset import Digraph
from imbalanceset.cli import main
from imbalanceset.formats import emit_dot, parse, parse_dot


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDecide:
    def test_yes_with_order(self, capsys):
        code, out, _ = run(capsys, "decide", "4,2,-2")
        assert code == 0
        assert "yes" in out and "13" in out

    def test_no_with_refusal(self, capsys):
        code, out, _ = run(capsys, "decide", "6,-10")
        assert code == 2
        assert "no-odd-equal-sum" in out

    def test_zero_alone(self, capsys):
        code, out, _ = run(capsys, "decide", "0")
        assert code == 0 and "order 1" in out

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "decide", "4,2,-2", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc == {
            "set": [4, 2, -2],
            "verdict": "yes",
            "refusal": None,
            "order": 13,
        }

    def test_budget_adds_brute_force_cross_check(self, capsys):
        code, out, _ = run(capsys, "decide", "6,-10", "--json", "--budget", "15")
        assert code == 2
        assert json.loads(out)["brute_zero_sum_min_odd"] is None

    def test_parse_failure(self, capsys):
        code, _, err = run(capsys, "decide", "4,,2")
        assert code == 1 and "cannot parse" in err

    def test_duplicates_rejected(self, capsys):
        code, _, err = run(capsys, "decide", "4,4,-2")
        assert code == 1 and "duplicates" in err

    def test_resource_cap(self, capsys):
        code, _, err = run(capsys, "decide", "1000000,-2", "--max-n", "1000")
        assert code == 3 and "resource cap" in err


class TestRealize:
    def test_writes_dot_file(self, tmp_path, capsys):
        out_path = tmp_path / "pair.dot"
        code, out, _ = run(capsys, "realize", "1,-1", "--out", str(out_path))
        assert code == 0
        assert "order 2" in out
        g = parse_dot(out_path.read_text())
        assert g.n == 2 and g.arc_count == 1

    def test_json_payload_to_stdout(self, capsys):
        code, out, err = run(capsys, "realize", "4,2,-2", "--format", "json")
        assert code == 0
        doc = json.loads(out.splitlines()[0])
        assert doc["n"] == 13
        assert doc["imbalance_set"] == [4, 2, -2]
        assert "order 13" in err

    def test_unrealizable_exits_two(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "realize", "2,-2", "--out", str(tmp_path / "never.dot")
        )
        assert code == 2 and "no-odd-equal-sum" in err
        assert not (tmp_path / "never.dot").exists()


class TestCheck:
    def test_landau_pass(self, capsys):
        code, out, _ = run(capsys, "check", "0,1,2", "--mode", "landau")
        assert code == 0 and out.strip() == "pass"

    def test_tournament_pass(self, capsys):
        code, out, _ = run(capsys, "check", "2,0,-2", "--mode", "tournament")
        assert code == 0

    def test_tournament_parity_failure(self, capsys):
        code, out, _ = run(capsys, "check", "6,-10", "--mode", "tournament")
        assert code == 2 and "parity" in out

    def test_prefix_failure_reports_index(self, capsys):
        code, out, _ = run(capsys, "check", "0,0,2", "--mode", "landau")
        assert code == 2 and "index 2" in out

    def test_unsorted_input_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "check", "2,0,1", "--mode", "landau")
        assert code == 1 and "sort" in err

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "check", "1,1,1", "--mode", "landau", "--json")
        assert code == 0
        assert json.loads(out) == {"mode": "landau", "ok": True, "failure": None}


class TestVerify:
    def test_tournament_with_stated_set(self, tmp_path, capsys):
        path = tmp_path / "t.dot"
        run(capsys, "realize", "4,2,-2", "--out", str(path))
        code, out, _ = run(capsys, "verify", str(path), "4,2,-2")
        assert code == 0 and "ok" in out

    def test_cyclic_triangle_is_zero_set(self, tmp_path, capsys):
        path = tmp_path / "c3.dot"
        path.write_text(emit_dot(Digraph(3, [(0, 1), (1, 2), (2, 0)])))
        code, out, _ = run(capsys, "verify", str(path), "0")
        assert code == 0

    def test_missing_pair_diagnostic(self, tmp_path, capsys):
        path = tmp_path / "c4.dot"
        path.write_text(emit_dot(Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])))
        code, out, _ = run(capsys, "verify", str(path), "0")
        assert code == 2 and "missing pair" in out

    def test_doubled_pair_diagnostic(self, tmp_path, capsys):
        path = tmp_path / "bad.dot"
        path.write_text("digraph {\n  0 -> 1;\n  1 -> 0;\n}\n")
        code, out, _ = run(capsys, "verify", str(path), "0")
        assert code == 2 and "doubled pair" in out

    def test_imbalance_mismatch_diagnostic(self, tmp_path, capsys):
        path = tmp_path / "c3.dot"
        path.write_text(emit_dot(Digraph(3, [(0, 1), (1, 2), (2, 0)])))
        code, out, _ = run(capsys, "verify", str(path), "1,-1")
        assert code == 2 and "mismatch" in out

    def test_unreadable_file(self, capsys):
        code, _, err = run(capsys, "verify", "/nonexistent/x.dot", "0")
        assert code == 1 and "cannot read" in err


class TestBound:
    def test_values(self, capsys):
        assert run(capsys, "bound", "3,-1")[1].strip() == "4"
        assert run(capsys, "bound", "2,0,-2")[1].strip() == "7"
        assert run(capsys, "bound", "4,2,-2")[1].strip() == "19"

    def test_unrealizable_exits_two(self, capsys):
        code, _, err = run(capsys, "bound", "2,-2")
        assert code == 2

    def test_budget_searches_exact_minimum(self, capsys):
        code, out, _ = run(capsys, "bound", "4,2,-2", "--json", "--budget", "13")
        assert code == 0
        assert json.loads(out)["exact_min_order"] == 5


class TestEqualSum:
    def test_witness(self, capsys):
        code, out, _ = run(capsys, "equal-sum", "3", "2", "--k", "3")
        assert code == 0
        assert "xs=[3, 3]" in out and "ys=[2, 2, 2]" in out

    def test_shared_member(self, capsys):
        code, out, _ = run(capsys, "equal-sum", "2", "2", "--k", "1")
        assert code == 0 and "sum=2" in out

    def test_none(self, capsys):
        code, out, _ = run(capsys, "equal-sum", "3", "2", "--k", "1")
        assert code == 2 and out.strip() == "none"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "equal-sum", "3", "2", "--k", "3", "--json")
        assert json.loads(out)["witness"]["common_sum"] == 6


class TestUsage:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1

    def test_missing_argument(self, capsys):
        assert run(capsys, "decide")[0] == 1

    def test_decide_and_realize_always_agree(self, tmp_path, capsys):
        for literal in ("0", "1,-1", "4,2,-2", "6,-10", "2,-2", "4,-6", "1,2"):
            decide_code, _, _ = run(capsys, "decide", literal)
            realize_code, _, _ = run(
                capsys, "realize", literal, "--out", str(tmp_path / "g.dot")
            )
            assert decide_code == realize_code, literal

    def test_realize_emits_parseable_output_in_all_formats(self, tmp_path, capsys):
        for kind in ("dot", "edgelist", "json"):
            path = tmp_path / f"g.{kind}"
            code, _, _ = run(
                capsys, "realize", "1,-1", "--format", kind, "--out", str(path)
            )
            assert code == 0
            assert parse(path.read_text(), kind).n == 2

"""End-to-end command-line behavior and output stability."""

import json

import pytest

from starres.cli import main
from starres.resolution import dual_graph, graph_from_json
from starres.lgroup import Parameters, normal_form


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestISeries:
    def test_17_10(self, capsys):
        code, out, _ = run(capsys, "iseries", "17", "10")
        assert code == 0
        assert json.loads(out) == {
            "r": 17,
            "a": 10,
            "expansion": [2, 4, 2, 2],
            "series": [17, 10, 3, 2, 1, 0],
            "set": [0, 1, 2, 3, 10, 17],
        }

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "iseries", "5", "3")
        _, second, _ = run(capsys, "iseries", "5", "3")
        assert first == second


class TestGraph:
    def test_dot(self, capsys):
        code, out, _ = run(
            capsys, "graph", "--p", "3,5,5", "--x", "2,2,3", "--c", "0", "--format", "dot"
        )
        assert code == 0
        assert out.startswith("graph dualgraph {")
        assert 'center [label="-3"]' in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "graph", "--p", "3,5,5", "--x", "2,2,3")
        assert code == 0
        payload = json.loads(out)
        params = Parameters([3, 5, 5])
        expected = dual_graph(params, normal_form(params, [2, 2, 3], 0))
        assert graph_from_json(payload["graph"]) == expected
        assert payload["minimal"] is True

    def test_text(self, capsys):
        code, out, _ = run(capsys, "graph", "--p", "2,3,3", "--format", "text", "--x", "1,1,1")
        assert code == 0 and "star" in out


class TestSpecials:
    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "specials", "--p", "3,5,5", "--x", "2,2,3")
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"graph", "minimal", "specials"}
        labels = [entry["label"] for entry in payload["specials"]]
        assert labels == ["R", "S(c)", "S(x1)", "S(3x2)", "S(x2)", "S(2x3)", "S(x3)"]


class TestQuiver:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "quiver", "--p", "3,5,5", "--x", "2,2,3")
        assert code == 0
        payload = json.loads(out)
        assert payload["degree_zero"] == {"q": [2, 3, 3], "mu": [[1, 0], [0, 1], [1, 1]]}
        assert len(payload["vertices"]) == 7

    def test_degenerate_falls_back(self, capsys):
        code, out, _ = run(capsys, "quiver", "--p", "2,3", "--x", "0,0", "--c", "2")
        assert code == 0
        assert json.loads(out)["degenerate"] is True

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "quiver", "--p", "2,3,3", "--x", "1,1,1", "--format", "dot")
        assert code == 0 and "digraph" in out


class TestWahl:
    def test_report(self, capsys):
        code, out, _ = run(capsys, "wahl", "--p", "2,3,3", "--max-degree", "6")
        assert code == 0
        payload = json.loads(out)
        assert payload["minors_zero"] and payload["dims_ok"]
        assert payload["degrees"] == {"v": 1, "u1": 3, "u2": 2, "u3": 3}


class TestDomestic:
    def test_exact_output(self, capsys):
        code, out, _ = run(capsys, "domestic", "--p", "2,3,4", "--m", "3")
        assert code == 0
        assert out.strip() == '{"group": "O_13", "h": 12, "pi_index": 13}'


class TestErrors:
    def test_domain_error_exits_one(self, capsys):
        code, out, _ = run(capsys, "domestic", "--p", "2,3,6", "--m", "3")
        assert code == 1
        payload = json.loads(out)
        assert payload["code"] == "precondition"
        assert "Dynkin" in payload["message"]

    def test_invalid_points_exit_one(self, capsys):
        code, out, _ = run(capsys, "graph", "--p", "2,3", "--lambda", "1:0,2:0", "--x", "1,1")
        assert code == 1
        assert json.loads(out)["code"] == "parameter"

    def test_parse_error_exits_two(self, capsys):
        code, _, err = run(capsys, "graph", "--p", "2,x", "--x", "1,1")
        assert code == 2
        assert "could not parse" in err

    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2


class TestSweep:
    def test_small_run_green(self, capsys):
        code, out, _ = run(capsys, "sweep", "--rmax", "12", "--count", "6")
        assert code == 0
        assert "quiver: ok" in out

    def test_env_seed_override(self, capsys, monkeypatch):
        monkeypatch.setenv("STARRES_SEED", "3")
        code, _, _ = run(capsys, "sweep", "--rmax", "8", "--count", "4", "--seed", "999")
        assert code == 0

    def test_counterexample_exits_one(self, capsys, monkeypatch):
        import starres.cli as cli

        monkeypatch.setattr(cli, "run_all", lambda **kw: {"check": "stub", "r": 5})
        code, out, _ = run(capsys, "sweep")
        assert code == 1
        assert json.loads(out) == {"check": "stub", "r": 5}

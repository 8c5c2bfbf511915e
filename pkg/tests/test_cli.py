import json

import pytest

from cubeharm.cli import TABLE_MAX_N, emit_table, main
from cubeharm.multipoly import MultiPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCoeffCommand:
    def test_all_routes_agree(self, capsys):
        code, out, _ = run(capsys, "coeff", "--n", "2", "--m", "1", "--k", "1")
        assert code == 0
        assert "routes agree" in out
        lines = [l for l in out.splitlines() if l and not l.startswith("routes")]
        assert all(line.split()[-1] == "2" for line in lines)

    def test_single_route_json(self, capsys):
        code, out, _ = run(
            capsys,
            "coeff", "--n", "3", "--m", "2", "--k", "1",
            "--route", "young", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["records"] == [{"route": "young", "value": "28/3"}]

    def test_usage_error_for_bad_range(self, capsys):
        code, _, err = run(capsys, "coeff", "--n", "1", "--m", "2", "--k", "0")
        assert code == 2
        assert "error" in err

    def test_argparse_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["coeff", "--n", "2"])
        assert exc.value.code == 2


class TestTableCommand:
    def test_record_count_and_values(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert len(data["records"]) == 8
        by_cell = {(r["n"], r["m"], r["k"]): r for r in data["records"]}
        assert by_cell[(2, 1, 0)]["value"] == "1"
        assert set(by_cell[(2, 1, 0)]["routesAgreeing"]) >= {
            "matrix", "partition", "young", "generating", "recursion", "oracle",
        }

    def test_known_cell_at_three(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        by_cell = {(r["n"], r["m"], r["k"]): r["value"] for r in data["records"]}
        assert by_cell[(3, 2, 1)] == "28/3"

    def test_byte_determinism(self):
        assert emit_table(3, "json") == emit_table(3, "json")
        assert emit_table(3, "csv") == emit_table(3, "csv")

    def test_bound(self, capsys):
        code, _, err = run(capsys, "table", "--n", str(TABLE_MAX_N + 1))
        assert code == 2
        assert "error" in err

    def test_csv_header(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "1", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "n,m,k,value,routesAgreeing"


class TestGenCommand:
    def test_base_polynomial_text(self, capsys):
        code, out, _ = run(capsys, "gen", "--m", "1")
        assert code == 0
        assert out.strip() == "1/2*t + 1/6"

    def test_bernstein_json(self, capsys):
        code, out, _ = run(capsys, "gen", "--m", "2", "--what", "F", "--format", "json")
        assert code == 0
        assert json.loads(out)["coefficients"] == ["1/6", "-4/15", "1/9"]

    def test_lift_requires_n_at_least_m(self, capsys):
        code, _, err = run(capsys, "gen", "--m", "2", "--n", "1")
        assert code == 2
        assert "error" in err


class TestBernoulliCommand:
    def test_csv_rows(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "--count", "3", "--format", "csv")
        assert code == 0
        assert out.splitlines() == [
            "m,B,b",
            "1,1/6,1/6",
            "2,1/30,1/90",
            "3,1/42,1/945",
        ]


class TestInvariantCommand:
    def test_tau_json(self, capsys):
        code, out, _ = run(
            capsys, "invariant", "--n", "2", "--k", "1", "--m", "2", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["terms"] == [[[0, 2], "2"], [[2, 0], "2"]]

    def test_elementary(self, capsys):
        code, out, _ = run(
            capsys, "invariant", "--n", "3", "--m", "2", "--what", "e", "--format", "json"
        )
        assert code == 0
        assert len(json.loads(out)["terms"]) == 3

    def test_bad_params(self, capsys):
        code, _, err = run(capsys, "invariant", "--n", "2", "--m", "3", "--what", "e")
        assert code == 2


class TestVerifyCommands:
    def test_identities(self, capsys):
        code, out, _ = run(capsys, "verify", "identities", "--order", "8")
        assert code == 0
        assert out.count("ok   ") == 4
        summary = json.loads(out.splitlines()[-1].removeprefix("SUMMARY "))
        assert summary == {
            "command": "verify identities", "checks": 4, "failed": 0, "ok": True,
        }

    def test_mvp_default_delta(self, capsys):
        code, out, _ = run(capsys, "verify", "mvp", "--n", "2", "--k", "1")
        assert code == 0
        assert "holds" in out

    def test_mvp_failing_polynomial(self, capsys, tmp_path):
        path = tmp_path / "square.json"
        payload = {"variables": 2, "terms": MultiPoly.monomial((2, 0)).to_obj()}
        path.write_text(json.dumps(payload))
        code, out, _ = run(capsys, "verify", "mvp", "--n", "2", "--k", "1", "--f", str(path))
        assert code == 1
        assert "FAIL" in out
        assert "2/3*r^2" in out

    def test_dimension(self, capsys):
        code, out, _ = run(capsys, "verify", "dimension", "--n", "2")
        assert code == 0
        assert "dimension 8" in out

    def test_dimension_guard(self, capsys):
        code, _, err = run(capsys, "verify", "dimension", "--n", "4")
        assert code == 2
        assert "explicitly" in err

    def test_annihilation(self, capsys):
        code, out, _ = run(capsys, "verify", "annihilation", "--n", "2")
        assert code == 0
        assert out.count("ok   ") == 6

    def test_routes(self, capsys):
        code, out, _ = run(capsys, "verify", "routes", "--n-max", "2")
        assert code == 0
        summary = json.loads(out.splitlines()[-1].removeprefix("SUMMARY "))
        assert summary["checks"] == 8 and summary["ok"]


class TestOutputFile:
    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, out, _ = run(
            capsys, "table", "--n", "1", "--format", "csv", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text().splitlines()[0] == "n,m,k,value,routesAgreeing"

    def test_identical_invocations_identical_bytes(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "table", "--n", "2", "--format", "json", "--out", str(a))
        run(capsys, "table", "--n", "2", "--format", "json", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

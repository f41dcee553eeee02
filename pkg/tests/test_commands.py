"""Tests for the wallctl command line."""

import json

import pytest
from typer.testing import CliRunner

from apps.wallctl.__main__ import app
from libs.core.models import VerificationReport
from libs.ledger.builtin import BUILTIN_PATH
from libs.ledger.golden import MINF52
from libs.motivic.polyring import format_polynomial

runner = CliRunner()


@pytest.fixture
def scenario_file(tmp_path):
    def write(text: str):
        path = tmp_path / "case.mwc"
        path.write_text(text, encoding="utf-8")
        return path
    return write


class TestEval:
    """Test the eval verb."""

    def test_builtin_file(self):
        """Test the shipped scenario passes."""
        result = runner.invoke(app, ["eval", str(BUILTIN_PATH)])
        assert result.exit_code == 0
        assert f"M_inf = {format_polynomial(MINF52)}" in result.stdout

    def test_failed_expectation(self, scenario_file):
        """Test a wrong expectation exits 1 with its residual."""
        path = scenario_file('model M = proj(1)\nexpect M == poly"1 + 2p"\n')
        result = runner.invoke(app, ["eval", str(path)])
        assert result.exit_code == 1
        assert "FAIL M: residual = -p" in result.stdout

    def test_json(self, scenario_file):
        """Test the JSON report."""
        path = scenario_file('model M = proj(2)\nexpect M == poly"1 + p + p^2"\n')
        result = runner.invoke(app, ["eval", str(path), "--json"])
        assert result.exit_code == 0
        report = VerificationReport.model_validate_json(result.stdout)
        assert report.scenario == "case"
        assert report.ok

    def test_missing_file(self, tmp_path):
        """Test an unreadable file exits 2."""
        result = runner.invoke(app, ["eval", str(tmp_path / "absent.mwc")])
        assert result.exit_code == 2

    def test_parse_error(self, scenario_file):
        """Test a syntax error exits 2 with its position."""
        path = scenario_file("let x = proj(1\n")
        result = runner.invoke(app, ["eval", str(path)])
        assert result.exit_code == 2
        assert "case.mwc:" in result.output

    def test_unknown_model(self, scenario_file):
        """Test an expectation naming no model exits 2."""
        path = scenario_file('expect M == poly"1"\n')
        result = runner.invoke(app, ["eval", str(path)])
        assert result.exit_code == 2
        assert "unknown model M" in result.output


class TestVerify:
    """Test the verify verb."""

    def test_passes(self):
        """Test the built-in verification succeeds."""
        result = runner.invoke(app, ["verify"])
        assert result.exit_code == 0
        assert "checks passed" in result.stdout

    def test_json(self):
        """Test the JSON report validates."""
        result = runner.invoke(app, ["verify", "--json"])
        assert result.exit_code == 0
        report = VerificationReport.model_validate_json(result.stdout)
        assert report.ok
        assert all(c["pass"] for c in json.loads(result.stdout)["checks"])

    def test_reconstruction_check(self):
        """Test the extra diagnostic rows."""
        result = runner.invoke(app, ["verify", "--check", "c3-reconstruction", "--json"])
        assert result.exit_code == 0
        names = [d["name"] for d in json.loads(result.stdout)["diagnostics"]]
        assert "a bracket" in names

    def test_unknown_check(self):
        """Test an unknown check name exits 2."""
        result = runner.invoke(app, ["verify", "--check", "bogus"])
        assert result.exit_code == 2

    def test_emit_scenario(self, tmp_path):
        """Test the emitted scenario is the shipped file."""
        out = tmp_path / "builtin.mwc"
        result = runner.invoke(app, ["verify", "--emit-scenario", str(out)])
        assert result.exit_code == 0
        assert out.read_text(encoding="utf-8") == BUILTIN_PATH.read_text(encoding="utf-8")


class TestTables:
    """Test the table verbs."""

    def test_atoms(self):
        """Test the atom table as JSON."""
        result = runner.invoke(app, ["atoms", "--json"])
        assert result.exit_code == 0
        rows = {row["name"]: row for row in json.loads(result.stdout)}
        assert rows["P^2"]["euler"] == 3
        assert all(row["polynomial"] for row in rows.values())

    def test_atoms_table(self):
        """Test the rich table renders."""
        result = runner.invoke(app, ["atoms"])
        assert result.exit_code == 0
        assert "Atom spaces" in result.stdout

    def test_walls(self):
        """Test the walls of (5,2)."""
        result = runner.invoke(app, ["walls", "5", "2", "--json"])
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert [r["alpha"] for r in rows] == ["18", "13", "8", "3", "3", "1/2"]
        assert rows[0]["sub"] == "(1,4)"
        assert rows[0]["quotient"] == "(4,-2)"

    def test_walls_negative_chi(self):
        """Test a negative Euler characteristic argument."""
        result = runner.invoke(app, ["walls", "5", "-2", "--json"])
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert len(rows) == 1
        assert rows[0]["alpha"] == "2"

    def test_walls_summary(self):
        """Test the plain summary line."""
        result = runner.invoke(app, ["walls", "5", "2"])
        assert result.exit_code == 0
        assert "5 walls, 6 candidates" in result.stdout

    def test_no_walls(self):
        """Test a class without walls."""
        result = runner.invoke(app, ["walls", "3", "1"])
        assert result.exit_code == 0
        assert "No walls for (3,1)" in result.stdout

    def test_walls_degree_too_small(self):
        """Test d < 2 exits 2."""
        result = runner.invoke(app, ["walls", "1", "5"])
        assert result.exit_code == 2

    def test_chi(self):
        """Test the (5,2) bookkeeping."""
        result = runner.invoke(app, ["chi", "5", "2", "--json"])
        assert result.exit_code == 0
        summary = json.loads(result.stdout)
        assert summary["chi_pair_self"] == -26
        assert summary["expected_dim"] == 27
        assert summary["point_count"] == 7
        assert summary["infinity_model"] is None
        assert "not a bundle" in summary["infinity_model_error"]
        assert len(summary["extensions"]) == 6

    def test_chi_plain(self):
        """Test M^infinity printed for a bundle class."""
        result = runner.invoke(app, ["chi", "4", "-2"])
        assert result.exit_code == 0
        assert "Expected dimension: 14" in result.stdout
        assert "P(M^inf) = " in result.stdout

    def test_reconstruct(self):
        """Test the reconstruction rows."""
        result = runner.invoke(app, ["reconstruct", "--json"])
        assert result.exit_code == 0
        rows = {row["name"]: row["value"] for row in json.loads(result.stdout)}
        assert rows["euler a bracket"] == "552"


class TestGlobalOptions:
    """Test options shared by every verb."""

    def test_missing_config(self, tmp_path):
        """Test a missing config file exits 2."""
        result = runner.invoke(app, ["--config", str(tmp_path / "absent.toml"), "atoms"])
        assert result.exit_code == 2

    def test_json_indent_from_config(self, tmp_path):
        """Test the configured indent reaches JSON output."""
        path = tmp_path / "wallctl.toml"
        path.write_text("json_indent = 0\n")
        result = runner.invoke(app, ["--config", str(path), "walls", "5", "-2", "--json"])
        assert result.exit_code == 0
        assert result.stdout.count("\n") == 1

    def test_bad_log_level(self):
        """Test an unknown log level exits 2."""
        result = runner.invoke(app, ["--log-level", "LOUD", "atoms"])
        assert result.exit_code == 2

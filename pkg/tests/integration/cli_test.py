"""Drive the specht-sym command line with click's test runner."""

import json

import pytest
from click.testing import CliRunner

from specht_sym.cli import EXIT_BAD_INPUT, main


@pytest.fixture
def runner(monkeypatch: pytest.MonkeyPatch) -> CliRunner:
    monkeypatch.delenv("SPECHT_SYM_THREADS", raising=False)
    monkeypatch.delenv("SPECHT_SYM_LOG_LEVEL", raising=False)
    return CliRunner()


def test_decompose_sym3_D(runner: CliRunner) -> None:
    """The worked n = 10, p = 5 example in both bases."""
    result = runner.invoke(main, ["decompose", "-n", "10", "-p", "5", "-r", "3", "-m", "D"])
    assert result.exit_code == 0, result.output
    assert "[M 8,1,1] + [M 7,3] - 2[M 8,2]" in result.output
    assert "= [Y 8,1,1] + [Y 7,3]" in result.output
    assert "dimension 120 (expected 120) ok" in result.output


def test_decompose_sym2_S(runner: CliRunner) -> None:
    """[Sym^2 S^(9,1)] = [M 8,2]."""
    result = runner.invoke(main, ["decompose", "-r", "2", "-m", "S"])
    assert result.exit_code == 0, result.output
    assert "[M 8,2]" in result.output


def test_decompose_out_of_range(runner: CliRunner) -> None:
    """r = p is outside the split range and exits with the input-error code."""
    result = runner.invoke(main, ["decompose", "-r", "5", "-m", "S"])
    assert result.exit_code == EXIT_BAD_INPUT


def test_decompose_rejects_composite_p(runner: CliRunner) -> None:
    """p must be prime."""
    result = runner.invoke(main, ["decompose", "-p", "6", "-r", "2"])
    assert result.exit_code == EXIT_BAD_INPUT


def test_verify_chainS(runner: CliRunner) -> None:
    """Retractions for r = 3, 4 when n = 10, p = 5."""
    result = runner.invoke(main, ["--json", "verify", "-n", "10", "-p", "5", "chainS"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert [check["name"] for check in report["checks"]] == ["theta_3 o X_2 = id", "theta_4 o X_3 = id"]
    assert all(check["passed"] for check in report["checks"])


def test_verify_gamma_text(runner: CliRunner) -> None:
    """gamma over GF(5) on S^(4,1)."""
    result = runner.invoke(main, ["verify", "-n", "5", "-p", "5", "gamma"])
    assert result.exit_code == 0, result.output
    assert "PASS (1/1 checks)" in result.output


def test_verify_zeta_needs_odd_p(runner: CliRunner) -> None:
    """zeta is undefined over GF(2)."""
    result = runner.invoke(main, ["verify", "-n", "4", "-p", "2", "zeta"])
    assert result.exit_code == EXIT_BAD_INPUT


def test_verify_commutator(runner: CliRunner) -> None:
    """Commutator scalars match C(d, r-1) for the M chain with n = 6, p = 3."""
    result = runner.invoke(main, ["--json", "verify", "-n", "6", "-p", "3", "commutator"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["checks"]
    assert all(check["passed"] for check in report["checks"])


def test_vertex_json(runner: CliRunner) -> None:
    """Sym^3 D^(9,1) has two Young summands."""
    result = runner.invoke(main, ["--json", "vertex", "-n", "10", "-p", "5", "-m", "D", "-r", "3"])
    assert result.exit_code == 0, result.output
    entries = json.loads(result.stdout)["entries"]
    assert [(e["mu"], e["vertex_m"]) for e in entries] == [("8,1,1", 5), ("7,3", 0)]


def test_kostka(runner: CliRunner) -> None:
    """Three certificates for n = 10, p = 5."""
    result = runner.invoke(main, ["--json", "kostka", "-n", "10", "-p", "5"])
    assert result.exit_code == 0, result.output
    assert len(json.loads(result.stdout)["certificates"]) == 3  # noqa: PLR2004


def test_filtration(runner: CliRunner) -> None:
    """Sym^3 D^(9,1) is a sum of Young modules."""
    result = runner.invoke(main, ["filtration", "-r", "3", "-m", "D"])
    assert result.exit_code == 0, result.output
    assert "young-sum" in result.output
    assert "[Y 7,3]" in result.output


def test_json_is_byte_identical(runner: CliRunner) -> None:
    """Repeated runs print the same bytes."""
    args = ["--json", "decompose", "-r", "4", "-m", "D"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == 0, first.output
    assert first.stdout == second.stdout


def test_accept_selected_criteria(runner: CliRunner) -> None:
    """Without --timings no elapsed times are reported."""
    result = runner.invoke(main, ["--json", "accept", "-c", "5", "-c", "10"])
    assert result.exit_code == 0, result.output
    results = json.loads(result.stdout)["results"]
    assert [r["criterion"] for r in results] == [5, 10]
    assert all(r["elapsed"] is None for r in results)


def test_accept_unknown_criterion(runner: CliRunner) -> None:
    """An unknown criterion is an input error, not a failed run."""
    result = runner.invoke(main, ["accept", "-c", "42"])
    assert result.exit_code == EXIT_BAD_INPUT


def test_cap_limits_commutator_degrees(runner: CliRunner) -> None:
    """With --cap 4 commutators are checked on Sym^1..Sym^3 for all five splits."""
    result = runner.invoke(main, ["--json", "--cap", "4", "verify", "-n", "5", "-p", "5", "commutator"])
    assert result.exit_code == 0, result.output
    checks = json.loads(result.stdout)["checks"]
    assert len(checks) == 5 * 3
    assert all(check["passed"] for check in checks)
    assert not any("Sym^4" in check["name"] for check in checks)

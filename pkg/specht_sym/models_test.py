"""Tests for the report models and their text templates."""

import pytest

from specht_sym.models import (
    AcceptanceResult,
    AcceptanceSummary,
    CheckResult,
    DecompositionReport,
    KostkaCertificate,
    ModuleKind,
    VerificationReport,
    VerifyTarget,
    render_template,
)


def _decomposition(young: str | None, remainder: str | None) -> DecompositionReport:
    return DecompositionReport(
        n=10,
        p=5,
        r=3,
        module=ModuleKind.D,
        formula="[M 8,1,1] + [M 7,3] - 2[M 8,2]",
        young=young,
        remainder=remainder,
        dimension=120,
        expected_dimension=120,
    )


def test_verification_report_needs_checks() -> None:
    """An empty report does not pass; one failing check fails it."""
    report = VerificationReport(n=10, p=5, target=VerifyTarget.CHAIN_S)
    assert not report.passed
    report.checks.append(CheckResult(name="theta_3 o X_2 = id", passed=True))
    assert report.passed
    report.checks.append(CheckResult(name="theta_4 o X_3 = id", passed=False))
    assert not report.passed


def test_acceptance_summary_passes_only_if_all_pass() -> None:
    """The summary is the conjunction of its results."""
    ok = AcceptanceResult(criterion=1, title="one", passed=True)
    bad = AcceptanceResult(criterion=2, title="two", passed=False)
    assert AcceptanceSummary(results=[ok]).passed
    assert not AcceptanceSummary(results=[ok, bad]).passed
    assert not AcceptanceSummary().passed


def test_certificate_lower_bound_is_positive() -> None:
    """A certificate below 1 certifies nothing."""
    with pytest.raises(ValueError, match="greater than or equal to 1"):
        KostkaCertificate(lam="7,2,1", mu="7,3", lower_bound=0)


def test_decompose_template() -> None:
    """The text report shows the formula, its Young form and the dimension check."""
    text = render_template("decompose.j2", report=_decomposition("[Y 8,1,1] + [Y 7,3]", None))
    assert "[M 8,1,1] + [M 7,3] - 2[M 8,2]" in text
    assert "= [Y 8,1,1] + [Y 7,3]" in text
    assert "dimension 120 (expected 120) ok" in text


def test_decompose_template_without_young_form() -> None:
    """No '=' line is printed when nothing converts."""
    text = render_template("decompose.j2", report=_decomposition(None, None))
    assert "\n=" not in text


def test_verify_template() -> None:
    """Each check is itemized and the verdict counts passing checks."""
    report = VerificationReport(
        n=5,
        p=5,
        target=VerifyTarget.GAMMA,
        checks=[CheckResult(name="theta_3 o X_2 = id", passed=True, detail="6x10, equivariant")],
    )
    text = render_template("verify.j2", report=report)
    assert "[PASS] theta_3 o X_2 = id: 6x10, equivariant" in text
    assert "PASS (1/1 checks)" in text


def test_missing_template() -> None:
    """Unknown template names fail loudly."""
    with pytest.raises(AssertionError, match="Template file not found"):
        render_template("missing.j2", report=None)


def test_json_is_deterministic() -> None:
    """Identical reports serialize to identical JSON."""
    first = _decomposition("[Y 8,1,1] + [Y 7,3]", None).model_dump_json(indent=2)
    second = _decomposition("[Y 8,1,1] + [Y 7,3]", None).model_dump_json(indent=2)
    assert first == second
    assert '"module": "D"' in first

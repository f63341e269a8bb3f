"""Report models shared by the library, the acceptance runner and the CLI."""

from enum import StrEnum
from pathlib import Path
from typing import Any

from jinja2 import Template
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field


class ModuleKind(StrEnum):
    """Which symmetric power a formula describes."""

    M = "M"
    S = "S"
    D = "D"


class VerifyTarget(StrEnum):
    ZETA = "zeta"
    GAMMA = "gamma"
    CHAIN_M = "chainM"
    CHAIN_S = "chainS"
    COMMUTATOR = "commutator"


class CheckResult(BaseModel):
    """One exact identity that was tested."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="What was checked, e.g. 'd_3 o theta = id'")
    passed: bool
    detail: str = Field(default="", description="Shapes, scalars or the reason for failure")


class VerificationReport(BaseModel):
    n: int
    p: int
    target: VerifyTarget
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(check.passed for check in self.checks)


class DecompositionReport(BaseModel):
    """[Sym^r X] in the permutation-module basis and, where known, the Young basis."""

    n: int
    p: int
    r: int
    module: ModuleKind
    formula: str = Field(..., description="Signed sum of [M lambda] classes")
    young: str | None = Field(default=None, description="Young-module part of the conversion")
    remainder: str | None = Field(default=None, description="Classes left in the M basis")
    dimension: int = Field(..., description="Dimension of the formula under dim M^lambda")
    expected_dimension: int = Field(..., description="Closed-form dimension of Sym^r X")


class VertexEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    mu: str = Field(..., description="Young module label as a comma list")
    vertex_m: int = Field(..., description="The vertex is a Sylow p-subgroup of S_m")
    case: str = Field(..., description="'n-p' or 'n-2p'")
    certified: bool = Field(..., description="The two-case rule agrees with the p-adic vertex rule")
    status: str = Field(..., description="'summand' for proven summands, 'candidate' otherwise")


class VertexReport(BaseModel):
    n: int
    p: int
    kind: ModuleKind
    r: int
    entries: list[VertexEntry] = Field(default_factory=list)


class KostkaCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    lam: str
    mu: str
    lower_bound: int = Field(..., description="Certified lower bound on [M^lam : Y^mu]", ge=1)
    expected: int | None = Field(default=None, description="Exact value where a cut rule gives it")


class KostkaReport(BaseModel):
    n: int
    p: int
    equation: str = Field(..., description="[Sym^4 D] in mixed M/Y basis")
    certificates: list[KostkaCertificate] = Field(default_factory=list)


class FiltrationReport(BaseModel):
    n: int
    p: int
    kind: ModuleKind
    r: int
    status: str = Field(..., description="'specht', 'young-sum' or 'not-claimed'")
    summands: list[str] = Field(default_factory=list)


class AcceptanceResult(BaseModel):
    criterion: int
    title: str
    passed: bool
    detail: str = ""
    elapsed: float | None = Field(default=None, description="Seconds; only kept with --timings")


class AcceptanceSummary(BaseModel):
    results: list[AcceptanceResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.results) and all(result.passed for result in self.results)


def render_template(template_name: str, **context: Any) -> str:  # noqa: ANN401
    """Load and render a Jinja2 report template from the templates directory."""
    template_path = Path(__file__).parent / "templates" / template_name
    logger.debug(f"Loading template from: {template_path}")

    assert template_path.is_file(), (
        f"Template file not found at {template_path}. "
        f"Ensure '{template_name}' exists in the templates directory."
    )
    template_content = template_path.read_text()
    assert template_content.strip(), f"Template file {template_path} is empty."

    rendered = Template(template_content, trim_blocks=True, lstrip_blocks=True).render(**context)
    assert rendered.strip(), f"Rendered template {template_name} is empty; check its Jinja2 syntax."
    return rendered

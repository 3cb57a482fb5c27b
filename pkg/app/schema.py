from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class ProductMode(str, Enum):
    """Pipelines that compute the degree-0 spark product"""

    CLOSED = "closed"
    ENGINE = "engine"
    DELIGNE = "deligne"
    ALL = "all"


PIPELINES = (ProductMode.CLOSED, ProductMode.ENGINE, ProductMode.DELIGNE)


class FuzzSuite(str, Enum):
    """Seeded property suites"""

    LEIBNIZ = "leibniz"
    ASSOC = "assoc"
    COMMUT = "commut"
    ROUNDTRIP = "roundtrip"
    AGREEMENT = "agreement"
    D2 = "d2"
    VANISHING = "vanishing"
    REPRESENT = "represent"


FUZZ_SUITE_VALUES = tuple(suite.value for suite in FuzzSuite)


class CechOp(str, Enum):
    DELTA = "delta"
    CUP = "cup"
    FLAT_PRODUCT = "flat-product"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class ExitCode(int, Enum):
    """Process exit status of a command"""

    PASS = 0
    PARSE_ERROR = 2
    DISAGREEMENT = 3
    DEGREE_ERROR = 4


class ValidationReport(BaseModel):
    """Outcome of a validation, truthy when every check passed"""

    ok: bool = True
    reasons: List[str] = Field(default_factory=list)

    def __bool__(self):
        return self.ok

    def fail(self, reason: str) -> "ValidationReport":
        self.ok = False
        self.reasons.append(reason)
        return self


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: Optional[str] = Field(default=None)


class StructuralReport(BaseModel):
    """Structure-theorem checks for one Deligne level"""

    level: int
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, detail: Optional[str] = None) -> None:
        self.checks.append(CheckResult(name=name, passed=passed, detail=detail))


class PipelineValue(BaseModel):
    """One exact result with its float rendering"""

    exact: str
    float_value: float


class RunReport(BaseModel):
    """Report emitted by every command"""

    command: List[str] = Field(default_factory=list)
    inputs: Dict[str, Any] = Field(default_factory=dict)
    exact: Optional[str] = Field(default=None)
    float_value: Optional[float] = Field(default=None)
    pipelines: Dict[str, PipelineValue] = Field(default_factory=dict)
    oracle: Optional[float] = Field(default=None)
    oracle_distance: Optional[float] = Field(default=None)
    result: Optional[Any] = Field(default=None)
    checks: List[CheckResult] = Field(default_factory=list)
    counterexample: Optional[Any] = Field(default=None)
    exit_code: ExitCode = ExitCode.PASS

    @property
    def passed(self) -> bool:
        return self.exit_code == ExitCode.PASS and all(c.passed for c in self.checks)

    def add_check(self, name: str, passed: bool, detail: Optional[str] = None) -> None:
        self.checks.append(CheckResult(name=name, passed=passed, detail=detail))

    def render_text(self, precision: int = 15) -> str:
        lines = [f"command: {' '.join(self.command)}"]
        for name, value in self.inputs.items():
            lines.append(f"input {name}: {value}")
        for name, value in self.pipelines.items():
            lines.append(f"{name}: {value.exact}  ≈ {value.float_value:.{precision}g}")
        if self.exact is not None:
            lines.append(f"exact: {self.exact}")
        if self.float_value is not None:
            lines.append(f"float: {self.float_value:.{precision}g}")
        if self.oracle is not None:
            lines.append(f"oracle: {self.oracle:.{precision}g} (distance {self.oracle_distance:.3e})")
        if self.result is not None:
            lines.append(f"result: {self.result}")
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            detail = f" ({check.detail})" if check.detail else ""
            lines.append(f"[{status}] {check.name}{detail}")
        if self.counterexample is not None:
            lines.append(f"counterexample: {self.counterexample}")
        lines.append(f"exit: {self.exit_code.value}")
        return "\n".join(lines)


class SuiteResult(BaseModel):
    """Outcome of one seeded property suite"""

    suite: FuzzSuite
    cases: int
    seed: int
    passed: bool = True
    completed: int = 0
    elapsed: float = 0.0
    counterexample: Optional[str] = Field(default=None)

from typing import Optional

from app.config import config
from app.fuzz.suites import run_suite
from app.schema import ExitCode, FuzzSuite, RunReport
from app.tool.base import BaseTool, ToolResult, command_line


class FuzzTool(BaseTool):
    name: str = "fuzz"
    description: str = "Run a seeded algebraic property suite and report the first counterexample."

    async def execute(
        self, suite: str, cases: Optional[int] = None, seed: Optional[int] = None, **kwargs
    ) -> ToolResult:
        suite = FuzzSuite(suite)
        cases = config.fuzz.cases if cases is None else cases
        seed = config.fuzz.seed if seed is None else seed
        outcome = run_suite(suite, cases, seed)

        report = RunReport(
            command=command_line(self.name, {"suite": suite, "cases": cases, "seed": seed}),
            inputs={"suite": suite.value, "cases": cases, "seed": seed},
            result=f"{outcome.completed}/{cases} cases",
        )
        report.add_check(suite.value, outcome.passed, f"{outcome.completed} cases run")
        if not outcome.passed:
            report.counterexample = outcome.counterexample
            report.exit_code = ExitCode.DISAGREEMENT
        return ToolResult(output=report, exit_code=report.exit_code)

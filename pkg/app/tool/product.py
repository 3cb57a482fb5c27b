from typing import Optional

from app.config import config
from app.flow.flow_factory import FlowFactory, FlowType
from app.logger import logger
from app.oracle import circle_distance, quadrature_product
from app.schema import PIPELINES, ExitCode, PipelineValue, ProductMode, RunReport
from app.scalars import CircleNumber
from app.spark import parse_spark0, spark0_to_json
from app.tool.base import BaseTool, ToolResult, command_line, load_json


_PRODUCT_DESCRIPTION = """\
Multiply two degree-0 spark classes on the circle.
Each input is a JSON file with Fourier data {"winding", "constant", "harmonics"}.
The product is computed by the closed form, the bicomplex engine, the Deligne cup,
or all three with mutual exact agreement asserted.
"""


class ProductTool(BaseTool):
    name: str = "product"
    description: str = _PRODUCT_DESCRIPTION

    async def execute(
        self,
        lhs,
        rhs,
        mode: str = ProductMode.ALL,
        check_oracle: bool = False,
        tol: Optional[float] = None,
        **kwargs,
    ) -> ToolResult:
        mode = ProductMode(mode)
        tol = config.oracle.tol if tol is None else tol
        x = parse_spark0(load_json(lhs))
        y = parse_spark0(load_json(rhs))
        report = RunReport(
            command=command_line(
                self.name,
                {"lhs": lhs, "rhs": rhs, "mode": mode, "check_oracle": check_oracle, "tol": tol},
            ),
            inputs={"lhs": spark0_to_json(x), "rhs": spark0_to_json(y)},
        )

        pipelines = PIPELINES if mode is ProductMode.ALL else (mode,)
        values = {}
        for pipeline in pipelines:
            flow = FlowFactory.create_flow(FlowType(pipeline.value))
            values[pipeline.value] = await flow.run(x, y)
            report.pipelines[pipeline.value] = _pipeline_value(values[pipeline.value])

        result = values[pipelines[0].value]
        report.exact = result.render()
        report.float_value = result.to_float()

        if len(values) > 1:
            agree = all(value == result for value in values.values())
            report.add_check("pipelines agree", agree, ", ".join(values))
            if not agree:
                logger.warning(f"pipelines disagree: {report.pipelines}")
                report.counterexample = {name: v.render() for name, v in values.items()}
                report.exit_code = ExitCode.DISAGREEMENT

        if check_oracle:
            report.oracle = quadrature_product(x, y)
            report.oracle_distance = circle_distance(report.float_value, report.oracle)
            close = report.oracle_distance < tol
            report.add_check("oracle", close, f"tol {tol:g}")
            if not close:
                logger.warning(
                    f"oracle distance {report.oracle_distance:.3e} exceeds tolerance {tol:g}"
                )
                report.exit_code = ExitCode.DISAGREEMENT

        return ToolResult(output=report, exit_code=report.exit_code)


def _pipeline_value(value: CircleNumber) -> PipelineValue:
    return PipelineValue(exact=value.render(), float_value=value.to_float())

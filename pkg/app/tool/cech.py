from fractions import Fraction
from typing import List, Optional

from app.exceptions import DegreeError, InputParseError
from app.nerve import (
    Cochain,
    Ring,
    cech_cup,
    cech_delta,
    cochain_to_json,
    flat_bundle_product,
    parse_cochain,
    parse_cycle,
    parse_nerve,
)
from app.schema import CechOp, RunReport
from app.tool.base import BaseTool, ToolResult, command_line, load_json


_CECH_DESCRIPTION = """\
Čech operations on a finite nerve.
* `delta`: coboundary of one cochain
* `cup`: front/back cup product of two or more cochains, left to right
* `flat-product`: pairing of r ∪ b10 with a cycle, mod Z (needs --cycle)
"""


def _common_ring(cochains: List[Cochain]) -> List[Cochain]:
    rings = {c.ring for c in cochains}
    if len(rings) > 1 and rings <= {Ring.Z, Ring.Q}:
        return [c.map(Fraction, Ring.Q) if c.ring is Ring.Z else c for c in cochains]
    return cochains


class CechTool(BaseTool):
    name: str = "cech"
    description: str = _CECH_DESCRIPTION

    async def execute(
        self, nerve, cochains: list, op: str, cycle: Optional[str] = None, **kwargs
    ) -> ToolResult:
        op = CechOp(op)
        complex_ = parse_nerve(load_json(nerve))
        operands = [parse_cochain(load_json(source), complex_) for source in cochains]
        report = RunReport(
            command=command_line(
                self.name, {"nerve": nerve, "cochain": list(cochains), "op": op, "cycle": cycle}
            ),
            inputs={
                "nerve": {"vertices": complex_.vertex_count, "dimension": complex_.dimension},
                "cochains": [cochain_to_json(c) for c in operands],
            },
        )

        if op is CechOp.DELTA:
            if len(operands) != 1:
                raise InputParseError(f"delta takes one cochain, got {len(operands)}")
            report.result = cochain_to_json(cech_delta(operands[0]))
        elif op is CechOp.CUP:
            if len(operands) < 2:
                raise InputParseError(f"cup takes at least two cochains, got {len(operands)}")
            operands = _common_ring(operands)
            product = operands[0]
            for operand in operands[1:]:
                product = cech_cup(product, operand)
            report.result = cochain_to_json(product)
        else:
            if len(operands) != 2:
                raise InputParseError(f"flat-product takes r and b10, got {len(operands)} cochains")
            if cycle is None:
                raise InputParseError("flat-product needs a cycle file")
            r, b10 = operands
            for name, operand in (("r", r), ("b10", b10)):
                if operand.ring is Ring.FLOAT:
                    raise DegreeError(f"{name} must be exact data, got ring float")
            chain = parse_cycle(load_json(cycle))
            report.inputs["cycle"] = [
                {"simplex": list(s), "coefficient": n} for s, n in chain.items()
            ]
            value = flat_bundle_product(r, b10, chain)
            report.exact = value.render()
            report.float_value = value.to_float()

        return ToolResult(output=report, exit_code=report.exit_code)

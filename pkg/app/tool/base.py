import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, Field

from app.exceptions import DegreeError, DisagreementError, InputParseError
from app.logger import logger
from app.schema import ExitCode, RunReport


class BaseTool(ABC, BaseModel):
    name: str
    description: str

    class Config:
        arbitrary_types_allowed = True

    async def __call__(self, **kwargs) -> "ToolResult":
        """Execute the tool, mapping engine errors onto exit codes."""
        try:
            return await self.execute(**kwargs)
        except InputParseError as e:
            return self.fail(kwargs, ExitCode.PARSE_ERROR, e)
        except DisagreementError as e:
            return self.fail(kwargs, ExitCode.DISAGREEMENT, e)
        except DegreeError as e:
            return self.fail(kwargs, ExitCode.DEGREE_ERROR, e)

    @abstractmethod
    async def execute(self, **kwargs) -> "ToolResult":
        """Execute the tool with given parameters."""

    def fail(self, kwargs: Dict[str, Any], code: ExitCode, error: Any) -> "ToolResult":
        logger.error(f"{self.name} failed ({code.name.lower()}): {error}")
        report = RunReport(command=command_line(self.name, kwargs), exit_code=code)
        return ToolResult(output=report, error=str(error), exit_code=code)


class ToolResult(BaseModel):
    """Represents the result of a tool execution."""

    output: RunReport = Field(default_factory=RunReport)
    error: Optional[str] = Field(default=None)
    exit_code: ExitCode = ExitCode.PASS

    class Config:
        arbitrary_types_allowed = True

    def __bool__(self):
        return self.exit_code == ExitCode.PASS

    def __str__(self):
        return f"Error: {self.error}" if self.error else self.output.render_text()

    def render(self, output_format: str = "text", precision: int = 15) -> str:
        if output_format == "json":
            payload = self.output.model_dump(mode="json")
            if self.error:
                payload["error"] = self.error
            return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=True)
        text = self.output.render_text(precision)
        return f"{text}\nerror: {self.error}" if self.error else text


def command_line(name: str, kwargs: Dict[str, Any]) -> list:
    """Echo of the invoked command; inline data is summarised as <data>."""
    words = [name]
    for key, value in kwargs.items():
        if value is None or value is False:
            continue
        flag = "--" + key.replace("_", "-")
        if value is True:
            words.append(flag)
        elif isinstance(value, (list, tuple)):
            for item in value:
                words.extend([flag, _word(item)])
        else:
            words.extend([flag, _word(value)])
    return words


def _word(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return "<data>"
    return str(value.value if hasattr(value, "value") else value)


def load_json(source: Union[str, Path, dict, list]) -> Any:
    """Load JSON from a file path; already-decoded data passes through."""
    if isinstance(source, (dict, list)):
        return source
    path = Path(source)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise InputParseError(f"no such file: {path}") from e
    except json.JSONDecodeError as e:
        raise InputParseError(f"{path} is not valid JSON: {e}") from e

from app.tool.base import BaseTool, ToolResult
from app.tool.cech import CechTool
from app.tool.fuzz import FuzzTool
from app.tool.product import ProductTool


__all__ = [
    "BaseTool",
    "ToolResult",
    "CechTool",
    "FuzzTool",
    "ProductTool",
]

"""MCP server implementation with FastMCP."""

from typing import Any, Dict, List, Optional

from mcp.server.fastmcp import FastMCP

from .bench import compare_methods
from .config import settings
from .fpbits import to_bits
from .methods import SumMethod, parse_method
from .vector import as_float_array, dot, exact_mean, method_sum, sqnorm

mcp = FastMCP(
    "superaccumulator",
    host=settings.http_host,
    port=settings.http_port,
)


def result_dict(value: float) -> Dict[str, Any]:
    """Format a float result as its repr and 16-hex-digit bit pattern."""
    return {"value": repr(value), "bits": f"0x{to_bits(value):016X}"}


def _method(name: Optional[str]) -> Optional[SumMethod]:
    return parse_method(name) if name else None


@mcp.tool(name="exact_sum")
def exact_sum_tool(values: List[float], method: Optional[str] = None) -> Dict[str, Any]:
    """
    Sum a list of doubles.

    Args:
        values: Numbers to sum
        method: small, large, ordered, unordered or kahan (default: exact, chosen by size)

    Returns:
        Dictionary with the result value and its bit pattern
    """
    return result_dict(method_sum(as_float_array(values), _method(method)))


@mcp.tool(name="exact_mean")
def exact_mean_tool(values: List[float], method: Optional[str] = None) -> Dict[str, Any]:
    """
    Correctly rounded mean of a non-empty list of doubles.

    Args:
        values: Numbers to average
        method: small or large (default: chosen by size)
    """
    return result_dict(exact_mean(as_float_array(values), _method(method)))


@mcp.tool(name="dot")
def dot_tool(a: List[float], b: List[float], method: Optional[str] = None) -> Dict[str, Any]:
    """
    Dot product of two equal-length vectors; products are rounded, the sum is not.

    Args:
        a: First vector
        b: Second vector
        method: Summation method for the products (default: exact)
    """
    return result_dict(dot(a, b, _method(method)))


@mcp.tool(name="sqnorm")
def sqnorm_tool(values: List[float], method: Optional[str] = None) -> Dict[str, Any]:
    """Sum of squares of values, each square rounded once."""
    return result_dict(sqnorm(values, _method(method)))


@mcp.tool(name="compare")
def compare_tool(values: List[float]) -> Dict[str, Any]:
    """
    Sum values with every method and the exact oracle.

    Returns:
        Dictionary with one entry per method, the oracle result, and
        'consistent' (all exact methods match the oracle)
    """
    report = compare_methods(as_float_array(values))
    return {
        "n": report.n,
        "methods": {r.method: result_dict(r.value) for r in report.results},
        "oracle": result_dict(report.oracle),
        "consistent": report.consistent,
    }

"""Tests for the MCP tool functions."""

import pytest

from src.superaccumulator.server import (
    compare_tool,
    dot_tool,
    exact_mean_tool,
    exact_sum_tool,
    mcp,
    result_dict,
    sqnorm_tool,
)


def test_result_dict():
    assert result_dict(1.0) == {"value": "1.0", "bits": "0x3FF0000000000000"}


def test_server_name():
    assert mcp.name == "superaccumulator"


def test_exact_sum_tool():
    assert exact_sum_tool([1e16, 1.0, -1e16]) == result_dict(1.0)
    assert exact_sum_tool([1e16, 1.0, -1e16], "ordered") == result_dict(0.0)
    with pytest.raises(ValueError, match="Unknown method"):
        exact_sum_tool([1.0], "fastsum")


def test_mean_dot_sqnorm_tools():
    assert exact_mean_tool([1.0, 2.0]) == result_dict(1.5)
    assert dot_tool([1.0, 2.0, 3.0], [4.0, 5.0, 6.0]) == result_dict(32.0)
    assert sqnorm_tool([3.0, 4.0], "large") == result_dict(25.0)
    with pytest.raises(ValueError):
        exact_mean_tool([])


def test_compare_tool():
    report = compare_tool([1e16, 1.0, -1e16])
    assert report["consistent"] is True
    assert report["n"] == 3
    assert report["oracle"] == result_dict(1.0)
    assert report["methods"]["ordered"] == result_dict(0.0)
    assert set(report["methods"]) == {"small", "large", "ordered", "unordered", "kahan"}

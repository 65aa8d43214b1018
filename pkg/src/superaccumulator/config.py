"""Configuration management using pydantic-settings."""

from typing import List
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="SUPERACC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = Field(
        default="INFO",
        description="Root logger level",
    )

    # Method selection
    method_threshold: int = Field(
        default=1000,
        ge=1,
        description="Term count at which the large superaccumulator replaces the small one",
    )

    # Benchmark data and timing
    seed: int = Field(
        default=1,
        ge=0,
        description="Seed for the benchmark data generator",
    )
    bench_total: int = Field(
        default=10_000_000,
        ge=1,
        description="Total number of terms summed per (method, N) in a benchmark run",
    )
    bench_sizes: List[int] = Field(
        default_factory=lambda: [10, 100, 1_000, 10_000, 100_000, 1_000_000],
        description="Array sizes timed by the bench command",
    )

    # Split-merge parallel summation
    parallel_parts: int = Field(
        default=4,
        ge=1,
        description="Number of contiguous segments for parallel summation",
    )
    parallel_workers: int = Field(
        default=1,
        ge=1,
        description="Worker threads for parallel summation (1 = run the plan sequentially)",
    )

    # MCP server
    mcp_transport: str = Field(
        default="stdio",
        description="MCP transport: 'stdio' or 'streamable-http'",
    )
    http_host: str = Field(
        default="127.0.0.1",
        description="HTTP server host",
    )
    http_port: int = Field(
        default=8000,
        description="HTTP server port",
    )

    def is_http_transport(self) -> bool:
        """Check if the MCP server should listen over HTTP."""
        return self.mcp_transport == "streamable-http"


# Global settings instance
settings = Settings()

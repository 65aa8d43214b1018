"""Command-line interface: generate data, sum files, compare methods, benchmark."""

import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Iterator, List, Optional

import typer

from .bench import BenchOp, GeneratorSpec, compare_methods, gen, run_bench, write_csv, write_plot_data
from .config import settings
from .datafile import FileFormat, read_values, write_values
from .fpbits import format_result
from .methods import SumMethod, parse_method
from .vector import dot, exact_mean, method_sum, sqnorm

logger = logging.getLogger(__name__)

EXIT_ERROR = 1
EXIT_MISMATCH = 2

app = typer.Typer(
    help="Exact IEEE-754 double summation with small and large superaccumulators.",
    no_args_is_help=True,
    add_completion=False,
)

InputArg = Annotated[Path, typer.Argument(help="File of doubles")]
MethodOpt = Annotated[
    Optional[SumMethod],
    typer.Option("--method", help="Summation method (default: exact, chosen by size)"),
]
FormatOpt = Annotated[FileFormat, typer.Option("--format", help="File format")]
SeedOpt = Annotated[Optional[int], typer.Option("--seed", min=0, help="Generator seed")]
PermuteOpt = Annotated[bool, typer.Option("--permute", help="Randomly permute generated terms")]


@contextmanager
def _cli_errors() -> Iterator[None]:
    """Turn bad input into a message on stderr and exit code 1."""
    try:
        yield
    except (OSError, ValueError) as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(EXIT_ERROR) from None


def _parse_sizes(text: str) -> List[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise typer.BadParameter(f"sizes must be comma-separated integers, got '{text}'") from None


def _parse_methods(text: str) -> List[SumMethod]:
    try:
        return [parse_method(s.strip()) for s in text.split(",") if s.strip()]
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None


@app.command("gen")
def gen_cmd(
    out: Annotated[Path, typer.Option("--out", help="Output file")],
    n: Annotated[int, typer.Option("--n", help="Number of terms (even)")] = 1000,
    seed: SeedOpt = None,
    permute: PermuteOpt = False,
    fmt: FormatOpt = FileFormat.BIN,
) -> None:
    """Write mirrored U1*exp(30*U2) benchmark terms, whose exact sum is zero."""
    with _cli_errors():
        spec = GeneratorSpec(n=n, seed=settings.seed if seed is None else seed, permute=permute)
        write_values(gen(spec), out, fmt)
        logger.info(f"Wrote {n} terms to {out}")


@app.command("sum")
def sum_cmd(path: InputArg, method: MethodOpt = None, fmt: FormatOpt = FileFormat.BIN) -> None:
    """Print the sum of a file of doubles."""
    with _cli_errors():
        values = read_values(path, fmt)
        typer.echo(format_result(method_sum(values, method)))


@app.command("mean")
def mean_cmd(path: InputArg, method: MethodOpt = None, fmt: FormatOpt = FileFormat.BIN) -> None:
    """Print the correctly rounded mean of a file of doubles."""
    with _cli_errors():
        typer.echo(format_result(exact_mean(read_values(path, fmt), method)))


@app.command("dot")
def dot_cmd(
    a: InputArg,
    b: InputArg,
    method: MethodOpt = None,
    fmt: FormatOpt = FileFormat.BIN,
) -> None:
    """Print the dot product of two files of doubles."""
    with _cli_errors():
        typer.echo(format_result(dot(read_values(a, fmt), read_values(b, fmt), method)))


@app.command("sqnorm")
def sqnorm_cmd(path: InputArg, method: MethodOpt = None, fmt: FormatOpt = FileFormat.BIN) -> None:
    """Print the squared norm of a file of doubles."""
    with _cli_errors():
        typer.echo(format_result(sqnorm(read_values(path, fmt), method)))


@app.command("compare")
def compare_cmd(
    path: Annotated[Optional[Path], typer.Argument(help="File of doubles (default: generate)")] = None,
    n: Annotated[int, typer.Option("--n", help="Generated terms when no file is given")] = 1000,
    seed: SeedOpt = None,
    permute: PermuteOpt = False,
    fmt: FormatOpt = FileFormat.BIN,
) -> None:
    """Run all methods and the oracle; exit 2 if an exact method disagrees with the oracle."""
    with _cli_errors():
        if path is not None:
            values = read_values(path, fmt)
        else:
            spec = GeneratorSpec(n=n, seed=settings.seed if seed is None else seed, permute=permute)
            values = gen(spec)
        report = compare_methods(values)

    width = max(len(r.method) for r in report.results)
    for r in report.results:
        flag = "" if r.agrees or not r.exact else "  MISMATCH"
        typer.echo(f"{r.method:<{width}}  {format_result(r.value)}{flag}")
    typer.echo(f"{'oracle':<{width}}  {format_result(report.oracle)}")

    if not report.consistent:
        raise typer.Exit(EXIT_MISMATCH)


@app.command("bench")
def bench_cmd(
    out: Annotated[Path, typer.Option("--out", help="CSV output file")] = Path("bench.csv"),
    sizes: Annotated[Optional[str], typer.Option("--sizes", help="Comma-separated array sizes")] = None,
    methods: Annotated[
        str, typer.Option("--methods", "--method", help="Comma-separated methods")
    ] = ",".join(m.value for m in SumMethod),
    total: Annotated[Optional[int], typer.Option("--total", min=1, help="Terms summed per (method, N)")] = None,
    seed: SeedOpt = None,
    permute: PermuteOpt = False,
    parts: Annotated[Optional[int], typer.Option("--parts", min=1, help="Also time split-merge summation")] = None,
    op: Annotated[BenchOp, typer.Option("--op", help="Operation to time")] = BenchOp.SUM,
) -> None:
    """Time each method in ns/term; writes CSV plus a gnuplot data file next to it."""
    size_list = _parse_sizes(sizes) if sizes else settings.bench_sizes
    method_list = _parse_methods(methods)
    with _cli_errors():
        records = run_bench(
            sizes=size_list,
            methods=method_list,
            total=settings.bench_total if total is None else total,
            seed=settings.seed if seed is None else seed,
            permute=permute,
            op=op,
            parts=parts,
        )
        write_csv(records, out)
        plot_path = out.with_suffix(".dat")
        write_plot_data(records, plot_path)
        logger.info(f"Wrote {len(records)} records to {out} and {plot_path}")


@app.command("serve")
def serve_cmd() -> None:
    """Run the MCP tool server on the configured transport."""
    from .server import mcp

    logger.info(f"Starting superaccumulator MCP server ({settings.mcp_transport})")
    mcp.run(transport="streamable-http" if settings.is_http_transport() else "stdio")

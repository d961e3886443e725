import click
import numpy as np

from app.commands.options import (
    INTERPOLATE_METHODS,
    METHOD_NAMES,
    grid_points_option,
    out_option,
    parse_interval,
    run_config,
)
from app.schemas import PointRecord
from app.services.benchmarks.functions import get_benchmark
from app.services.benchmarks.metrics import make_grid
from app.services.interpolation.methods import build_from_samples, build_interpolant, node_family
from app.services.interpolation.nodes import make_interval
from app.services.storage import data_samples, export_csv, load_data_file


@click.command("interpolate")
@click.option("--method", type=click.Choice(INTERPOLATE_METHODS), required=True, help="Interpolation method.")
@click.option("--function", "function_id", type=int, default=None, help="Benchmark id 1..10.")
@click.option("--data", type=click.Path(exists=True, dir_okay=False), default=None, help="Two-column sample file.")
@click.option("--n", "n", type=int, default=None, help="Degree (benchmark mode; checked against the file otherwise).")
@click.option("--interval", callback=parse_interval, default=None, help="Data interval a,b (data mode).")
@click.option("--at", "at", type=float, multiple=True, help="Query point; repeatable.")
@click.option("--grid", "dense", is_flag=True, help="Evaluate on the dense grid instead of --at points.")
@grid_points_option
@out_option
def interpolate(method, function_id, data, n, interval, at, dense, grid_points, out):
    """Build one interpolant and write (x, value) rows."""
    if (function_id is None) == (data is None):
        raise click.UsageError("give exactly one of --function or --data")
    if not at and not dense:
        raise click.UsageError("give --at points or --grid")
    method = METHOD_NAMES[method]

    if data is None:
        if interval is not None:
            raise click.UsageError("--interval applies to --data files only")
        if n is None:
            raise click.UsageError("--n is required with --function")
        interp = build_interpolant(method, get_benchmark(function_id), n)
        unit = make_interval(-1.0, 1.0)
    else:
        x, y = load_data_file(data)
        if n is not None and n != x.size - 1:
            raise click.UsageError(f"--n {n} does not match {x.size} samples in {data}")
        explicit = make_interval(*interval) if interval is not None else None
        samples, unit = data_samples(x, y, node_family(method), explicit)
        interp = build_from_samples(method, samples)

    if dense:
        config = run_config(grid_points=grid_points)
        queries = np.asarray(unit.from_unit(make_grid(config.grid_points)))
    else:
        queries = np.asarray(at, dtype=float)

    values = np.atleast_1d(interp(unit.to_unit(queries)))
    export_csv([PointRecord(x=float(q), value=float(v)) for q, v in zip(queries, values)], out)

import click

from app.commands.options import (
    SWEEP_METHODS,
    function_option,
    grid_points_option,
    methods_from,
    n_range_option,
    out_option,
    run_config,
)
from app.schemas import RobustnessRecord, SweepRecord, TransformRecord
from app.services.storage import export_csv
from app.workers.robustness import robustness_run
from app.workers.sweeps import run_sweep, transform_run


def _sweep(function_ids, method_names, n_range, grid_points, out, partition):
    n_from, n_to, step = n_range
    config = run_config(
        function_ids=list(function_ids),
        methods=methods_from(method_names),
        n_from=n_from,
        n_to=n_to,
        step=step,
        grid_points=grid_points,
        output_path=out,
    )
    records = []
    for function_id in config.function_ids:
        records.extend(
            run_sweep(
                function_id,
                config.methods,
                config.n_from,
                config.n_to,
                config.step,
                grid_points=config.grid_points,
                partition=partition,
            )
        )
    export_csv(records, config.output_path, record_type=SweepRecord)


@click.command("sweep")
@function_option
@click.option(
    "--method", "method_names", type=click.Choice(SWEEP_METHODS), multiple=True,
    default=("ci1", "ci2", "swi1", "swi2"), show_default=True, help="Method; repeatable.",
)
@n_range_option("10..40")
@grid_points_option
@out_option
def sweep(function_ids, method_names, n_range, grid_points, out):
    """Max and cumulative error against n."""
    _sweep(function_ids, method_names, n_range, grid_points, out, partition=False)


@click.command("partition")
@function_option
@click.option(
    "--method", "method_names", type=click.Choice(SWEEP_METHODS), multiple=True,
    default=("ci1", "ci2", "swi1", "swi2"), show_default=True, help="Method; repeatable.",
)
@n_range_option("30..120")
@grid_points_option
@out_option
def partition(function_ids, method_names, n_range, grid_points, out):
    """Cumulative error split into the endpoint regions |x| >= 0.5 and the central part."""
    _sweep(function_ids, method_names, n_range, grid_points, out, partition=True)


@click.command("robustness")
@function_option
@click.option("--kind", type=click.Choice(["1", "2"]), multiple=True, default=("1", "2"), show_default=True)
@click.option("--n", "n", type=int, default=12, show_default=True)
@click.option("--digits", type=int, default=2, show_default=True, help="Significant digits kept in the data.")
@grid_points_option
@out_option
def robustness(function_ids, kind, n, digits, grid_points, out):
    """SWI built from rounded data against SWI built from exact data."""
    config = run_config(
        function_ids=list(function_ids), n_from=n, n_to=n, digits=digits, grid_points=grid_points, output_path=out
    )
    records = [
        robustness_run(function_id, int(k), n, config.digits, grid_points=config.grid_points)
        for function_id in config.function_ids
        for k in kind
    ]
    export_csv(records, config.output_path, record_type=RobustnessRecord)


@click.command("transform")
@click.option("--function", "function_id", type=int, default=1, show_default=True)
@click.option("--n", "n", type=int, default=12, show_default=True)
@grid_points_option
@out_option
def transform(function_id, n, grid_points, out):
    """The deformed functions g1(z), g2(z) on the z-grid next to f(z)."""
    config = run_config(function_ids=[function_id], n_from=n, n_to=n, grid_points=grid_points, output_path=out)
    export_csv(transform_run(function_id, n, config.grid_points), config.output_path, record_type=TransformRecord)

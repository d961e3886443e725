import click

from app.commands.options import grid_points_option, out_option, run_config
from app.schemas import Family, Metric
from app.services.benchmarks.reference import EPSILONS
from app.services.storage import export_csv, write_rows
from app.workers.tables import minimal_degree, table2, table2_rows


@click.command("min-degree")
@click.option("--function", "function_id", type=int, default=1, show_default=True)
@click.option("--family", type=click.Choice([f.value for f in Family]), default=Family.SWI.value, show_default=True)
@click.option("--metric", type=click.Choice([m.value for m in Metric]), default=Metric.MAX.value, show_default=True)
@click.option("--epsilon", type=float, multiple=True, default=EPSILONS, show_default=True, help="Repeatable.")
@click.option("--n-max", type=int, default=None, show_default="MIN_DEGREE_N_MAX or 700")
@grid_points_option
@out_option
def min_degree(function_id, family, metric, epsilon, n_max, grid_points, out):
    """Smallest n whose family-best error falls below each epsilon."""
    config = run_config(
        function_ids=[function_id], epsilons=list(epsilon), n_max=n_max, grid_points=grid_points, output_path=out
    )
    records = [
        minimal_degree(function_id, family, metric, eps, config.n_max, config.grid_points)
        for eps in config.epsilons
    ]
    export_csv(records, config.output_path)


@click.command("table2")
@click.option("--function", "function_ids", type=int, multiple=True, default=tuple(range(1, 11)), help="Repeatable; all ten by default.")
@click.option("--epsilon", type=float, multiple=True, default=EPSILONS, show_default=True, help="Repeatable.")
@click.option("--n-max", type=int, default=None, show_default="MIN_DEGREE_N_MAX or 700")
@click.option("--reference", is_flag=True, help="Add the reference degree next to every cell.")
@grid_points_option
@out_option
def table2_command(function_ids, epsilon, n_max, reference, grid_points, out):
    """Minimal degrees for every function, metric, epsilon and family; NR marks cells not reached."""
    config = run_config(
        function_ids=list(function_ids), epsilons=list(epsilon), n_max=n_max, grid_points=grid_points, output_path=out
    )
    cells = table2(config.function_ids, config.epsilons, config.n_max, config.grid_points)
    header, rows = table2_rows(cells, reference=reference)
    write_rows(header, rows, config.output_path)

"""Option parsing shared by the subcommands."""
import re
from typing import List, Optional, Tuple

import click

from app.core.config import settings
from app.schemas import Method, RunConfig

METHOD_NAMES = {
    "classical": Method.CLASSICAL_EQUID,
    "bary": Method.BARY_EQUID,
    "ci1": Method.CI1,
    "ci2": Method.CI2,
    "swi1": Method.SWI1,
    "swi2": Method.SWI2,
    "avg-ci": Method.AVG_CI,
    "avg-swi": Method.AVG_SWI,
}

INTERPOLATE_METHODS = ("classical", "bary", "ci1", "ci2", "swi1", "swi2")
SWEEP_METHODS = ("ci1", "ci2", "swi1", "swi2", "avg-ci", "avg-swi", "classical")

_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*(?::\s*(\d+)\s*)?)?$")


def parse_n_range(ctx, param, value: Optional[str]) -> Optional[Tuple[int, int, int]]:
    """'A..B[:step]' or a single degree 'A'."""
    if value is None:
        return None
    match = _RANGE.match(value)
    if not match:
        raise click.BadParameter(f"expected A..B[:step], got {value!r}")
    start = int(match.group(1))
    stop = int(match.group(2)) if match.group(2) else start
    step = int(match.group(3)) if match.group(3) else 1
    return start, stop, step


def parse_interval(ctx, param, value: Optional[str]) -> Optional[Tuple[float, float]]:
    if value is None:
        return None
    try:
        a, b = (float(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected a,b, got {value!r}") from None
    return a, b


def methods_from(names) -> List[Method]:
    return [METHOD_NAMES[name] for name in names]


def grid_points_option(fn):
    return click.option(
        "--grid-points",
        type=int,
        default=None,
        show_default="SWI_GRID_POINTS or 10001",
        help="Evaluation grid size (odd, >= 3).",
    )(fn)


def out_option(fn):
    return click.option(
        "--out", "out", type=click.Path(dir_okay=False), default=None, help="CSV destination (stdout when omitted)."
    )(fn)


def function_option(fn):
    return click.option(
        "--function", "function_ids", type=int, multiple=True, default=(1,), show_default=True,
        help="Benchmark id 1..10; repeatable.",
    )(fn)


def n_range_option(default: str):
    return click.option(
        "--n-range", "--n", "n_range", callback=parse_n_range, default=default, show_default=True,
        help="Degrees A..B[:step].",
    )


def run_config(**fields) -> RunConfig:
    """Validated run configuration; the grid falls back to settings."""
    if fields.get("grid_points") is None:
        fields["grid_points"] = settings.SWI_GRID_POINTS
    if fields.get("n_max") is None:
        fields["n_max"] = settings.MIN_DEGREE_N_MAX
    return RunConfig(**{k: v for k, v in fields.items() if v is not None})

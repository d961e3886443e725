import sys

import click

from app.commands.experiments import partition, robustness, sweep, transform
from app.commands.interpolate import interpolate
from app.commands.tables import min_degree, table2_command
from app.core.errors import NotReachedError


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Symmetric wave interpolation and its benchmark harness."""


cli.add_command(interpolate)
cli.add_command(sweep)
cli.add_command(partition)
cli.add_command(min_degree)
cli.add_command(table2_command)
cli.add_command(robustness)
cli.add_command(transform)


def main(argv=None) -> int:
    """Run the CLI; 0 on success, 1 on usage or input errors, 2 on numerical failures."""
    try:
        result = cli.main(args=argv, prog_name="swi", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 1
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except NotReachedError as e:
        click.echo(f"Error: {e} (best error {e.best_error:.3e}, n_max {e.n_max})", err=True)
        return 2
    except ArithmeticError as e:
        click.echo(f"Error: {e}", err=True)
        return 2
    except (ValueError, OSError) as e:
        click.echo(f"Error: {e}", err=True)
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(main())

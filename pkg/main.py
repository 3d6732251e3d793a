"""
This file configures logging and builds the command-line interface, registering
every feature command group of the toolkit.

Commands:
    - matrix
    - basis, width, verify, sample
    - classify
    - forest-degree
    - reduce, replay, witness
    - reproduce-table
"""

import logging

import click

from app.core.config import settings

from app.matrix.commands import matrix_command
from app.basis.commands import basis_command, sample_command, verify_command, width_command
from app.classify.commands import classify_command
from app.forest.commands import forest_degree_command
from app.families.commands import reduce_command, replay_command, witness_command
from app.table.commands import reproduce_table_command

# Logging Configuration
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s"
)
logger = logging.getLogger(__name__)


def create_cli() -> click.Group:
    """
    Application factory for the command-line interface.
    """
    @click.group(help="Markov bases of binary graph models.")
    @click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
    def cli(verbose: bool):
        if verbose:
            logging.getLogger().setLevel(logging.DEBUG)

    # Commands
    cli.add_command(matrix_command)
    cli.add_command(basis_command)
    cli.add_command(width_command)
    cli.add_command(verify_command)
    cli.add_command(sample_command)
    cli.add_command(classify_command)
    cli.add_command(forest_degree_command)
    cli.add_command(reduce_command)
    cli.add_command(replay_command)
    cli.add_command(witness_command)
    cli.add_command(reproduce_table_command)

    return cli

cli = create_cli()

if __name__ == "__main__":
    cli()

import click

from src.commands import COMMANDS
from src.utils import get_logger

logger = get_logger(__name__)


@click.group()
def cli():
    """Topological symmetry groups of complete graphs embedded in S^3."""
    pass


for command in COMMANDS:
    cli.add_command(command)


if __name__ == "__main__":
    cli()

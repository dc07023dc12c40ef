"""
==========================
Command line definitions
==========================

Sets up the ``click`` commands exposed by ``python -m src``.

Every verb prints to standard output only. A negative mathematical answer
from ``check``, ``auto`` or ``selftest`` exits with status 1; malformed
input and violated preconditions exit with status 2 and a one-line message
on the error stream.

**Classes**
    :class BaseCommand: Inherits from click.Command and adds the options in `output_options`
    :class EnumerationCommand: Inherits from BaseCommand and adds the options in `enumeration_options`

"""
__docformat__ = 'reStructuredText'

from functools import wraps

import click

from src.automorphisms.cycle_types import (CycleType, cycle_type_of,
                                           is_realizable)
from src.classification.enumeration import realizing_vertex_counts
from src.classification.theorems import check
from src.errors import DomainError, TSGError
from src.groups.naming import display_name, parse_group, pretty_name
from src.utils import get_logger, load_config, to_json, validate_yaml_or_json
from src.validation import run_selftest
from src.visualization.tables import emit_row_json, emit_table

logger = get_logger(__name__)


class DomainUsageError(click.ClickException):
    exit_code = 2


def handle_domain_errors(command):
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except TSGError as e:
            raise DomainUsageError(str(e))
    return wrapper


def exit_with_answer(realizable: bool):
    click.get_current_context().exit(0 if realizable else 1)


output_options = [
    click.Option(("--pretty",), is_flag=True, default=False, help="Print group names with Unicode typography"),
]

enumeration_options = [
    click.Option(("--include-trivial", "include_trivial"), is_flag=True, default=False,
                 help="Also list the trivial group (only for n > 6)"),
]


class BaseCommand(click.Command):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.params = self.params + output_options


class EnumerationCommand(BaseCommand):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.params = self.params + enumeration_options


@click.command(cls=EnumerationCommand, name="classify")
@click.argument("n", type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "md", "csv"]), default="json")
@handle_domain_errors
def classify_command(n, fmt, pretty, include_trivial):
    """All groups realizable as TSG+ of an embedding of K_N."""
    if fmt == "json":
        if n < 2:
            raise DomainError(f"n = {n}: complete graphs need at least 2 vertices")
        click.echo(emit_row_json(n, include_trivial, pretty))
    else:
        click.echo(emit_table(n, n, fmt, include_trivial, pretty))


@click.command(cls=BaseCommand, name="check")
@click.argument("n", type=int)
@click.argument("group")
@click.option("--format", "fmt", type=click.Choice(["json", "md"]), default="json")
@handle_domain_errors
def check_command(n, group, fmt, pretty):
    """Whether GROUP is TSG+ of some embedding of K_N, and which clause decides it."""
    result = check(n, parse_group(group))
    if fmt == "md":
        click.echo(result.summary())
    else:
        datum = result.to_dict()
        if pretty:
            datum["group"] = pretty_name(result.group)
        datum["summary"] = result.summary()
        click.echo(to_json(datum))
    exit_with_answer(result.realizable)


def _read_automorphism(n, text):
    if "[" in text:
        return CycleType.from_text(text, n)
    try:
        images = [int(image) for image in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"{text!r} is neither a cycle type like '[9,3]+f0' "
                                 f"nor a comma-separated image list", param_hint="CYCLETYPE")
    ct = cycle_type_of(images)
    if ct.n != n:
        raise DomainError(f"the permutation acts on {ct.n} vertices, not {n}")
    return ct


@click.command(name="auto")
@click.argument("n", type=int)
@click.argument("cycletype")
@click.argument("m", type=int)
@click.option("--format", "fmt", type=click.Choice(["md", "json"]), default="md")
@handle_domain_errors
def auto_command(n, cycletype, m, fmt):
    """Whether an automorphism of K_N (cycle type or image list) of order M is induced by a homeomorphism."""
    verdict = is_realizable(_read_automorphism(n, cycletype), m)
    click.echo(verdict.summary() if fmt == "md" else to_json(verdict.to_dict()))
    exit_with_answer(verdict.realizable)


@click.command(cls=EnumerationCommand, name="table")
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.option("--format", "fmt", type=click.Choice(["md", "csv", "json"]), default=None,
              help="Defaults to table.default_format in the config")
@handle_domain_errors
def table_command(a, b, fmt, pretty, include_trivial):
    """The four-column group table for K_A ... K_B."""
    fmt = fmt or load_config()["table"]["default_format"]
    click.echo(emit_table(a, b, fmt, include_trivial, pretty))


@click.command(cls=BaseCommand, name="graphs")
@click.argument("group")
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "md"]), default="json")
@handle_domain_errors
def graphs_command(group, a, b, fmt, pretty):
    """Every n in [A, B] for which K_n has an embedding with TSG+ = GROUP."""
    g = parse_group(group)
    counts = realizing_vertex_counts(g, a, b)
    name = pretty_name(g) if pretty else display_name(g)
    if fmt == "json":
        click.echo(to_json({"group": name, "from": a, "to": b, "n": counts}))
    else:
        click.echo(f"{name}: " + (", ".join(f"K_{n}" for n in counts) or "None"))


@click.command(name="selftest")
@click.option("--config", type=str, default=None, callback=validate_yaml_or_json,
              help="YAML path or JSON string merged over the default config")
@handle_domain_errors
def selftest_command(config):
    """Diffs the enumeration against the catalog and runs the property suites."""
    results = run_selftest(config)
    for result in results:
        click.echo(str(result))
    exit_with_answer(all(result.passed for result in results))


COMMANDS = [classify_command,
            check_command,
            auto_command,
            table_command,
            graphs_command,
            selftest_command]

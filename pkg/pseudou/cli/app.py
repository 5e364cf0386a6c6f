"""
click group shared by every pseudou subcommand
"""
import logging
from typing import Any
from typing import Optional
from collections import namedtuple

import click

from .tables import format_table
from .. import __version__
from ..config import OUTPUT_FORMATS
from ..config import RunConfig
from ..config import load_config
from ..exceptions import PseudoUError
from ..logging import configure_logging
from ..utils.serializers import dumps
from ..utils.serializers import loads

logger = logging.getLogger(__name__)

CliState = namedtuple("CliState", ("config", "input_path", "output_path"))


class PseudoUGroup(click.Group):
    """Maps PseudoUError to its exit code."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except PseudoUError as err:
            logger.error("command failed", extra={"error": type(err).__name__, "exit_code": err.exit_code})
            click.echo(str(err), err=True)
            ctx.exit(err.exit_code)


@click.group(cls=PseudoUGroup)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--output", "output_path", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--tol", type=float, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--precision", type=int, default=None)
@click.option("--threads", "n_threads", type=int, default=None)
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None)
@click.option("--verbose", "-v", count=True)
@click.version_option(version=__version__)
@click.pass_context
def main(ctx, config_path, input_path, output_path, tol, seed, precision, n_threads, output_format, verbose):
    """Pseudo-unitary phases, commutator decompositions and conformal-block signatures."""
    config = load_config(
        config_path,
        TOLERANCE=tol,
        SEED=seed,
        PRECISION_BITS=precision,
        N_THREADS=n_threads,
        OUTPUT=output_format,
        LOG_LEVEL={0: None, 1: "INFO"}.get(verbose, "DEBUG"),
    )
    configure_logging(config.LOG_LEVEL)
    ctx.obj = CliState(config, input_path, output_path)


def state(ctx) -> CliState:
    return ctx.find_root().obj


def run_config(ctx) -> RunConfig:
    return state(ctx).config


def read_input(ctx) -> Any:
    """JSON document from --input, else stdin."""
    path = state(ctx).input_path
    if path is not None:
        with open(path, "r") as stream:
            return loads(stream.read())
    return loads(click.get_text_stream("stdin").read())


def emit(ctx, data: Any, title: Optional[str] = None):
    current = state(ctx)
    if current.config.OUTPUT == "json":
        text = dumps(data)
    else:
        text = format_table(data, title=title)
    if current.output_path is None:
        click.echo(text)
        return
    with open(current.output_path, "w") as stream:
        stream.write(text + "\n")

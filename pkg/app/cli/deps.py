"""
Shared CLI plumbing

This module provides the helpers every command module uses to turn flags into
inputs and results into artifacts.

Main Components
1. **common options**: `graph_option`, `format_option`, `out_option`, budget
   flags, applied as decorators on each command.
2. **resolve_graph()**: Loads `--graph` as a file or a catalog name.
3. **build_config()**: Builds the validated `RunConfig` of one invocation.
4. **emit()**: Writes a pydantic response as JSON, CSV or text.
5. **handle_errors()**: Decorator that maps toolkit exceptions to exit codes.

Exit codes
- 0 success
- 1 mismatch or verification failure (raised by commands as `Mismatch`)
- 2 usage or parse error
- 3 budget exhaustion; partial output has already been written
"""
from __future__ import annotations

import functools
import io
import logging
from pathlib import Path
from typing import Any, Callable, Iterable

import click
import pandas as pd
from pydantic import BaseModel, ValidationError

from app.core.errors import ArgumentError, BudgetExceeded, CapabilityError, PreconditionViolation
from app.models.graph import Graph
from app.models.run import RunConfig
from app.models.table import Move
from app.services.catalog import named
from app.services.graph_io import format_tableau, load_graph
from app.services.marginals import is_move

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class Mismatch(Exception):
    """A computed result disagrees with the expected one."""


# ==========================================================
# Options
# ==========================================================

def graph_option(fn: Callable) -> Callable:
    return click.option(
        "--graph", "graph_path", required=True,
        help="Graph file (text or JSON) or a catalog name such as C5, K23, P4.",
    )(fn)


def format_option(fn: Callable) -> Callable:
    return click.option(
        "--format", "fmt", type=click.Choice(["json", "csv", "text"]), default=None,
        help="Output format; defaults to OUTPUT_FORMAT.",
    )(fn)


def out_option(fn: Callable) -> Callable:
    return click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file; stdout when absent.")(fn)


def budget_options(fn: Callable) -> Callable:
    fn = click.option("--budget", type=int, default=None, help="Monomial budget per degree.")(fn)
    fn = click.option("--fiber-budget", type=int, default=None, help="Max tables per fiber.")(fn)
    fn = click.option("--time-budget", type=float, default=None, help="Seconds; 0 disables.")(fn)
    return fn


# ==========================================================
# Inputs
# ==========================================================

def resolve_graph(source: str) -> Graph:
    """
    Load a graph from a file path or look it up in the catalog.

    Raises:
        ParseError: If the file is malformed.
        ArgumentError: If neither a file nor a catalog name matches.
    """
    if Path(source).is_file():
        return load_graph(source)
    return named(source)


def build_config(command: str, **flags: Any) -> RunConfig:
    """RunConfig from the non-None flags; missing values fall back to settings."""
    aliases = {"budget": "monomial_budget", "fmt": "format"}
    data = {aliases.get(k, k): v for k, v in flags.items() if v is not None}
    try:
        return RunConfig(command=command, **data)
    except ValidationError as exc:
        raise click.UsageError(str(exc.errors()[0]["msg"]))


def checked_moves(g: Graph, moves: Iterable[Move]) -> list[Move]:
    """Re-validate every move before it is written."""
    moves = list(moves)
    bad = [m for m in moves if not is_move(g, m)]
    if bad:
        logger.error(f"{len(bad)} emitted moves fail the marginal check")
        raise ArgumentError(f"{bad[0]} is not a move of {g}")
    return moves


# ==========================================================
# Output
# ==========================================================

def _to_csv(payload: BaseModel) -> str:
    data = payload.model_dump(mode="json")
    records = next((v for v in data.values() if isinstance(v, list) and v and isinstance(v[0], dict)), None)
    frame = pd.DataFrame(records) if records is not None else pd.json_normalize(data)
    buf = io.StringIO()
    frame.to_csv(buf, index=False)
    return buf.getvalue()


def render(payload: BaseModel, fmt: str, text: Callable[[BaseModel], str] | None = None) -> str:
    if fmt == "json":
        return payload.model_dump_json(indent=2) + "\n"
    if fmt == "csv":
        return _to_csv(payload)
    if text is not None:
        return text(payload)
    return "\n".join(f"{k}: {v}" for k, v in payload.model_dump(mode="json").items()) + "\n"


def emit(config: RunConfig, payload: BaseModel, text: Callable[[BaseModel], str] | None = None) -> None:
    """Write `payload` to --out or stdout in the configured format."""
    rendered = render(payload, config.format, text)
    if config.out:
        Path(config.out).write_text(rendered, encoding="utf-8")
        logger.info(f"wrote {config.command} output to {config.out}")
    else:
        click.echo(rendered, nl=False)


def moves_as_tableaux(moves: Iterable[Move]) -> str:
    return "\n".join(format_tableau(m) for m in moves)


# ==========================================================
# Errors
# ==========================================================

def handle_errors(fn: Callable) -> Callable:
    """
    Map toolkit exceptions to exit codes. Budget failures are expected to have
    written their partial output before raising.
    """
    @functools.wraps(fn)
    def inner(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except Mismatch as exc:
            click.echo(f"mismatch: {exc}", err=True)
            raise SystemExit(EXIT_MISMATCH)
        except BudgetExceeded as exc:
            click.echo(f"budget exhausted: {exc}", err=True)
            raise SystemExit(EXIT_BUDGET)
        except (ArgumentError, CapabilityError, PreconditionViolation) as exc:
            click.echo(f"error: {exc}", err=True)
            raise SystemExit(EXIT_USAGE)
    return inner

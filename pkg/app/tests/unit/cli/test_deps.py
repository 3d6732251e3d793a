import json

import click
import pytest
from pydantic import BaseModel

from app.cli.deps import (
    EXIT_BUDGET,
    EXIT_MISMATCH,
    EXIT_USAGE,
    Mismatch,
    build_config,
    checked_moves,
    handle_errors,
    render,
    resolve_graph,
)
from app.core.errors import ArgumentError, BudgetExceeded, CapabilityError, ParseError, PreconditionViolation
from app.models.table import Move, Table
from app.services import catalog


class Item(BaseModel):
    a: int
    b: str


class Payload(BaseModel):
    name: str
    items: list[Item]


PAYLOAD = Payload(name="x", items=[Item(a=1, b="p"), Item(a=2, b="q")])


def test_resolve_catalog_name():
    assert resolve_graph("C4") == catalog.cycle(4)
    assert resolve_graph("K2,3") == catalog.complete_bipartite(2, 3)


def test_resolve_file(write):
    path = write("g.txt", "3\n0 1\n1 2\n")
    assert resolve_graph(path) == catalog.path(3)


def test_resolve_unknown_name():
    with pytest.raises(ArgumentError):
        resolve_graph("Q9")


def test_build_config_aliases():
    """ Should map --budget and --format onto RunConfig fields."""
    config = build_config("basis", budget=10, fmt="text", out=None)
    assert config.monomial_budget == 10
    assert config.format == "text"
    assert config.out is None


def test_build_config_rejects_bad_budget():
    with pytest.raises(click.UsageError):
        build_config("basis", budget=0)


def test_checked_moves_rejects_non_moves(c4):
    bad = Move(Table(4, (0,)), Table(4, (15,)))
    with pytest.raises(ArgumentError):
        checked_moves(c4, [bad])


def test_render_json():
    data = json.loads(render(PAYLOAD, "json"))
    assert data["items"][1]["b"] == "q"


def test_render_csv_uses_first_record_list():
    assert render(PAYLOAD, "csv").splitlines() == ["a,b", "1,p", "2,q"]


def test_render_text_fallback_and_callback():
    assert render(PAYLOAD, "text").startswith("name: x\n")
    assert render(PAYLOAD, "text", lambda p: f"{p.name}!\n") == "x!\n"


@pytest.mark.parametrize("exc, code", [
    (Mismatch("diff"), EXIT_MISMATCH),
    (BudgetExceeded("too many", 5), EXIT_BUDGET),
    (ArgumentError("bad"), EXIT_USAGE),
    (ParseError("bad", line=3), EXIT_USAGE),
    (CapabilityError("too big"), EXIT_USAGE),
    (PreconditionViolation("lower"), EXIT_USAGE),
])
def test_handle_errors_exit_codes(exc, code):
    @handle_errors
    def command():
        raise exc

    with pytest.raises(SystemExit) as info:
        command()
    assert info.value.code == code


def test_handle_errors_passes_results_through():
    @handle_errors
    def command():
        return 7

    assert command() == 7

"""
Run configuration and the checked-in generator-count fixture.

Both are pydantic models: `RunConfig` is built once per CLI invocation from
the command flags (falling back to `settings`), and `TableFixture` is the
validated in-memory form of `app/fixtures/markov_table.csv`.
"""
from __future__ import annotations

import time
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from app.core.config import settings


class RunConfig(BaseModel):
    """
    Flags and budgets of one CLI job.

    Attributes:
        command (str): Subcommand name.
        graph_path (str | None): Input graph file.
        dmax (int | None): Largest degree to compute.
        bound (int | None): Externally justified width bound, if any.
        monomial_budget (int): Max monomials streamed per (graph, degree).
        fiber_budget (int): Max tables per enumerated fiber.
        time_budget (float): Wall-clock cap in seconds; 0 disables.
        seed (int): Random-walk seed.
        out (str | None): Output path; stdout when absent.
        format (str): `json`, `csv` or `text`.
    """
    command: str
    graph_path: str | None = None
    dmax: int | None = None
    bound: int | None = None
    monomial_budget: int = Field(default_factory=lambda: settings.MONOMIAL_BUDGET)
    fiber_budget: int = Field(default_factory=lambda: settings.FIBER_BUDGET)
    time_budget: float = Field(default_factory=lambda: settings.TIME_BUDGET_SECONDS)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    out: str | None = None
    format: Literal["json", "csv", "text"] = Field(default_factory=lambda: settings.OUTPUT_FORMAT)

    @field_validator("monomial_budget", "fiber_budget")
    @classmethod
    def _positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("budgets must be positive")
        return v

    @field_validator("time_budget")
    @classmethod
    def _nonnegative(cls, v: float) -> float:
        if v < 0:
            raise ValueError("time budget must be >= 0")
        return v

    def deadline(self) -> float | None:
        """Absolute `time.monotonic()` deadline, or None when uncapped."""
        return time.monotonic() + self.time_budget if self.time_budget > 0 else None


class FixtureRow(BaseModel):
    """
    One graph of the generator-count table.

    Attributes:
        graph (str): Catalog name, e.g. `K23`.
        n (int): Vertex count.
        edges (list[tuple[int, int]]): 0-based edge list.
        counts (dict[int, int]): Minimal generators per degree (zeros omitted).
        total (int): Printed total.
        width (int): Printed Markov width.
    """
    graph: str
    n: int
    edges: list[tuple[int, int]]
    counts: dict[int, int]
    total: int
    width: int

    @model_validator(mode="after")
    def _consistent(self) -> FixtureRow:
        if self.total != sum(self.counts.values()):
            raise ValueError(f"{self.graph}: total {self.total} != column sum {sum(self.counts.values())}")
        top = max((d for d, c in self.counts.items() if c), default=0)
        if top != self.width:
            raise ValueError(f"{self.graph}: width {self.width} != largest nonzero degree {top}")
        return self


class TableFixture(BaseModel):
    rows: list[FixtureRow]

    def row(self, name: str) -> FixtureRow:
        for r in self.rows:
            if r.graph == name:
                return r
        raise KeyError(name)

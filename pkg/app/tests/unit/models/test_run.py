import pytest
from pydantic import ValidationError

from app.models.run import FixtureRow, RunConfig


def test_run_config_falls_back_to_settings():
    """ Should take budgets and format from settings when flags are absent."""
    config = RunConfig(command="basis")
    assert config.monomial_budget > 0
    assert config.format in ("json", "csv", "text")
    assert config.deadline() is None or config.time_budget > 0


@pytest.mark.parametrize("field", ["monomial_budget", "fiber_budget"])
def test_run_config_rejects_nonpositive_budgets(field):
    with pytest.raises(ValidationError):
        RunConfig(command="basis", **{field: 0})


def test_run_config_rejects_negative_time_budget():
    with pytest.raises(ValidationError):
        RunConfig(command="basis", time_budget=-1)


def test_run_config_deadline_when_time_budget_set():
    """ Should return an absolute monotonic deadline."""
    config = RunConfig(command="basis", time_budget=5)
    assert config.deadline() is not None


def test_run_config_rejects_unknown_format():
    with pytest.raises(ValidationError):
        RunConfig(command="basis", format="xml")


def test_fixture_row_checks_total_and_width():
    """ Should reject rows whose total or width disagree with the counts."""
    FixtureRow(graph="K3", n=3, edges=[(0, 1), (0, 2), (1, 2)], counts={4: 1}, total=1, width=4)
    with pytest.raises(ValidationError):
        FixtureRow(graph="K3", n=3, edges=[(0, 1)], counts={4: 1}, total=2, width=4)
    with pytest.raises(ValidationError):
        FixtureRow(graph="K3", n=3, edges=[(0, 1)], counts={4: 1}, total=1, width=6)

from dataclasses import replace

import pytest

from app.core.errors import ArgumentError, BudgetExceeded, ParseError
from app.models.certificate import ReductionCertificate, ReductionStep
from app.models.table import Move, Table
from app.services import catalog
from app.services.certificates import (
    CatalogExhausted,
    certificate_from_json,
    certificate_to_json,
    check_same_fiber,
    load_certificate,
    replay_certificate,
    search_shared_cell,
)
from app.services.witnesses import km_witness

START = Table(4, (0, 10))
END = Table(4, (2, 8))
QUADRIC = Move(END, START)


@pytest.fixture
def cert():
    return ReductionCertificate(START, END, (ReductionStep(QUADRIC, 1),))


def test_single_step_certificate(cert, c4):
    assert replay_certificate(c4, cert).valid


def test_search_reaches_the_target():
    reached, steps = search_shared_cell(START, END, [QUADRIC])
    assert reached == END
    assert steps == [ReductionStep(QUADRIC, 1)]


def test_search_from_the_target_is_empty():
    assert search_shared_cell(END, END, [QUADRIC]) == (END, [])


def test_json_round_trip(cert, write):
    path = write("cert.json", certificate_to_json(cert))
    assert load_certificate(path) == cert


def test_tampered_end_is_rejected(cert, c4):
    verdict = replay_certificate(c4, replace(cert, end=START))
    assert not verdict.valid
    assert "end table" in verdict.reason


def test_wrong_sign_leaves_orthant(c4):
    bad = ReductionCertificate(START, END, (ReductionStep(QUADRIC, -1),))
    verdict = replay_certificate(c4, bad)
    assert not verdict.valid
    assert "nonnegative" in verdict.reason


def test_high_degree_steps_are_rejected():
    """ Should refuse steps above degree 4 unless the cap is raised."""
    k4 = catalog.complete(4)
    move = km_witness(4)
    cert = ReductionCertificate(move.minus, move.plus, (ReductionStep(move, 1),))
    assert not replay_certificate(k4, cert).valid
    assert replay_certificate(k4, cert, max_degree=6).valid


def test_empty_catalog_is_exhausted():
    with pytest.raises(CatalogExhausted):
        search_shared_cell(START, END, [])


def test_search_budget():
    with pytest.raises(BudgetExceeded):
        search_shared_cell(START, END, [QUADRIC], cap=1)


def test_different_fibers(c4):
    with pytest.raises(ArgumentError):
        check_same_fiber(c4, Table(4, (0,)), Table(4, (1,)))


@pytest.mark.parametrize("text", [
    "{",
    '{"n": 4, "start": ["12"], "end": ["0000"]}',
    '{"n": 4, "start": ["1x01"], "end": ["0000"]}',
])
def test_malformed_json(text):
    with pytest.raises(ParseError) as exc:
        certificate_from_json(text)
    assert exc.value.line == 1

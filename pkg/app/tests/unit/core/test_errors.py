from app.core.errors import ArgumentError, BudgetExceeded, MarkovError, ParseError


def test_parse_error_carries_line_number():
    """ Should prefix the message with the offending line."""
    exc = ParseError("bad edge", line=3)
    assert exc.line == 3
    assert str(exc) == "line 3: bad edge"
    assert isinstance(exc, ArgumentError)


def test_parse_error_without_line():
    exc = ParseError("empty file")
    assert exc.line is None
    assert str(exc) == "empty file"


def test_budget_exceeded_keeps_partial_result():
    """ Should expose the count and whatever was computed before stopping."""
    exc = BudgetExceeded("fiber too large", 11, partial=[1, 2])
    assert exc.count == 11
    assert exc.partial == [1, 2]
    assert "stopped after 11" in str(exc)
    assert isinstance(exc, MarkovError)

import pytest
import dupy as dp


def test_exponent_vectors():
    vectors = list(dp.exponent_vectors(2, 2))
    assert vectors == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert list(dp.exponent_vectors(0, 3)) == [()]
    assert list(dp.exponent_vectors(3, -1)) == []
    assert len(list(dp.exponent_vectors(3, 4))) == 35


@pytest.mark.parametrize(
        "text,expected",
        [("1,2", ('1', '2')),
         (" 1/2 , -3 ", ('1/2', '-3')),
         ("zeta,,", ('zeta',)),
         ("", ())])
def test_parse_csv(text, expected):
    assert dp.parse_csv(text) == expected


def test_check_result():
    assert dp.CheckResult(True)
    result = dp.CheckResult(False, witness=3, note="failed")
    assert not result
    assert result.details == {}


def test_parse_error_position():
    error = dp.ParseError("unexpected '*'", 4)
    assert error.position == 4
    assert "position 4" in str(error)
    assert dp.ParseError("empty").position is None


@pytest.mark.parametrize(
        "error,base",
        [(dp.ParseError, ValueError),
         (dp.MissingRootsError, dp.SpecError),
         (dp.ArityError, dp.SpecError),
         (dp.SpecMismatchError, ValueError),
         (dp.DivisionByZeroError, ZeroDivisionError),
         (dp.UndecidedError, dp.UnsupportedError),
         (dp.UnsupportedError, NotImplementedError),
         (dp.ConstraintViolationError, ValueError)])
def test_hierarchy(error, base):
    assert issubclass(error, base)


def test_constraint_identity():
    error = dp.ConstraintViolationError("bad", identity="a = b")
    assert error.identity == "a = b"

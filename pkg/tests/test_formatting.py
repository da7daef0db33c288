import pytest

from utils.formatting import format_number, format_percent, format_value


@pytest.mark.parametrize(
    "value, expected",
    [
        (100.0, "100"),
        (90.00001, "90"),
        (0.123456, "0.1235"),
        (0.00005, "0.0001"),
        (-0.00001, "0"),
        (1e-12, "0"),
        (-3.25, "-3.25"),
        (6.123233995736766e-16, "0"),
    ],
)
def test_format_number(value, expected):
    assert format_number(value) == expected


@pytest.mark.parametrize(
    "value, expected",
    [(4, "4"), (4.0, "4"), (0.125, "0.13"), (2.5, "2.5"), (1234.567, "1234.57"), (0, "0")],
)
def test_format_value(value, expected):
    assert format_value(value) == expected


@pytest.mark.parametrize(
    "value, expected",
    [(50, "50.0"), (100 / 3, "33.3"), (0, "0.0"), (100, "100.0"), (12.25, "12.3"), (66.66666, "66.7")],
)
def test_format_percent(value, expected):
    assert format_percent(value) == expected

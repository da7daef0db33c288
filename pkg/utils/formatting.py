"""
Number formatting
Half-up decimal rounding with trailing zeros trimmed, for byte-stable output
"""

from decimal import Decimal, ROUND_HALF_UP
from functools import lru_cache

_PATH_QUANTUM = Decimal("0.0001")
_VALUE_QUANTUM = Decimal("0.01")
_PERCENT_QUANTUM = Decimal("0.1")


def _trim(quantized: Decimal) -> str:
    text = format(quantized, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        return "0"
    return text


def _round_half_up(value: float, quantum: Decimal) -> Decimal:
    # repr gives the shortest decimal that round-trips, so ties are decided on it
    return Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP)


@lru_cache(maxsize=65536)
def format_number(value: float) -> str:
    """Up to 4 decimals, half-up, trailing zeros trimmed: 90.00001 -> '90'"""
    return _trim(_round_half_up(value, _PATH_QUANTUM))


def format_value(value: float) -> str:
    """Raw values: up to 2 decimals, integers without a decimal point"""
    return _trim(_round_half_up(value, _VALUE_QUANTUM))


def format_percent(value: float) -> str:
    """Percentages: always exactly 1 decimal, half-up"""
    text = format(_round_half_up(value, _PERCENT_QUANTUM), "f")
    return "0.0" if text == "-0.0" else text

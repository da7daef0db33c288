"""
Tooltip text
Raw count and percentage per category, attached to glyphs in interactive output
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from models.errors import AllZeroComposition, NegativeSliceValue
from utils.formatting import format_percent, format_value


@dataclass(frozen=True, slots=True)
class TooltipText:
    """One "<category>: <raw> (<pct>%)" line per category, zero slices included"""

    lines: Tuple[str, ...]

    def text(self) -> str:
        return "\n".join(self.lines)

    def __str__(self) -> str:
        return self.text()


def tooltip_text(categories: Sequence[str], raw_values: Sequence[float]) -> TooltipText:
    """
    Build tooltip lines for one composition

    Percentages are rounded half-up to one decimal each; their sum is not
    forced to 100.
    """
    if len(categories) != len(raw_values):
        raise ValueError(f"{len(categories)} categories but {len(raw_values)} values")
    for value in raw_values:
        if value < 0:
            raise NegativeSliceValue(value=value)
    total = float(sum(raw_values))
    if total <= 0:
        raise AllZeroComposition()

    lines = tuple(
        f"{category}: {format_value(value)} ({format_percent(100.0 * value / total)}%)"
        for category, value in zip(categories, raw_values)
    )
    return TooltipText(lines=lines)

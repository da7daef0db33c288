"""
Panel layout
Row-major facet grid with shared position scales
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from config.settings import LAYOUT_PARAMETERS
from core.scales import LinearScale, fit_scale
from models.errors import PlotAreaTooSmall, RowsColsTooSmall
from models.geometry import Rect

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Panel:
    """
    One plotting panel

    Scatter panels carry x/y scales; map panels leave them None and are
    fitted to the projected extent instead. strip holds the facet label band.
    """

    rect: Rect
    x_scale: Optional[LinearScale] = None
    y_scale: Optional[LinearScale] = None
    facet_key: Optional[str] = None
    strip: Optional[Rect] = None
    row: int = 0
    col: int = 0


def grid_shape(n: int, rows: Optional[int] = None, cols: Optional[int] = None) -> Tuple[int, int]:
    """
    Resolve the facet grid for n panels

    Raises:
        RowsColsTooSmall: an explicit grid holds fewer than n cells
    """
    if n < 1:
        raise ValueError("facet layout needs at least one panel key")
    for name, value in (("rows", rows), ("cols", cols)):
        if value is not None and value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")

    if rows is None and cols is None:
        cols = math.ceil(math.sqrt(n))
        rows = math.ceil(n / cols)
    elif cols is None:
        cols = math.ceil(n / rows)
    elif rows is None:
        rows = math.ceil(n / cols)

    if rows * cols < n:
        raise RowsColsTooSmall(rows, cols, n)
    return rows, cols


def facet_layout(
    panel_keys: Sequence[Optional[str]],
    total_rect: Rect,
    rows: Optional[int] = None,
    cols: Optional[int] = None,
    *,
    x_values: Optional[Sequence[float]] = None,
    y_values: Optional[Sequence[float]] = None,
    expansion: float = LAYOUT_PARAMETERS["expansion"],
    gap: float = LAYOUT_PARAMETERS["facet_gap"],
    strip_height: float = 0.0,
) -> List[Panel]:
    """
    Lay out one panel per key, row-major, inside total_rect

    Args:
        panel_keys: Facet keys in first-appearance order ([None] when not faceted)
        total_rect: Plot area left after margins, legend and title
        rows, cols: Optional explicit grid
        x_values, y_values: Data for the shared position scales; omitted for maps
        expansion: Scale expansion fraction
        gap: Space between neighbouring cells
        strip_height: Height of the facet label band on top of each cell

    Returns:
        Panels in key order; every panel has the same scale domains
    """
    n = len(panel_keys)
    rows, cols = grid_shape(n, rows, cols)

    cell_w = (total_rect.w - (cols - 1) * gap) / cols
    cell_h = (total_rect.h - (rows - 1) * gap) / rows
    if cell_w <= 0 or cell_h - strip_height <= 0:
        raise PlotAreaTooSmall(total_rect.w, total_rect.h, f"{rows}x{cols} facet grid in")

    x_base = fit_scale(x_values, (0.0, 1.0), expansion) if x_values is not None else None
    y_base = fit_scale(y_values, (1.0, 0.0), expansion) if y_values is not None else None

    panels = []
    for index, key in enumerate(panel_keys):
        row, col = divmod(index, cols)
        x = total_rect.x + col * (cell_w + gap)
        y = total_rect.y + row * (cell_h + gap)
        strip = Rect(x, y, cell_w, strip_height) if strip_height > 0 else None
        rect = Rect(x, y + strip_height, cell_w, cell_h - strip_height)
        panels.append(
            Panel(
                rect=rect,
                x_scale=x_base.with_range(rect.x, rect.right) if x_base else None,
                y_scale=y_base.with_range(rect.bottom, rect.y) if y_base else None,
                facet_key=key,
                strip=strip,
                row=row,
                col=col,
            )
        )

    logger.debug(f"Laid out {n} panel(s) on a {rows}x{cols} grid, cell {cell_w:.1f}x{cell_h:.1f}")
    return panels

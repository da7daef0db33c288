"""
Glyph geometry
Proportional sectors and arc outlines in a glyph's own screen-space frame
"""

import math
from itertools import accumulate
from typing import List, Mapping, Sequence, Tuple

from models.errors import AllZeroComposition, FullCircleSector, NegativeSliceValue
from models.geometry import FULL_CIRCLE_TOLERANCE, TWO_PI, CirclePrimitive, GlyphGeometry, Point, Sector
from models.table import CompositionRow
from render.tooltips import tooltip_text
from utils.formatting import format_number


def normalize_slices(values: Sequence[float]) -> List[float]:
    """
    Relative magnitudes of a composition

    Zero entries keep proportion 0 so legends and tooltips can still list them.

    Raises:
        NegativeSliceValue: any value < 0
        AllZeroComposition: no value > 0
    """
    for value in values:
        if value < 0:
            raise NegativeSliceValue(value=value)
    total = math.fsum(values)
    if total <= 0:
        raise AllZeroComposition()
    return [value / total for value in values]


def _sector_bounds(proportions: Sequence[float]) -> List[Tuple[int, float, float]]:
    """(input index, start, end) for every nonzero proportion"""
    total = math.fsum(proportions)
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"proportions must sum to 1, got {total!r}")

    last = max(i for i, p in enumerate(proportions) if p > 0)
    bounds = []
    start = 0.0
    for i, cumulative in enumerate(accumulate(proportions)):
        if proportions[i] <= 0:
            continue
        end = TWO_PI if i == last else min(TWO_PI * cumulative, TWO_PI)
        # shares too small to survive rounding leave an empty interval
        if end <= start:
            continue
        bounds.append((i, start, end))
        start = end

    # one slice owning all but a rounding residue becomes the whole disc
    for i, lo, hi in bounds:
        if hi - lo >= TWO_PI - FULL_CIRCLE_TOLERANCE:
            return [(i, 0.0, TWO_PI)]
    return bounds


def sector_angles(proportions: Sequence[float]) -> List[Tuple[float, float]]:
    """
    Partition [0, 2*pi] clockwise from 12 o'clock in input order

    Zero proportions, and shares too small to survive rounding, produce no
    interval; the last end is exactly 2*pi. A slice within FULL_CIRCLE_TOLERANCE
    of the whole circle is returned alone as (0, 2*pi).
    """
    return [(start, end) for _, start, end in _sector_bounds(proportions)]


def angle_to_point(center: Point, radius: float, theta: float) -> Point:
    """Point on the circle at theta (0 = 12 o'clock, clockwise, y down)"""
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    cx, cy = center
    return cx + radius * math.sin(theta), cy - radius * math.cos(theta)


def sector_path(center: Point, radius: float, sector: Sector) -> str:
    """
    Path data for a pie slice: centre, line to arc start, clockwise arc, close

    Raises:
        FullCircleSector: the sector covers the whole circle
    """
    if sector.is_full_circle:
        raise FullCircleSector()

    sx, sy = angle_to_point(center, radius, sector.start_angle)
    ex, ey = angle_to_point(center, radius, sector.end_angle)
    large_arc = 1 if sector.sweep > math.pi else 0
    r = format_number(radius)
    return (
        f"M {format_number(center[0])} {format_number(center[1])} "
        f"L {format_number(sx)} {format_number(sy)} "
        f"A {r} {r} 0 {large_arc} 1 {format_number(ex)} {format_number(ey)} Z"
    )


def full_circle_path(center: Point, radius: float, fill: str) -> CirclePrimitive:
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    return CirclePrimitive(cx=center[0], cy=center[1], r=radius, fill=fill)


def build_glyph(
    row: CompositionRow,
    center: Point,
    radius: float,
    palette: Mapping[str, str],
    *,
    interactive: bool = False,
) -> GlyphGeometry:
    """
    Assemble one pie-glyph

    Args:
        row: Composition whose values follow the palette's category order
        center: Glyph centre, already in screen space
        radius: Screen radius (fixed or from the size scale)
        palette: Ordered category -> colour map covering every category
        interactive: Attach tooltip text

    Returns:
        GlyphGeometry with one sector per nonzero category
    """
    categories = list(palette)
    if len(categories) != len(row.values):
        raise ValueError(
            f"row {row.row_id} has {len(row.values)} slice values for {len(categories)} categories"
        )
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")

    proportions = normalize_slices(row.values)
    sectors = tuple(
        Sector(
            start_angle=start,
            end_angle=end,
            category=categories[i],
            raw_value=row.values[i],
            proportion=proportions[i],
            fill=palette[categories[i]],
        )
        for i, start, end in _sector_bounds(proportions)
    )

    tooltip = tooltip_text(categories, row.values).text() if interactive else None
    return GlyphGeometry(
        center=(float(center[0]), float(center[1])),
        radius=float(radius),
        sectors=sectors,
        row_id=row.row_id,
        tooltip=tooltip,
        label=row.label,
    )

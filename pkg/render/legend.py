"""
Legend layout
Colour swatches top-aligned in the right margin, size circles below them
"""

from typing import Optional, Sequence, Tuple

from config.settings import LAYOUT_PARAMETERS
from core.scales import SizeScale
from models.geometry import Rect
from render.scene import LegendGeometry, SizeCircle, Swatch


def legend_area(plot_rect: Rect, share: float = LAYOUT_PARAMETERS["legend_share"]) -> Rect:
    """The fixed right-hand share of the canvas reserved for the legend"""
    width = plot_rect.w * share
    return Rect(plot_rect.right - width, plot_rect.y, width, plot_rect.h)


def layout_legend(
    entries: Sequence[Tuple[str, str]],
    size_scale: Optional[SizeScale],
    plot_rect: Rect,
    title: Optional[str] = None,
    size_title: Optional[str] = None,
) -> LegendGeometry:
    """
    Place legend items

    Args:
        entries: (category, colour) pairs in legend order
        size_scale: Adds three reference circles (domain min, mid, max) when given
        plot_rect: The whole canvas; the legend takes its right margin
        title: Optional heading above the swatches
        size_title: Optional heading above the size circles

    With no entries the legend keeps its area and title but has no swatches.
    """
    area = legend_area(plot_rect)
    pad = LAYOUT_PARAMETERS["legend_padding"]
    font = LAYOUT_PARAMETERS["font_size"]
    swatch = LAYOUT_PARAMETERS["swatch_size"]
    spacing = LAYOUT_PARAMETERS["swatch_spacing"]

    left = area.x + pad
    y = area.y + LAYOUT_PARAMETERS["margin_top"]

    title_at = None
    if title:
        title_at = (left, y + font)
        y += spacing

    swatches = []
    for category, color in entries:
        swatches.append(
            Swatch(
                category=category,
                color=color,
                rect=Rect(left, y, swatch, swatch),
                label_at=(left + swatch + pad / 2, y + swatch - LAYOUT_PARAMETERS["label_offset"]),
            )
        )
        y += spacing

    size_title_at = None
    circles = []
    if size_scale is not None:
        y += spacing / 2
        if size_title:
            size_title_at = (left, y + font)
            y += spacing
        r_max = size_scale.r_max
        for value in size_scale.reference_values():
            radius = size_scale.radius(value)
            circles.append(
                SizeCircle(
                    value=value,
                    radius=radius,
                    center=(left + r_max, y + radius),
                    label_at=(left + 2 * r_max + pad / 2, y + radius + font / 3),
                )
            )
            y += 2 * radius + pad / 2

    return LegendGeometry(
        area=area,
        swatches=tuple(swatches),
        title=title or None,
        title_at=title_at,
        size_title=size_title if size_scale is not None else None,
        size_title_at=size_title_at,
        size_circles=tuple(circles),
    )

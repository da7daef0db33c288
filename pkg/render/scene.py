"""
Scene model
Everything the renderer draws, already in screen coordinates
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from config.settings import THEME
from core.layout import Panel
from models.geometry import GlyphGeometry, Point, Rect


@dataclass(frozen=True, slots=True)
class Swatch:
    category: str
    color: str
    rect: Rect
    label_at: Point


@dataclass(frozen=True, slots=True)
class SizeCircle:
    value: float
    radius: float
    center: Point
    label_at: Point


@dataclass(frozen=True)
class LegendGeometry:
    """Colour swatches and the optional size legend, inside the right margin"""

    area: Rect
    swatches: Tuple[Swatch, ...]
    title: Optional[str] = None
    title_at: Optional[Point] = None
    size_title: Optional[str] = None
    size_title_at: Optional[Point] = None
    size_circles: Tuple[SizeCircle, ...] = ()

    @property
    def categories(self) -> Tuple[str, ...]:
        return tuple(swatch.category for swatch in self.swatches)


@dataclass(frozen=True)
class PanelScene:
    """
    One panel's drawable content

    geo_paths is empty for scatter panels; breaks are empty for map panels.
    """

    panel: Panel
    glyphs: Tuple[GlyphGeometry, ...] = ()
    x_breaks: Tuple[float, ...] = ()
    y_breaks: Tuple[float, ...] = ()
    geo_paths: Tuple[str, ...] = ()

    @property
    def draws_axes(self) -> bool:
        return self.panel.x_scale is not None and self.panel.y_scale is not None


@dataclass(frozen=True)
class Scene:
    width: float
    height: float
    panels: Tuple[PanelScene, ...]
    legend: LegendGeometry
    plot_area: Rect
    title: str = ""
    x_label: str = ""
    y_label: str = ""
    border_color: str = THEME["glyph_border"]
    border_width: float = 1.0
    alpha: float = 1.0
    clip_glyphs: bool = False
    map_fill: str = THEME["map_fill"]
    map_stroke: str = THEME["map_stroke"]

    def __post_init__(self) -> None:
        for index, panel_scene in enumerate(self.panels):
            for other in self.panels[index + 1:]:
                if panel_scene.panel.rect.overlaps(other.panel.rect):
                    raise ValueError("scene panels overlap")

    @property
    def glyph_count(self) -> int:
        return sum(len(panel_scene.glyphs) for panel_scene in self.panels)

    @property
    def categories(self) -> Tuple[str, ...]:
        return self.legend.categories

"""
Scene builder
Orchestrates validation, extraction, layout, projection and glyph
construction into a Scene, one worker task per panel
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import LAYOUT_PARAMETERS, Settings, get_settings
from core.composition import extract_compositions, slice_categories, validate_spec
from core.geo import fit_geo_scale, geo_path, projected_extent
from core.glyph_geometry import build_glyph
from core.layout import Panel, facet_layout
from core.scales import SizeScale, fit_size_scale, jitter_offsets
from data.geojson_loader import load_geojson
from models.errors import Diagnostic, PlotAreaTooSmall, ValidationFailed
from models.geo_layer import GeoLayer
from models.geometry import GlyphGeometry, Rect
from models.plot_spec import PlotSpec
from models.table import CompositionRow, DataTable
from projections.base_projection import BaseProjection
from projections.projection_factory import ProjectionFactory
from render.legend import layout_legend
from render.palette import assign_palette
from render.scene import PanelScene, Scene
from render.svg_renderer import render_scene

logger = logging.getLogger(__name__)

Offset = Tuple[float, float]


def plot_area(spec: PlotSpec) -> Rect:
    """Canvas minus title band, legend margin and (scatter only) axis margins"""
    top = LAYOUT_PARAMETERS["margin_top"]
    if spec.labels.title:
        top += LAYOUT_PARAMETERS["title_height"]
    if spec.is_geographic:
        left = bottom = LAYOUT_PARAMETERS["margin_top"]
    else:
        left, bottom = LAYOUT_PARAMETERS["margin_left"], LAYOUT_PARAMETERS["margin_bottom"]

    right = spec.width * (1.0 - LAYOUT_PARAMETERS["legend_share"])
    width = right - left - LAYOUT_PARAMETERS["margin_top"]
    height = spec.height - top - bottom
    if width <= 0 or height <= 0:
        raise PlotAreaTooSmall(spec.width, spec.height, "canvas")
    return Rect(left, top, width, height)


def facet_keys(spec: PlotSpec, rows: Sequence[CompositionRow]) -> List[Optional[str]]:
    """Facet values in first-appearance order; [None] when not faceted"""
    if spec.facet_column is None:
        return [None]
    keys = list(dict.fromkeys(row.facet_key for row in rows))
    return keys or [None]


class SceneBuilder:
    """
    Builds the Scene for one spec/table pair

    Glyph radius and sectors depend only on the composition and the size
    mapping; panels, axes and projections only move glyph centres.
    """

    def __init__(
        self,
        spec: PlotSpec,
        table: DataTable,
        layer: Optional[GeoLayer] = None,
        diagnostics: Optional[List[Diagnostic]] = None,
        settings: Optional[Settings] = None,
    ):
        self.spec = spec
        self.table = table
        self.layer = layer
        self.diagnostics = diagnostics if diagnostics is not None else []
        self.settings = settings or get_settings()
        self.projection: Optional[BaseProjection] = None

    def build(self) -> Scene:
        spec = self.spec
        report = validate_spec(spec, self.table)
        if not report.ok:
            raise ValidationFailed(report)

        rows = extract_compositions(spec, self.table, self.diagnostics)
        categories = slice_categories(spec, self.table)
        palette = assign_palette(categories, spec.color_overrides)
        logger.info(f"Extracted {len(rows)} composition(s) over {len(categories)} categories")

        keys = facet_keys(spec, rows)
        area = plot_area(spec)
        strip = LAYOUT_PARAMETERS["strip_height"] if spec.facet_column else 0.0

        if spec.is_geographic:
            panels = facet_layout(keys, area, spec.facet_rows, spec.facet_cols, strip_height=strip)
        else:
            xs = [row.anchor_x for row in rows] or [0.0, 1.0]
            ys = [row.anchor_y for row in rows] or [0.0, 1.0]
            panels = facet_layout(
                keys, area, spec.facet_rows, spec.facet_cols,
                x_values=xs, y_values=ys, strip_height=strip,
            )

        size_scale = self._size_scale(rows)
        offsets = jitter_offsets(len(rows), spec.jitter_amount, spec.jitter.seed if spec.jitter else 0)

        by_panel: Dict[Optional[str], List[Tuple[CompositionRow, Offset]]] = {key: [] for key in keys}
        for row, offset in zip(rows, offsets):
            by_panel[row.facet_key if spec.facet_column else None].append((row, offset))

        extent = None
        if spec.is_geographic:
            self.projection = ProjectionFactory.create_projection(spec.projection, spec.projection_center)
            if self.layer is None and spec.map_source is not None:
                self.layer = load_geojson(spec.map_source, self.diagnostics)
            extent = projected_extent(
                self.projection, self.layer, [(row.anchor_x, row.anchor_y) for row in rows]
            )

        tasks = [(panel, by_panel[panel.facet_key], size_scale, palette, extent) for panel in panels]
        panel_scenes = self._run_panels(tasks)

        legend = layout_legend(
            list(palette.items()),
            size_scale,
            Rect(0, 0, spec.width, spec.height),
            title=spec.labels.legend or None,
            size_title=spec.size_column,
        )
        x_label, y_label = spec.labels.x, spec.labels.y
        if not spec.is_geographic:
            x_label = x_label or spec.x_column
            y_label = y_label or spec.y_column

        return Scene(
            width=spec.width,
            height=spec.height,
            panels=tuple(panel_scenes),
            legend=legend,
            plot_area=area,
            title=spec.labels.title,
            x_label=x_label,
            y_label=y_label,
            border_color=spec.border_color,
            border_width=spec.border_width,
            alpha=spec.alpha,
            clip_glyphs=spec.clip_glyphs,
            **self._map_colors(),
        )

    def _map_colors(self) -> Dict[str, str]:
        if self.layer is None:
            return {}
        return {"map_fill": self.layer.fill, "map_stroke": self.layer.stroke}

    def _size_scale(self, rows: Sequence[CompositionRow]) -> Optional[SizeScale]:
        if self.spec.size_column is None or not rows:
            return None
        return fit_size_scale(
            [row.size_value for row in rows], self.spec.size_range, column=self.spec.size_column
        )

    def _run_panels(self, tasks) -> List[PanelScene]:
        if self.settings.no_parallel or len(tasks) < 2:
            return [self._build_panel(*task) for task in tasks]

        workers = min(self.settings.max_workers, len(tasks))
        logger.debug(f"Building {len(tasks)} panels on {workers} threads")
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(lambda task: self._build_panel(*task), tasks))

    def _build_panel(
        self,
        panel: Panel,
        items: Sequence[Tuple[CompositionRow, Offset]],
        size_scale: Optional[SizeScale],
        palette: Dict[str, str],
        extent,
    ) -> PanelScene:
        spec = self.spec
        geo_paths: Tuple[str, ...] = ()
        if spec.is_geographic:
            geo_scale = fit_geo_scale(extent, panel.rect)
            if self.layer is not None:
                geo_paths = tuple(geo_path(self.layer, self.projection, geo_scale))

            def to_screen(row: CompositionRow):
                return geo_scale.to_screen(*self.projection.project(row.anchor_x, row.anchor_y))
        else:
            def to_screen(row: CompositionRow):
                return panel.x_scale.forward(row.anchor_x), panel.y_scale.forward(row.anchor_y)

        glyphs: List[GlyphGeometry] = []
        for row, (dx, dy) in items:
            x, y = to_screen(row)
            radius = size_scale.radius(row.size_value) if size_scale is not None else spec.pie_radius
            glyphs.append(build_glyph(row, (x + dx, y + dy), radius, palette, interactive=spec.interactive))

        if spec.is_geographic:
            return PanelScene(panel=panel, glyphs=tuple(glyphs), geo_paths=geo_paths)
        return PanelScene(
            panel=panel,
            glyphs=tuple(glyphs),
            x_breaks=tuple(panel.x_scale.breaks()),
            y_breaks=tuple(panel.y_scale.breaks()),
        )


def build_scene(
    spec: PlotSpec,
    table: DataTable,
    layer: Optional[GeoLayer] = None,
    diagnostics: Optional[List[Diagnostic]] = None,
    settings: Optional[Settings] = None,
) -> Scene:
    """
    Validate, extract and lay out one plot

    Raises:
        ValidationFailed: validate_spec reported problems
        InvalidCompositions: per-row data errors
        GlyphPlotError: layout or projection failures
    """
    return SceneBuilder(spec, table, layer, diagnostics, settings).build()


def render_plot(
    spec: PlotSpec,
    table: DataTable,
    layer: Optional[GeoLayer] = None,
    diagnostics: Optional[List[Diagnostic]] = None,
    settings: Optional[Settings] = None,
) -> str:
    """Build the scene and emit the SVG document"""
    scene = build_scene(spec, table, layer, diagnostics, settings)
    return render_scene(scene, interactive=spec.interactive)

"""
SVG Renderer
Serialises a Scene into a standalone, byte-deterministic SVG document
"""

import io
import logging

import svgwrite

from config.settings import LAYOUT_PARAMETERS, THEME
from core.glyph_geometry import full_circle_path, sector_path
from models.geometry import GlyphGeometry, Rect
from render.scene import LegendGeometry, PanelScene, Scene
from utils.formatting import format_number as fmt

logger = logging.getLogger(__name__)

FONT_FAMILY = "sans-serif"
ORIGIN = (0.0, 0.0)


class SVGRenderer:
    """
    Draws one Scene

    Paint order: background, per panel (map paths, gridlines, axes, glyphs),
    legend, title. Glyphs are drawn in their own frame: a translate to the
    glyph centre, with sector geometry around the origin.
    """

    def __init__(self, scene: Scene, interactive: bool = False):
        self.scene = scene
        self.interactive = interactive
        self.font_size = fmt(LAYOUT_PARAMETERS["font_size"])
        self.dwg = svgwrite.Drawing(
            size=(fmt(scene.width), fmt(scene.height)),
            profile="full",
            debug=False,
        )
        self.dwg.viewbox(0, 0, fmt(scene.width), fmt(scene.height))

    def render(self) -> str:
        scene = self.scene
        dwg = self.dwg
        dwg.add(self._rect(Rect(0, 0, scene.width, scene.height), fill=THEME["background"]))

        for index, panel_scene in enumerate(scene.panels):
            dwg.add(self._panel(index, panel_scene, x_labels=not self._has_panel_below(index)))

        dwg.add(self._axis_labels())
        dwg.add(self._legend(scene.legend))
        if scene.title:
            dwg.add(self._text(
                scene.title,
                (scene.width / 2, LAYOUT_PARAMETERS["title_height"] - LAYOUT_PARAMETERS["label_offset"]),
                anchor="middle",
                font_size=fmt(LAYOUT_PARAMETERS["title_font_size"]),
                class_="title",
            ))

        buffer = io.StringIO()
        dwg.write(buffer)
        return buffer.getvalue()

    # === PRIMITIVES ===

    def _rect(self, rect: Rect, **extra):
        return self.dwg.rect(insert=(fmt(rect.x), fmt(rect.y)), size=(fmt(rect.w), fmt(rect.h)), **extra)

    def _line(self, x1: float, y1: float, x2: float, y2: float, **extra):
        return self.dwg.line(start=(fmt(x1), fmt(y1)), end=(fmt(x2), fmt(y2)), **extra)

    def _text(self, text: str, at, anchor: str = "start", font_size: str = None, **extra):
        return self.dwg.text(
            text,
            insert=(fmt(at[0]), fmt(at[1])),
            font_size=font_size or self.font_size,
            font_family=FONT_FAMILY,
            text_anchor=anchor,
            fill=THEME["text"],
            **extra,
        )

    def _has_panel_below(self, index: int) -> bool:
        panels = self.scene.panels
        rect = panels[index].panel.rect
        return any(
            other.panel.rect.y > rect.y and other.panel.rect.x == rect.x
            for other in panels
        )

    # === PANELS ===

    def _panel(self, index: int, panel_scene: PanelScene, x_labels: bool):
        dwg = self.dwg
        panel = panel_scene.panel
        group = dwg.g(class_="panel")
        group.add(self._rect(panel.rect, fill=THEME["panel"]))

        if panel.strip is not None:
            group.add(self._rect(panel.strip, fill=THEME["strip"]))
            group.add(self._text(
                panel.facet_key or "",
                (panel.strip.center[0], panel.strip.bottom - 4),
                anchor="middle",
                class_="strip",
            ))

        if panel_scene.geo_paths:
            geo = dwg.g(class_="map", fill=self.scene.map_fill, stroke=self.scene.map_stroke,
                        stroke_width="0.5", fill_rule="evenodd")
            for d in panel_scene.geo_paths:
                geo.add(dwg.path(d=d))
            group.add(geo)

        if panel_scene.draws_axes:
            group.add(self._gridlines(panel_scene))
            group.add(self._axes(panel_scene, x_labels=x_labels, y_labels=panel.col == 0))

        glyphs = dwg.g(class_="glyphs")
        if self.scene.clip_glyphs:
            clip_id = f"panel-clip-{index}"
            clip = dwg.clipPath(id=clip_id)
            clip.add(self._rect(panel.rect))
            dwg.defs.add(clip)
            glyphs["clip-path"] = f"url(#{clip_id})"
        for glyph in panel_scene.glyphs:
            glyphs.add(self._glyph(glyph))
        group.add(glyphs)

        labelled = [g for g in panel_scene.glyphs if g.label]
        if labelled:
            labels = dwg.g(class_="glyph-labels")
            offset = LAYOUT_PARAMETERS["label_offset"]
            for glyph in labelled:
                cx, cy = glyph.center
                labels.add(self._text(
                    glyph.label,
                    (cx + glyph.radius + offset, cy + LAYOUT_PARAMETERS["font_size"] / 3),
                ))
            group.add(labels)
        return group

    def _gridlines(self, panel_scene: PanelScene):
        panel = panel_scene.panel
        rect = panel.rect
        grid = self.dwg.g(class_="grid", stroke=THEME["grid"], stroke_width="1")
        for value in panel_scene.x_breaks:
            x = panel.x_scale.forward(value)
            grid.add(self._line(x, rect.y, x, rect.bottom))
        for value in panel_scene.y_breaks:
            y = panel.y_scale.forward(value)
            grid.add(self._line(rect.x, y, rect.right, y))
        return grid

    def _axes(self, panel_scene: PanelScene, x_labels: bool, y_labels: bool):
        panel = panel_scene.panel
        rect = panel.rect
        tick = LAYOUT_PARAMETERS["tick_length"]
        font = LAYOUT_PARAMETERS["font_size"]

        axes = self.dwg.g(class_="axes", stroke=THEME["axis"], stroke_width="1")
        axes.add(self._line(rect.x, rect.bottom, rect.right, rect.bottom))
        axes.add(self._line(rect.x, rect.y, rect.x, rect.bottom))

        for value in panel_scene.x_breaks:
            x = panel.x_scale.forward(value)
            axes.add(self._line(x, rect.bottom, x, rect.bottom + tick))
            if x_labels:
                axes.add(self._text(fmt(value), (x, rect.bottom + tick + font), anchor="middle", stroke="none"))
        for value in panel_scene.y_breaks:
            y = panel.y_scale.forward(value)
            axes.add(self._line(rect.x - tick, y, rect.x, y))
            if y_labels:
                axes.add(self._text(fmt(value), (rect.x - tick - 2, y + font / 3), anchor="end", stroke="none"))
        return axes

    # === GLYPHS ===

    def _glyph(self, glyph: GlyphGeometry):
        dwg = self.dwg
        scene = self.scene
        group = dwg.g(
            class_="glyph",
            transform=f"translate({fmt(glyph.center[0])} {fmt(glyph.center[1])})",
            stroke=scene.border_color,
            stroke_width=fmt(scene.border_width),
        )
        if scene.alpha < 1:
            group["fill-opacity"] = fmt(scene.alpha)

        if glyph.is_disc:
            sector = glyph.sectors[0]
            disc = full_circle_path(ORIGIN, glyph.radius, sector.fill)
            element = dwg.circle(center=(fmt(disc.cx), fmt(disc.cy)), r=fmt(disc.r), fill=disc.fill)
            self._attach_tooltip(element, glyph)
            group.add(element)
            return group

        for sector in glyph.sectors:
            element = dwg.path(d=sector_path(ORIGIN, glyph.radius, sector), fill=sector.fill)
            self._attach_tooltip(element, glyph)
            group.add(element)
        return group

    def _attach_tooltip(self, element, glyph: GlyphGeometry) -> None:
        if self.interactive and glyph.tooltip:
            element.set_desc(title=glyph.tooltip)

    # === DECORATION ===

    def _axis_labels(self):
        scene = self.scene
        area = scene.plot_area
        group = self.dwg.g(class_="axis-labels")
        if scene.x_label:
            group.add(self._text(
                scene.x_label,
                (area.center[0], scene.height - LAYOUT_PARAMETERS["label_offset"] * 4),
                anchor="middle",
            ))
        if scene.y_label:
            x = LAYOUT_PARAMETERS["font_size"] + LAYOUT_PARAMETERS["label_offset"]
            y = area.center[1]
            group.add(self._text(
                scene.y_label,
                (x, y),
                anchor="middle",
                transform=f"rotate(-90 {fmt(x)} {fmt(y)})",
            ))
        return group

    def _legend(self, legend: LegendGeometry):
        dwg = self.dwg
        group = dwg.g(class_="legend")
        if legend.title:
            group.add(self._text(legend.title, legend.title_at, font_weight="bold"))
        for swatch in legend.swatches:
            group.add(self._rect(swatch.rect, fill=swatch.color))
            group.add(self._text(swatch.category, swatch.label_at))

        if legend.size_circles:
            if legend.size_title:
                group.add(self._text(legend.size_title, legend.size_title_at, font_weight="bold"))
            for circle in legend.size_circles:
                group.add(dwg.circle(
                    center=(fmt(circle.center[0]), fmt(circle.center[1])),
                    r=fmt(circle.radius),
                    fill="none",
                    stroke=THEME["axis"],
                    stroke_width="1",
                ))
                group.add(self._text(fmt(circle.value), circle.label_at))
        return group


def render_scene(scene: Scene, interactive: bool = False) -> str:
    """
    Emit the SVG document for a scene

    The same Scene always yields the same text. Tooltip titles are emitted
    only when interactive is set.
    """
    document = SVGRenderer(scene, interactive=interactive).render()
    logger.info(
        f"Rendered {scene.glyph_count} glyph(s) in {len(scene.panels)} panel(s), {len(document)} bytes"
    )
    return document

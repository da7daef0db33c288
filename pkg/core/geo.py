"""
Geo fitting and boundary paths
Projected coordinates -> panel screen space with one uniform zoom
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from config.settings import LAYOUT_PARAMETERS
from models.errors import DegenerateExtent
from models.geo_layer import GeoLayer, LonLat
from models.geometry import Point, Rect
from projections.base_projection import BaseProjection
from utils.formatting import format_number

logger = logging.getLogger(__name__)

Extent = Tuple[float, float, float, float]  # (umin, vmin, umax, vmax)


@dataclass(frozen=True, slots=True)
class GeoScale:
    """screen = (tx + zoom * u, ty - zoom * v); the same zoom on both axes"""

    zoom: float
    tx: float
    ty: float

    def to_screen(self, u: float, v: float) -> Point:
        return self.tx + self.zoom * u, self.ty - self.zoom * v

    def to_projected(self, x: float, y: float) -> Tuple[float, float]:
        return (x - self.tx) / self.zoom, (self.ty - y) / self.zoom


def projected_extent(
    projection: BaseProjection,
    layer: Optional[GeoLayer] = None,
    anchors: Iterable[LonLat] = (),
) -> Extent:
    """
    Bounding box of the projected map rings and glyph anchors

    Raises:
        DegenerateExtent: nothing to project, or zero width/height
    """
    points = list(layer.points()) if layer is not None else []
    points.extend(anchors)
    projected = projection.project_many(points)
    if projected.shape[0] == 0:
        raise DegenerateExtent()
    umin, vmin = projected.min(axis=0)
    umax, vmax = projected.max(axis=0)
    return float(umin), float(vmin), float(umax), float(vmax)


def fit_geo_scale(
    projected_extent: Optional[Extent],
    panel_rect: Rect,
    padding: float = LAYOUT_PARAMETERS["geo_padding"],
) -> GeoScale:
    """
    Fit the extent into the panel with a uniform zoom, centred

    Padding is a fraction of the panel size on each side.

    Raises:
        DegenerateExtent: extent missing or without positive width and height
    """
    if projected_extent is None:
        raise DegenerateExtent()
    umin, vmin, umax, vmax = projected_extent
    width, height = umax - umin, vmax - vmin
    if not (math.isfinite(width) and math.isfinite(height)) or width <= 0 or height <= 0:
        raise DegenerateExtent()

    available_w = panel_rect.w * (1.0 - 2.0 * padding)
    available_h = panel_rect.h * (1.0 - 2.0 * padding)
    zoom = min(available_w / width, available_h / height)

    cx, cy = panel_rect.center
    tx = cx - zoom * (umin + umax) / 2.0
    ty = cy + zoom * (vmin + vmax) / 2.0
    return GeoScale(zoom=zoom, tx=tx, ty=ty)


def _ring_path(coords: np.ndarray, geo_scale: GeoScale) -> str:
    # closing point is implied by Z
    parts = []
    for i, (u, v) in enumerate(coords[:-1]):
        x, y = geo_scale.to_screen(u, v)
        parts.append(f"{'M' if i == 0 else 'L'} {format_number(x)} {format_number(y)}")
    parts.append("Z")
    return " ".join(parts)


def geo_path(layer: GeoLayer, projection: BaseProjection, geo_scale: GeoScale) -> List[str]:
    """
    One path string per feature, each ring an M/L...Z subpath

    Rings are not clipped; features are assumed cropped to the region shown.
    """
    paths = []
    for feature in layer.features:
        subpaths = [_ring_path(projection.project_many(ring), geo_scale) for ring in feature.rings]
        paths.append(" ".join(subpaths))
    logger.debug(f"Built {len(paths)} map path(s) with {projection.kind} projection")
    return paths

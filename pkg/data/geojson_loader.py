"""
GeoJSON loader
Reads Polygon and MultiPolygon boundaries from a FeatureCollection
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional

from models.errors import Diagnostic, GeoJSONError, MapSourceNotFound
from models.geo_layer import GeoFeature, GeoLayer, Ring

logger = logging.getLogger(__name__)

SUPPORTED_GEOMETRIES = ("Polygon", "MultiPolygon")


def _feature_id(feature: Dict[str, Any], index: int) -> str:
    properties = feature.get("properties") or {}
    for candidate in (properties.get("id"), feature.get("id")):
        if candidate is not None and str(candidate) != "":
            return str(candidate)
    return f"feature-{index}"


def _parse_ring(raw: Any, feature_id: str) -> Ring:
    if not isinstance(raw, list):
        raise GeoJSONError(f"feature '{feature_id}': ring is not a coordinate list")
    points = []
    for position in raw:
        if (
            not isinstance(position, (list, tuple))
            or len(position) < 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in position[:2])
        ):
            raise GeoJSONError(f"feature '{feature_id}': invalid position {position!r}")
        lon, lat = float(position[0]), float(position[1])
        if not (math.isfinite(lon) and math.isfinite(lat)):
            raise GeoJSONError(f"feature '{feature_id}': non-finite position {position!r}")
        if not (-180.0 <= lon <= 180.0 and -90.0 <= lat <= 90.0):
            raise GeoJSONError(
                f"feature '{feature_id}': position {position!r} outside lon [-180, 180] x lat [-90, 90]"
            )
        points.append((lon, lat))
    return tuple(points)


def _polygons(geometry: Dict[str, Any], feature_id: str) -> List[Any]:
    coordinates = geometry.get("coordinates")
    if not isinstance(coordinates, list):
        raise GeoJSONError(f"feature '{feature_id}': geometry has no coordinate array")
    return [coordinates] if geometry["type"] == "Polygon" else coordinates


def parse_geojson(
    document: Dict[str, Any],
    source: Optional[str] = None,
    diagnostics: Optional[List[Diagnostic]] = None,
) -> GeoLayer:
    """
    Build a GeoLayer from a parsed GeoJSON object

    Args:
        document: FeatureCollection (or a single Feature)
        source: Name used in diagnostics
        diagnostics: Optional list receiving a warning per skipped feature

    Raises:
        GeoJSONError: structurally invalid document
        UnclosedRing: a ring is open or has fewer than 4 points
    """
    source = source or "<geojson>"
    if not isinstance(document, dict):
        raise GeoJSONError("GeoJSON root must be an object")

    kind = document.get("type")
    if kind == "FeatureCollection":
        raw_features = document.get("features")
        if not isinstance(raw_features, list):
            raise GeoJSONError("FeatureCollection has no 'features' array")
    elif kind == "Feature":
        raw_features = [document]
    else:
        raise GeoJSONError(f"expected a FeatureCollection or Feature, got {kind!r}")

    features = []
    for index, feature in enumerate(raw_features):
        if not isinstance(feature, dict) or feature.get("type") != "Feature":
            raise GeoJSONError(f"entry {index} of 'features' is not a Feature")
        feature_id = _feature_id(feature, index)
        geometry = feature.get("geometry") or {}
        geometry_type = geometry.get("type")

        if geometry_type not in SUPPORTED_GEOMETRIES:
            message = f"skipping feature '{feature_id}' with unsupported geometry {geometry_type}"
            logger.warning(message)
            if diagnostics is not None:
                diagnostics.append(Diagnostic("warning", source, message))
            continue

        rings = tuple(
            _parse_ring(ring, feature_id)
            for polygon in _polygons(geometry, feature_id)
            for ring in polygon
        )
        features.append(GeoFeature(feature_id=feature_id, rings=rings))

    logger.info(f"Loaded {len(features)} map feature(s) from {source}")
    return GeoLayer(features=tuple(features), source=source)


def load_geojson(path: Path, diagnostics: Optional[List[Diagnostic]] = None) -> GeoLayer:
    """
    Read a GeoJSON file

    Raises:
        MapSourceNotFound: path missing or unreadable
        GeoJSONError: not valid JSON or not a supported document
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot read GeoJSON {path}: {e}")
        raise MapSourceNotFound(path) from e

    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise GeoJSONError(f"invalid JSON at line {e.lineno}: {e.msg}") from e
    return parse_geojson(document, source=str(path), diagnostics=diagnostics)

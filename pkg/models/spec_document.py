"""
Spec file schema
Pydantic models mirroring the JSON plot-spec document key for key
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from models.errors import SpecFileError
from models.plot_spec import (
    HEX_COLOR_PATTERN, UINT64_MAX, JitterSpec, LongSlices, PlotLabels, PlotSpec, WideSlices
)

logger = logging.getLogger(__name__)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class LongSlicesSection(_Section):
    category: str
    value: str
    group_by: List[str] = Field(default_factory=list)


class MappingSection(_Section):
    x: str
    y: str
    slices: Optional[List[str]] = None
    slices_long: Optional[LongSlicesSection] = None
    size: Optional[str] = None
    facet: Optional[str] = None
    label: Optional[str] = None

    @model_validator(mode="after")
    def exactly_one_slice_mapping(self):
        if (self.slices is None) == (self.slices_long is None):
            raise ValueError("mapping needs exactly one of 'slices' or 'slices_long'")
        return self


class GlyphSection(_Section):
    radius: Optional[float] = Field(default=None, gt=0)
    colors: Dict[str, str] = Field(default_factory=dict)
    border: Optional[str] = Field(default=None, pattern=HEX_COLOR_PATTERN)
    border_width: Optional[float] = Field(default=None, ge=0)
    alpha: Optional[float] = Field(default=None, ge=0, le=1)
    size_range: Optional[Tuple[float, float]] = None


class MapSection(_Section):
    geojson: Optional[str] = None
    projection: Optional[str] = None
    center: Optional[Tuple[float, float]] = None


class JitterSection(_Section):
    amount: Optional[float] = Field(default=None, ge=0)
    seed: int = Field(default=0, ge=0, le=UINT64_MAX)


class FacetSection(_Section):
    rows: Optional[int] = Field(default=None, ge=1)
    cols: Optional[int] = Field(default=None, ge=1)


class LabelsSection(_Section):
    title: str = ""
    x: str = ""
    y: str = ""
    legend: str = ""


class SizeSection(_Section):
    width: Optional[float] = Field(default=None, gt=0)
    height: Optional[float] = Field(default=None, gt=0)


class SpecDocument(_Section):
    """Top-level JSON plot-spec document"""

    mapping: MappingSection
    glyph: GlyphSection = Field(default_factory=GlyphSection)
    map: Optional[MapSection] = None
    jitter: Optional[JitterSection] = None
    facets: FacetSection = Field(default_factory=FacetSection)
    interactive: bool = False
    clip_glyphs: bool = False
    skip_incomplete_rows: bool = False
    labels: LabelsSection = Field(default_factory=LabelsSection)
    size: SizeSection = Field(default_factory=SizeSection)

    def to_plot_spec(self, base_dir: Optional[Path] = None, defaults: Optional[Dict] = None) -> PlotSpec:
        """
        Build the PlotSpec this document describes

        Args:
            base_dir: Directory that relative GeoJSON paths resolve against
            defaults: Built-in/settings values used where the document is silent
                (keys: width, height, pie_radius)

        Returns:
            Validated PlotSpec
        """
        defaults = defaults or {}
        mapping = self.mapping

        if mapping.slices is not None:
            slice_spec = WideSlices(columns=mapping.slices)
        else:
            slice_spec = LongSlices(
                category=mapping.slices_long.category,
                value=mapping.slices_long.value,
                group_by=mapping.slices_long.group_by,
            )

        values = {
            "x_column": mapping.x,
            "y_column": mapping.y,
            "slice_spec": slice_spec,
            "size_column": mapping.size,
            "facet_column": mapping.facet,
            "label_column": mapping.label,
            "color_overrides": self.glyph.colors,
            "facet_rows": self.facets.rows,
            "facet_cols": self.facets.cols,
            "interactive": self.interactive,
            "clip_glyphs": self.clip_glyphs,
            "skip_incomplete_rows": self.skip_incomplete_rows,
            "labels": PlotLabels(**self.labels.model_dump()),
        }

        optional = {
            "pie_radius": self.glyph.radius if self.glyph.radius is not None else defaults.get("pie_radius"),
            "border_color": self.glyph.border,
            "border_width": self.glyph.border_width,
            "alpha": self.glyph.alpha,
            "size_range": self.glyph.size_range,
            "width": self.size.width if self.size.width is not None else defaults.get("width"),
            "height": self.size.height if self.size.height is not None else defaults.get("height"),
        }
        values.update({k: v for k, v in optional.items() if v is not None})

        if self.map is not None:
            values["projection"] = self.map.projection
            values["projection_center"] = self.map.center
            if self.map.geojson:
                source = Path(self.map.geojson)
                if base_dir is not None and not source.is_absolute():
                    source = base_dir / source
                values["map_source"] = source

        if self.jitter is not None:
            values["jitter"] = JitterSpec(amount=self.jitter.amount, seed=self.jitter.seed)

        return PlotSpec.model_validate(values)


def _format_validation_error(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(p) for p in item["loc"]) or "<document>"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def load_spec_document(path: Path, defaults: Optional[Dict] = None) -> PlotSpec:
    """
    Read and validate a JSON plot-spec file

    Args:
        path: Spec file path
        defaults: Fallback values for width, height, pie_radius

    Returns:
        PlotSpec with relative paths resolved against the spec file's directory
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise SpecFileError(f"cannot read spec file: {e.strerror or e}")
    except json.JSONDecodeError as e:
        raise SpecFileError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")

    try:
        document = SpecDocument.model_validate(raw)
        spec = document.to_plot_spec(base_dir=path.parent, defaults=defaults)
    except ValidationError as e:
        raise SpecFileError(_format_validation_error(e))

    logger.info(f"Loaded plot spec from {path}")
    return spec

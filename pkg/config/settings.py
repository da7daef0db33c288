"""
Application settings and configuration
Environment-driven settings plus the static plotting tables
"""

import logging
from typing import Optional
from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    """Application settings"""

    model_config = SettingsConfigDict(
        env_prefix="GLYPHPLOT_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "glyphplot"
    version: str = "1.0.0"

    # Execution
    no_parallel: bool = False  # GLYPHPLOT_NO_PARALLEL=1
    max_workers: int = 4

    # Output defaults (screen units)
    default_width: float = 600.0
    default_height: float = 600.0
    default_radius: float = 10.0

    # Logging
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    @field_validator("max_workers")
    @classmethod
    def validate_max_workers(cls, v):
        if v < 1:
            raise ValueError("max_workers must be at least 1")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level

@lru_cache()
def get_settings() -> Settings:
    """Get cached application settings"""
    return Settings()

# Default categorical palette, cycled when categories exceed its length
DEFAULT_PALETTE = [
    "#1b9e77",
    "#d95f02",
    "#7570b3",
    "#e7298a",
    "#66a61e",
    "#e6ab02",
    "#a6761d",
    "#666666",
]

# Projection parameters
PROJECTION_PARAMETERS = {
    "equirectangular": {
        "description": "Plate carree: radians in, radians out",
    },
    "mercator": {
        "description": "Spherical mercator with web-map latitude clamp",
        "lat_clamp": 85.05113,
    },
    "lambert_azimuthal_equal_area": {
        "description": "Lambert azimuthal equal-area about a centre point",
        "center": (0.0, 0.0),
        "pole_tolerance": 1e-12,
    },
}

# Layout parameters (screen units unless noted)
LAYOUT_PARAMETERS = {
    "expansion": 0.05,          # fraction of span added on each side
    "legend_share": 0.15,       # fraction of width reserved for the legend
    "margin_left": 56.0,
    "margin_bottom": 44.0,
    "margin_top": 16.0,
    "title_height": 24.0,
    "facet_gap": 10.0,
    "strip_height": 16.0,
    "swatch_size": 12.0,
    "swatch_spacing": 18.0,
    "legend_padding": 8.0,
    "geo_padding": 0.02,        # fraction of panel size on each side
    "size_range": (4.0, 18.0),
    "tick_count": 5,
    "tick_length": 4.0,
    "font_size": 10.0,
    "title_font_size": 14.0,
    "label_offset": 2.0,
}

# Colours that are not data driven
THEME = {
    "background": "#ffffff",
    "panel": "#fafafa",
    "grid": "#e5e5e5",
    "axis": "#333333",
    "text": "#222222",
    "strip": "#ececec",
    "map_fill": "#f0f0f0",
    "map_stroke": "#9a9a9a",
    "glyph_border": "#ffffff",
}

"""
Mercator projection with web-map latitude clamp
"""

import math
from typing import Any, Dict, Tuple

from config.settings import PROJECTION_PARAMETERS
from projections.base_projection import BaseProjection


class MercatorProjection(BaseProjection):
    """(lambda, ln tan(pi/4 + phi/2)) with latitude clamped before projecting"""

    kind = "mercator"

    def __init__(self, parameters: Dict[str, Any] = None):
        defaults = PROJECTION_PARAMETERS["mercator"]
        super().__init__({**defaults, **(parameters or {})})
        self.lat_clamp = float(self.parameters["lat_clamp"])
        if not 0.0 < self.lat_clamp < 90.0:
            raise ValueError(f"mercator lat_clamp must be in (0, 90), got {self.lat_clamp}")

    def _project(self, lon_deg: float, lat_deg: float) -> Tuple[float, float]:
        lat_deg = min(max(lat_deg, -self.lat_clamp), self.lat_clamp)
        # asinh(tan phi) == ln tan(pi/4 + phi/2), and is exactly 0 on the equator
        return math.radians(lon_deg), math.asinh(math.tan(math.radians(lat_deg)))

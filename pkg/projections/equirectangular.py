"""
Equirectangular (plate carree) projection
"""

import math
from typing import Tuple

from projections.base_projection import BaseProjection


class EquirectangularProjection(BaseProjection):
    """Identity on radian coordinates: (lon, lat) -> (lambda, phi)"""

    kind = "equirectangular"

    def _project(self, lon_deg: float, lat_deg: float) -> Tuple[float, float]:
        return math.radians(lon_deg), math.radians(lat_deg)

"""
Lambert azimuthal equal-area projection
"""

import math
from typing import Any, Dict, Tuple

from config.settings import PROJECTION_PARAMETERS
from models.errors import AntipodePole
from projections.base_projection import BaseProjection


class LambertAzimuthalProjection(BaseProjection):
    """
    Equal-area azimuthal projection about a centre (lon0, lat0)

    The antipode of the centre has no image; projecting it raises AntipodePole.
    """

    kind = "lambert_azimuthal_equal_area"

    def __init__(self, parameters: Dict[str, Any] = None):
        defaults = PROJECTION_PARAMETERS["lambert_azimuthal_equal_area"]
        super().__init__({**defaults, **(parameters or {})})
        lon0, lat0 = (float(c) for c in self.parameters["center"])
        if not (-180.0 <= lon0 <= 180.0) or not (-90.0 <= lat0 <= 90.0):
            raise ValueError(f"lambert centre ({lon0}, {lat0}) outside lon/lat range")
        self.parameters["center"] = (lon0, lat0)
        self.tolerance = float(self.parameters["pole_tolerance"])

        self._lon0 = math.radians(lon0)
        self._sin_lat0 = math.sin(math.radians(lat0))
        self._cos_lat0 = math.cos(math.radians(lat0))

    @property
    def center(self) -> Tuple[float, float]:
        return self.parameters["center"]

    def _project(self, lon_deg: float, lat_deg: float) -> Tuple[float, float]:
        phi = math.radians(lat_deg)
        dlam = math.radians(lon_deg) - self._lon0
        sin_phi, cos_phi = math.sin(phi), math.cos(phi)
        cos_dlam = math.cos(dlam)

        denominator = 1.0 + self._sin_lat0 * sin_phi + self._cos_lat0 * cos_phi * cos_dlam
        if abs(denominator) < self.tolerance:
            raise AntipodePole(lon_deg, lat_deg)

        k = math.sqrt(2.0 / denominator)
        u = k * cos_phi * math.sin(dlam)
        v = k * (self._cos_lat0 * sin_phi - self._sin_lat0 * cos_phi * cos_dlam)
        return u, v

"""
Base Projection Class
Abstract base class for all map projections
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, Tuple

import numpy as np

logger = logging.getLogger(__name__)


class BaseProjection(ABC):
    """
    Abstract base class for all map projections

    Maps (longitude, latitude) in degrees onto projection-plane coordinates
    (u, v) with v growing northward; callers negate v for y-down screens.
    """

    kind: str = ""

    def __init__(self, parameters: Dict[str, Any] = None):
        self.parameters = dict(parameters or {})

    def project(self, lon_deg: float, lat_deg: float) -> Tuple[float, float]:
        """
        Project one point

        Args:
            lon_deg: Longitude in [-180, 180]
            lat_deg: Latitude in [-90, 90]

        Returns:
            (u, v) projection-plane coordinates
        """
        lon_deg = float(lon_deg)
        lat_deg = float(lat_deg)
        if not (-180.0 <= lon_deg <= 180.0) or not (-90.0 <= lat_deg <= 90.0):
            raise ValueError(
                f"coordinate ({lon_deg}, {lat_deg}) outside lon [-180, 180] x lat [-90, 90]"
            )
        return self._project(lon_deg, lat_deg)

    @abstractmethod
    def _project(self, lon_deg: float, lat_deg: float) -> Tuple[float, float]:
        """Projection formula for an in-range point"""
        pass

    def project_many(self, points: Iterable[Tuple[float, float]]) -> np.ndarray:
        """Project (lon, lat) pairs into an (n, 2) array"""
        projected = [self.project(lon, lat) for lon, lat in points]
        if not projected:
            return np.empty((0, 2), dtype=float)
        return np.asarray(projected, dtype=float)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.parameters})"

"""
Projection Factory
Creates and manages map projection instances
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

from config.settings import PROJECTION_PARAMETERS
from models.errors import UnsupportedProjection
from projections.base_projection import BaseProjection
from projections.equirectangular import EquirectangularProjection
from projections.lambert_azimuthal import LambertAzimuthalProjection
from projections.mercator import MercatorProjection

logger = logging.getLogger(__name__)


class ProjectionFactory:
    """
    Factory for creating projection instances
    Resolves projection names (and short aliases) to configured instances
    """

    projection_classes = {
        'equirectangular': EquirectangularProjection,
        'mercator': MercatorProjection,
        'lambert_azimuthal_equal_area': LambertAzimuthalProjection,
    }

    aliases = {
        'lambert': 'lambert_azimuthal_equal_area',
        'laea': 'lambert_azimuthal_equal_area',
        'plate_carree': 'equirectangular',
    }

    @classmethod
    def canonical_name(cls, name: str) -> str:
        key = name.strip().lower()
        return cls.aliases.get(key, key)

    @classmethod
    def is_supported(cls, name: str) -> bool:
        return cls.canonical_name(name) in cls.projection_classes

    @classmethod
    def available_projections(cls) -> List[str]:
        return list(cls.projection_classes)

    @classmethod
    def create_projection(
        cls,
        name: str,
        center: Optional[Sequence[float]] = None,
        custom_parameters: Optional[Dict[str, Any]] = None,
    ) -> BaseProjection:
        """
        Create a projection instance

        Args:
            name: Projection name or alias
            center: Optional (lon, lat) centre; only lambert uses it
            custom_parameters: Optional overrides of the default parameters

        Returns:
            Projection instance

        Raises:
            UnsupportedProjection: name is not registered
        """
        kind = cls.canonical_name(name)
        if kind not in cls.projection_classes:
            logger.error(f"Projection '{name}' not found in available projections")
            raise UnsupportedProjection(name)

        parameters = dict(custom_parameters or {})
        if center is not None:
            if kind == 'lambert_azimuthal_equal_area':
                parameters['center'] = tuple(center)
            else:
                logger.debug(f"Ignoring centre {tuple(center)} for {kind} projection")

        projection = cls.projection_classes[kind](parameters)
        logger.info(f"Created {kind} projection with parameters: {projection.parameters}")
        return projection

    @classmethod
    def get_available_projections(cls) -> Dict[str, Dict[str, Any]]:
        """Get available projections and their default parameters"""
        return {
            name: {
                'class': projection_class.__name__,
                'default_parameters': PROJECTION_PARAMETERS.get(name, {}),
            }
            for name, projection_class in cls.projection_classes.items()
        }

"""
Map layer models
Polygon features in lon/lat degrees, validated at construction
"""

from dataclasses import dataclass, field
from typing import Iterator, Optional, Tuple

from config.settings import THEME
from models.errors import UnclosedRing

LonLat = Tuple[float, float]
Ring = Tuple[LonLat, ...]


@dataclass(frozen=True)
class GeoFeature:
    """One boundary feature; every ring has >= 4 points and first == last"""

    feature_id: str
    rings: Tuple[Ring, ...]

    def __post_init__(self) -> None:
        for index, ring in enumerate(self.rings):
            if len(ring) < 4:
                raise UnclosedRing(self.feature_id, index, f"{len(ring)} points, need at least 4")
            if tuple(ring[0]) != tuple(ring[-1]):
                raise UnclosedRing(self.feature_id, index)


@dataclass(frozen=True)
class GeoLayer:
    features: Tuple[GeoFeature, ...]
    fill: str = THEME["map_fill"]
    stroke: str = THEME["map_stroke"]
    source: Optional[str] = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.features)

    def points(self) -> Iterator[LonLat]:
        for feature in self.features:
            for ring in feature.rings:
                yield from ring

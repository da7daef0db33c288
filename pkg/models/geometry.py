"""
Screen-space geometry types
Rectangles, sectors and glyphs; screen y grows downward
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

TWO_PI = 2 * math.pi

# A sweep this close to 2*pi is drawn as a disc
FULL_CIRCLE_TOLERANCE = 1e-12

Point = Tuple[float, float]


@dataclass(frozen=True, slots=True)
class Rect:
    x: float
    y: float
    w: float
    h: float

    def __post_init__(self) -> None:
        if not (self.w > 0 and self.h > 0):
            raise ValueError(f"rectangle needs positive area, got {self.w}x{self.h}")

    @property
    def right(self) -> float:
        return self.x + self.w

    @property
    def bottom(self) -> float:
        return self.y + self.h

    @property
    def center(self) -> Point:
        return (self.x + self.w / 2, self.y + self.h / 2)

    def contains(self, other: "Rect", tol: float = 1e-9) -> bool:
        return (
            other.x >= self.x - tol
            and other.y >= self.y - tol
            and other.right <= self.right + tol
            and other.bottom <= self.bottom + tol
        )

    def overlaps(self, other: "Rect") -> bool:
        """Interiors intersect (shared edges do not count)"""
        return (
            self.x < other.right
            and other.x < self.right
            and self.y < other.bottom
            and other.y < self.bottom
        )


@dataclass(frozen=True, slots=True)
class Sector:
    """
    One pie slice

    Angles are radians clockwise from 12 o'clock with 0 <= start < end <= 2*pi.
    """

    start_angle: float
    end_angle: float
    category: str
    raw_value: float
    proportion: float
    fill: str

    def __post_init__(self) -> None:
        if not (0 <= self.start_angle < self.end_angle <= TWO_PI):
            raise ValueError(
                f"invalid sector angles ({self.start_angle}, {self.end_angle}) for '{self.category}'"
            )
        if not (0 < self.proportion <= 1):
            raise ValueError(f"sector proportion must be in (0, 1], got {self.proportion}")

    @property
    def sweep(self) -> float:
        return self.end_angle - self.start_angle

    @property
    def is_full_circle(self) -> bool:
        return self.sweep >= TWO_PI - FULL_CIRCLE_TOLERANCE


@dataclass(frozen=True, slots=True)
class CirclePrimitive:
    """A disc, used when a single category owns the whole glyph"""

    cx: float
    cy: float
    r: float
    fill: str


@dataclass(frozen=True)
class GlyphGeometry:
    """
    One pie-glyph in its own screen-space frame

    Only center depends on axes, panels or projections; radius and sectors
    are fixed by the composition and the size mapping.
    """

    center: Point
    radius: float
    sectors: Tuple[Sector, ...]
    row_id: int
    tooltip: Optional[str] = None
    label: Optional[str] = None

    @property
    def is_disc(self) -> bool:
        return len(self.sectors) == 1 and self.sectors[0].is_full_circle

    def shape(self) -> Tuple[float, Tuple[Tuple[float, float, str], ...]]:
        """Everything except the center, for invariance comparisons"""
        return (
            self.radius,
            tuple((s.start_angle, s.end_angle, s.category) for s in self.sectors),
        )

"""
Scales
Data-to-screen position scales, nice tick breaks, glyph size scale and
deterministic jitter
"""

import math
from dataclasses import dataclass, replace
from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR
from typing import Iterable, List, Optional, Tuple

import numpy as np

from config.settings import LAYOUT_PARAMETERS
from models.errors import NoFiniteValues

_MASK64 = (1 << 64) - 1
_STEP_MULTIPLIERS = (Decimal(1), Decimal(2), Decimal("2.5"), Decimal(5), Decimal(10))


def _finite(values: Iterable[float], column: Optional[str] = None) -> np.ndarray:
    array = np.asarray(list(values), dtype=float)
    array = array[np.isfinite(array)]
    if array.size == 0:
        raise NoFiniteValues(column)
    return array


# === POSITION SCALES ===

@dataclass(frozen=True, slots=True)
class LinearScale:
    """
    Affine data -> screen map

    domain is the data extent before expansion; the mapped interval is the
    domain widened by expansion * span on each side. A y scale passes an
    inverted range (bottom, top) so larger values sit higher on screen.
    """

    domain: Tuple[float, float]
    range: Tuple[float, float]
    expansion: float = LAYOUT_PARAMETERS["expansion"]

    def __post_init__(self) -> None:
        dmin, dmax = self.domain
        if not (math.isfinite(dmin) and math.isfinite(dmax) and dmin < dmax):
            raise ValueError(f"scale domain must satisfy min < max, got {self.domain}")
        if self.range[0] == self.range[1]:
            raise ValueError(f"scale range must have nonzero length, got {self.range}")
        if self.expansion < 0:
            raise ValueError(f"expansion must be >= 0, got {self.expansion}")

    @property
    def expanded_domain(self) -> Tuple[float, float]:
        dmin, dmax = self.domain
        pad = (dmax - dmin) * self.expansion
        return dmin - pad, dmax + pad

    def forward(self, x: float) -> float:
        emin, emax = self.expanded_domain
        lo, hi = self.range
        return lo + (x - emin) / (emax - emin) * (hi - lo)

    def inverse(self, y: float) -> float:
        emin, emax = self.expanded_domain
        lo, hi = self.range
        return emin + (y - lo) / (hi - lo) * (emax - emin)

    def with_range(self, lo: float, hi: float) -> "LinearScale":
        """Same domain on another screen interval (shared facet scales)"""
        return replace(self, range=(lo, hi))

    def breaks(self, target_count: int = LAYOUT_PARAMETERS["tick_count"]) -> List[float]:
        return nice_breaks(*self.expanded_domain, target_count)


def fit_scale(
    values: Iterable[float],
    range: Tuple[float, float],
    expansion: float = LAYOUT_PARAMETERS["expansion"],
    column: Optional[str] = None,
) -> LinearScale:
    """
    Fit a scale to the finite values

    A degenerate domain (all values equal to c) is widened to (c - 1, c + 1)
    before expansion.

    Raises:
        NoFiniteValues: no finite value to fit
    """
    finite = _finite(values, column)
    dmin, dmax = float(finite.min()), float(finite.max())
    if dmin == dmax:
        dmin, dmax = dmin - 1.0, dmax + 1.0
    return LinearScale(domain=(dmin, dmax), range=(float(range[0]), float(range[1])), expansion=expansion)


def forward(scale: LinearScale, x: float) -> float:
    return scale.forward(x)


def inverse(scale: LinearScale, y: float) -> float:
    return scale.inverse(y)


# === TICK BREAKS ===

def nice_step(dmin: float, dmax: float, target_count: int = 5) -> Decimal:
    """Smallest of {1, 2, 2.5, 5, 10} x 10^floor(log10(raw)) that is >= raw"""
    if target_count < 2:
        raise ValueError(f"target_count must be >= 2, got {target_count}")
    if not dmin < dmax:
        raise ValueError(f"nice_breaks needs dmin < dmax, got ({dmin}, {dmax})")

    # decimal arithmetic keeps 0.7 - 0.3 at exactly 0.4
    raw = (Decimal(repr(float(dmax))) - Decimal(repr(float(dmin)))) / (target_count - 1)
    magnitude = Decimal(1).scaleb(raw.adjusted())
    for multiplier in _STEP_MULTIPLIERS:
        step = multiplier * magnitude
        if step >= raw:
            return step
    return _STEP_MULTIPLIERS[-1] * magnitude


def nice_breaks(dmin: float, dmax: float, target_count: int = 5) -> List[float]:
    """
    Tick values: every multiple of the nice step within [dmin, dmax]

    Examples:
        (0, 100) -> [0, 25, 50, 75, 100]
        (0.3, 0.7) -> [0.3, 0.4, 0.5, 0.6, 0.7]
    """
    step = nice_step(dmin, dmax, target_count)
    low = (Decimal(repr(float(dmin))) / step).to_integral_value(rounding=ROUND_CEILING)
    high = (Decimal(repr(float(dmax))) / step).to_integral_value(rounding=ROUND_FLOOR)
    return [float(k * step) for k in range(int(low), int(high) + 1)]


# === SIZE SCALE ===

@dataclass(frozen=True, slots=True)
class SizeScale:
    """Value -> radius with glyph area linear in value; values are clamped"""

    domain: Tuple[float, float]
    radius_range: Tuple[float, float] = LAYOUT_PARAMETERS["size_range"]

    def __post_init__(self) -> None:
        vmin, vmax = self.domain
        if not (math.isfinite(vmin) and math.isfinite(vmax) and vmin <= vmax):
            raise ValueError(f"size domain must satisfy min <= max, got {self.domain}")
        r_min, r_max = self.radius_range
        if not (0 < r_min <= r_max):
            raise ValueError(f"radius range must satisfy 0 < r_min <= r_max, got {self.radius_range}")

    @property
    def r_min(self) -> float:
        return self.radius_range[0]

    @property
    def r_max(self) -> float:
        return self.radius_range[1]

    def radius(self, value: float) -> float:
        vmin, vmax = self.domain
        r_min, r_max = self.radius_range
        if vmin == vmax:
            return math.sqrt((r_min ** 2 + r_max ** 2) / 2.0)
        t = (min(max(value, vmin), vmax) - vmin) / (vmax - vmin)
        return math.sqrt(r_min ** 2 + (r_max ** 2 - r_min ** 2) * t)

    def reference_values(self) -> Tuple[float, float, float]:
        """Domain min, mid and max, as shown by the size legend"""
        vmin, vmax = self.domain
        return vmin, (vmin + vmax) / 2.0, vmax


def fit_size_scale(
    values: Iterable[float],
    radius_range: Tuple[float, float] = LAYOUT_PARAMETERS["size_range"],
    column: Optional[str] = None,
) -> SizeScale:
    finite = _finite(values, column)
    return SizeScale(domain=(float(finite.min()), float(finite.max())), radius_range=tuple(radius_range))


def size_radius(scale: SizeScale, v: float) -> float:
    return scale.radius(v)


# === JITTER ===

class SplitMix64:
    """SplitMix64 generator over 64-bit unsigned state"""

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform deviate in [0, 1)"""
        return self.next_u64() / 18446744073709551616.0


def jitter_offsets(n: int, amount: float, seed: int) -> List[Tuple[float, float]]:
    """
    n screen offsets (dx, dy), each component uniform in [-amount, amount)

    Consumes 2n generator outputs in order dx0, dy0, dx1, dy1, ...
    """
    if amount < 0:
        raise ValueError(f"jitter amount must be >= 0, got {amount}")
    if amount == 0:
        return [(0.0, 0.0)] * n

    generator = SplitMix64(seed)
    offsets = []
    for _ in range(n):
        dx = (2.0 * generator.next_float() - 1.0) * amount
        dy = (2.0 * generator.next_float() - 1.0) * amount
        offsets.append((dx, dy))
    return offsets

"""
Helpers for inspecting emitted SVG documents
"""

import math
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import List, Tuple

SVG_NS = "{http://www.w3.org/2000/svg}"

_TRANSLATE = re.compile(r"translate\(([-0-9.e]+) ([-0-9.e]+)\)")
_SECTOR = re.compile(
    r"^M 0 0 L (?P<sx>\S+) (?P<sy>\S+) A (?P<r>\S+) (?P<r2>\S+) 0 (?P<large>[01]) 1 (?P<ex>\S+) (?P<ey>\S+) Z$"
)


@dataclass
class ParsedGlyph:
    center: Tuple[float, float]
    radius: float
    angles: List[Tuple[float, float]]
    titles: List[str]
    raw: Tuple[str, ...]


def parse_svg(text: str) -> ET.Element:
    return ET.fromstring(text.encode("utf-8"))


def _angle(x: float, y: float) -> float:
    """Inverse of angle_to_point about the origin, in [0, 2*pi)"""
    return math.atan2(x, -y) % (2 * math.pi)


def glyph_groups(root: ET.Element) -> List[ET.Element]:
    return [g for g in root.iter(f"{SVG_NS}g") if g.get("class") == "glyph"]


def parse_glyphs(root: ET.Element) -> List[ParsedGlyph]:
    """Recover centre, radius and sector angles from every glyph group"""
    glyphs = []
    for group in glyph_groups(root):
        match = _TRANSLATE.fullmatch(group.get("transform"))
        center = (float(match.group(1)), float(match.group(2)))
        titles = [t.text for t in group.iter(f"{SVG_NS}title")]
        circles = group.findall(f"{SVG_NS}circle")
        paths = group.findall(f"{SVG_NS}path")

        if circles:
            radius = float(circles[0].get("r"))
            angles = [(0.0, 2 * math.pi)]
            raw = tuple(ET.tostring(c) for c in circles)
        else:
            angles = []
            radius = None
            for path in paths:
                m = _SECTOR.match(path.get("d"))
                assert m, path.get("d")
                radius = float(m.group("r"))
                start = _angle(float(m.group("sx")), float(m.group("sy")))
                end = _angle(float(m.group("ex")), float(m.group("ey")))
                if end <= start:
                    end += 2 * math.pi
                angles.append((start, end))
            raw = tuple(p.get("d") for p in paths)
        glyphs.append(ParsedGlyph(center=center, radius=radius, angles=angles, titles=titles, raw=raw))
    return glyphs


def title_count(root: ET.Element) -> int:
    return sum(1 for _ in root.iter(f"{SVG_NS}title"))

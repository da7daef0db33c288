"""
Category colours
"""

import logging
from typing import Dict, Mapping, Optional, Sequence

from config.settings import DEFAULT_PALETTE

logger = logging.getLogger(__name__)


def assign_palette(
    categories: Sequence[str],
    overrides: Optional[Mapping[str, str]] = None,
    palette: Sequence[str] = DEFAULT_PALETTE,
) -> Dict[str, str]:
    """
    Map each category to a colour, in category order

    The default palette cycles after its last entry; overrides replace by exact
    category name. No categories (an empty long-format table) gives an empty map.
    """
    overrides = dict(overrides or {})

    colors = {
        category: overrides.get(category, palette[index % len(palette)])
        for index, category in enumerate(categories)
    }

    unused = sorted(set(overrides) - set(colors))
    if unused:
        logger.warning(f"Colour overrides for unknown categories ignored: {', '.join(unused)}")
    return colors

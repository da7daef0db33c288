"""
Data table and composition models
Typed columnar rows ingested from CSV and the compositions extracted from them
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from models.errors import AllZeroComposition, DuplicateColumn, MissingColumn, NegativeSliceValue


class DataTable:
    """
    Columnar table backed by a pandas DataFrame

    Cells hold numbers or strings; a missing cell is NaN/None or an empty string.
    The wrapped frame is treated as read-only.
    """

    def __init__(self, frame: pd.DataFrame, source: Optional[Path] = None):
        seen = set()
        for name in frame.columns:
            if name in seen:
                raise DuplicateColumn(str(name))
            seen.add(name)

        self._frame = frame.reset_index(drop=True)
        self.source = Path(source) if source is not None else None

    @classmethod
    def from_records(
        cls,
        records: Iterable[Dict[str, Any]],
        columns: Optional[Sequence[str]] = None,
        source: Optional[Path] = None,
    ) -> "DataTable":
        """Build a table from dict rows (column order = first appearance unless given)"""
        records = list(records)
        if columns is None:
            columns = []
            for record in records:
                for key in record:
                    if key not in columns:
                        columns.append(key)
        frame = pd.DataFrame.from_records(records, columns=list(columns))
        return cls(frame, source=source)

    @property
    def frame(self) -> pd.DataFrame:
        return self._frame

    @property
    def columns(self) -> List[str]:
        return [str(c) for c in self._frame.columns]

    @property
    def source_name(self) -> str:
        return str(self.source) if self.source is not None else "<table>"

    def __len__(self) -> int:
        return len(self._frame)

    def has_column(self, name: str) -> bool:
        return name in self._frame.columns

    def column(self, name: str) -> pd.Series:
        if name not in self._frame.columns:
            raise MissingColumn(name)
        return self._frame[name]

    def missing_mask(self, name: str) -> np.ndarray:
        """True where the cell is missing (NaN/None or blank string)"""
        series = self.column(name)
        mask = series.isna().to_numpy()
        if series.dtype == object:
            blank = series.map(lambda v: isinstance(v, str) and v.strip() == "").to_numpy(dtype=bool)
            mask = mask | blank
        return mask

    def numeric_column(self, name: str) -> Tuple[np.ndarray, np.ndarray]:
        """
        Coerce a column to float

        Returns:
            Tuple of (values with NaN where missing or unparsable,
                      mask of present-but-non-numeric cells)
        """
        series = self.column(name)
        missing = self.missing_mask(name)
        if pd.api.types.is_bool_dtype(series):
            values = np.full(len(series), np.nan)
            return values, ~missing
        if pd.api.types.is_numeric_dtype(series):
            return series.to_numpy(dtype=float), np.zeros(len(series), dtype=bool)

        converted = pd.to_numeric(series.where(~missing), errors="coerce").to_numpy(dtype=float)
        bad = np.isnan(converted) & ~missing
        return converted, bad


@dataclass(frozen=True, slots=True)
class CompositionRow:
    """One glyph's worth of data: anchor, slice values, optional size/facet/label"""

    anchor_x: float
    anchor_y: float
    values: Tuple[float, ...]
    row_id: int
    size_value: Optional[float] = None
    facet_key: Optional[str] = None
    label: Optional[str] = None

    def __post_init__(self) -> None:
        for value in self.values:
            if value < 0:
                raise NegativeSliceValue(row=self.row_id, value=value)
        if not any(value > 0 for value in self.values):
            raise AllZeroComposition(row=self.row_id)

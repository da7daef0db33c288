"""
Composition extraction
Validates a plot spec against a table, pivots long data to wide, and turns rows into compositions
"""

import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from models.errors import (
    AllZeroComposition, Diagnostic, GlyphPlotError, InvalidCompositions, MissingValue,
    NegativeSliceValue, NonNumeric,
)
from models.plot_spec import LongSlices, PlotSpec, ValidationIssue, ValidationReport, WideSlices
from models.table import CompositionRow, DataTable
from projections.projection_factory import ProjectionFactory

logger = logging.getLogger(__name__)

_GROUP_KEY = "__group__"
_CATEGORY_KEY = "__category__"
_VALUE_KEY = "__value__"
_SOURCE_ROW = "__source_row__"
_SLICE_PREFIX = "__slice__:"
MISSING_FACET = "(missing)"


def cell_text(value) -> Optional[str]:
    """Render a cell as text; integral floats drop the '.0'. None for missing."""
    if value is None:
        return None
    if isinstance(value, str):
        return value if value.strip() else None
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return None
        if float(value).is_integer():
            return str(int(value))
        return repr(float(value))
    return str(value)


# === VALIDATION ===

def _first_true(mask: np.ndarray) -> Optional[int]:
    hits = np.flatnonzero(mask)
    return int(hits[0]) if len(hits) else None


def validate_spec(spec: PlotSpec, table: DataTable) -> ValidationReport:
    """
    Check that a spec can be rendered from a table

    Args:
        spec: Plot specification
        table: Data table

    Returns:
        ValidationReport listing every violation; empty means renderable
    """
    issues: List[ValidationIssue] = []

    def require(column: Optional[str], role: str) -> bool:
        if column is None:
            return False
        if not table.has_column(column):
            issues.append(ValidationIssue(
                code="MissingColumn",
                message=f"{role} column '{column}' not found in data",
                column=column,
            ))
            return False
        return True

    def require_numeric(column: str, role: str) -> None:
        _, bad = table.numeric_column(column)
        row = _first_true(bad)
        if row is not None:
            issues.append(ValidationIssue(
                code="NonNumericColumn",
                message=f"{role} column '{column}' has non-numeric value {table.column(column).iloc[row]!r}",
                column=column,
                row=row,
            ))

    x_ok = require(spec.x_column, "x")
    y_ok = require(spec.y_column, "y")
    for column, ok in ((spec.x_column, x_ok), (spec.y_column, y_ok)):
        if ok:
            require_numeric(column, "position")

    slice_spec = spec.slice_spec
    if isinstance(slice_spec, WideSlices):
        for column in slice_spec.columns:
            if require(column, "slice"):
                require_numeric(column, "slice")
    else:
        require(slice_spec.category, "category")
        if require(slice_spec.value, "value"):
            require_numeric(slice_spec.value, "value")
        for column in slice_spec.group_by:
            require(column, "group")

    if require(spec.size_column, "size"):
        require_numeric(spec.size_column, "size")
    require(spec.facet_column, "facet")
    require(spec.label_column, "label")

    if spec.map_source is not None and spec.projection is None:
        issues.append(ValidationIssue(
            code="ProjectionRequired",
            message="a map source is set but no projection is given",
            target="spec",
        ))
    if spec.projection is not None and not ProjectionFactory.is_supported(spec.projection):
        issues.append(ValidationIssue(
            code="UnsupportedProjection",
            message=f"unsupported projection '{spec.projection}' (available: "
                    f"{', '.join(ProjectionFactory.available_projections())})",
            target="spec",
        ))
    if spec.map_source is not None and not spec.map_source.is_file():
        issues.append(ValidationIssue(
            code="MapSourceNotFound",
            message=f"MapSourceNotFound: GeoJSON file not found: {spec.map_source}",
            target="map",
        ))

    if spec.is_geographic:
        for column, limit, ok in ((spec.x_column, 180.0, x_ok), (spec.y_column, 90.0, y_ok)):
            if not ok:
                continue
            values, _ = table.numeric_column(column)
            row = _first_true(np.abs(np.nan_to_num(values)) > limit)
            if row is not None:
                issues.append(ValidationIssue(
                    code="CoordinateOutOfRange",
                    message=f"column '{column}' value {values[row]:g} outside [-{limit:g}, {limit:g}] degrees",
                    column=column,
                    row=row,
                ))

    report = ValidationReport(issues=tuple(issues))
    if not report.ok:
        logger.info(f"Spec validation found {len(report)} issue(s)")
    return report


# === PIVOT ===

def pivot_long_to_wide(
    table: DataTable,
    category_col: str,
    value_col: str,
    group_cols: Sequence[str],
    *,
    carry_cols: Sequence[str] = (),
    category_prefix: str = "",
) -> DataTable:
    """
    Reshape long (group, category, value) rows to one row per group

    Args:
        table: Long-format table
        category_col: Column holding category names
        value_col: Numeric column holding magnitudes
        group_cols: Columns whose combined value identifies a group
        carry_cols: Extra columns copied from each group's first row
        category_prefix: Prepended to every category column name

    Returns:
        Table with group_cols, carry_cols, then one column per category in
        first-appearance order; groups in first-appearance order; duplicate
        (group, category) pairs are summed and absent pairs are 0
    """
    group_cols = list(group_cols)
    carry_cols = [c for c in dict.fromkeys(carry_cols) if c not in group_cols]

    values, bad = table.numeric_column(value_col)
    bad_row = _first_true(bad)
    if bad_row is not None:
        raise NonNumeric(bad_row, value_col, table.column(value_col).iloc[bad_row])

    frame = table.frame
    if len(frame) == 0:
        return DataTable(pd.DataFrame(columns=group_cols + carry_cols), source=table.source)

    keys = group_cols or [_GROUP_KEY]
    work = frame[group_cols + carry_cols].copy()
    if not group_cols:
        work[_GROUP_KEY] = 0
    texts = (cell_text(v) for v in frame[category_col])
    work[_CATEGORY_KEY] = [None if text is None else category_prefix + text for text in texts]
    work[_VALUE_KEY] = np.nan_to_num(values, nan=0.0)
    work = work[work[_CATEGORY_KEY].notna()]
    if len(work) == 0:
        return DataTable(pd.DataFrame(columns=group_cols + carry_cols), source=table.source)

    categories = list(work[_CATEGORY_KEY].drop_duplicates())
    order = work[keys].drop_duplicates()
    if len(keys) == 1:
        index = pd.Index(order[keys[0]], name=keys[0])
    else:
        index = pd.MultiIndex.from_frame(order)

    grouped = work.groupby(keys + [_CATEGORY_KEY], sort=False, dropna=False)[_VALUE_KEY].sum()
    parts = [grouped.unstack(_CATEGORY_KEY, fill_value=0).reindex(index=index, columns=categories, fill_value=0)]
    if carry_cols:
        firsts = work.groupby(keys, sort=False, dropna=False)[carry_cols].first()
        parts.insert(0, firsts.reindex(index=index))

    wide = pd.concat(parts, axis=1).reset_index()
    if not group_cols:
        wide = wide.drop(columns=[_GROUP_KEY])
    wide = wide[group_cols + carry_cols + categories]
    wide.columns.name = None

    logger.debug(f"Pivoted {len(frame)} long rows into {len(wide)} groups x {len(categories)} categories")
    return DataTable(wide, source=table.source)


# === EXTRACTION ===

def slice_categories(spec: PlotSpec, table: DataTable) -> List[str]:
    """Global category order: column order (wide) or first appearance (long)"""
    slice_spec = spec.slice_spec
    if isinstance(slice_spec, WideSlices):
        return list(slice_spec.columns)
    seen: Dict[str, None] = {}
    for value in table.column(slice_spec.category):
        text = cell_text(value)
        if text is not None:
            seen.setdefault(text, None)
    return list(seen)


def _check_numeric_cell(
    table: DataTable,
    column: str,
    numeric: Tuple[np.ndarray, np.ndarray, np.ndarray],
    row: int,
    skip_missing: bool,
    errors: List[GlyphPlotError],
) -> Tuple[Optional[float], bool]:
    """Returns (value, incomplete)"""
    values, bad, missing = numeric
    if bad[row]:
        errors.append(NonNumeric(row, column, table.column(column).iloc[row]))
        return None, False
    if missing[row]:
        if skip_missing:
            return None, True
        errors.append(MissingValue(row, column))
        return None, False
    return float(values[row]), False


def _skip_warning(table: DataTable, row: int, diagnostics: Optional[List[Diagnostic]]) -> None:
    message = "row skipped: missing value(s) with skip_incomplete_rows set"
    logger.warning(f"{table.source_name}:{row + 1}: {message}")
    if diagnostics is not None:
        diagnostics.append(Diagnostic("warning", table.source_name, message, row=row + 1))


def _numeric(table: DataTable, column: str) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    values, bad = table.numeric_column(column)
    return values, bad, table.missing_mask(column)


def _extract_rows(
    spec: PlotSpec,
    table: DataTable,
    slice_columns: Sequence[str],
    row_ids: Sequence[int],
    diagnostics: Optional[List[Diagnostic]],
    errors: List[GlyphPlotError],
) -> List[CompositionRow]:
    skip = spec.skip_incomplete_rows
    xs = _numeric(table, spec.x_column)
    ys = _numeric(table, spec.y_column)
    slices = [(column, _numeric(table, column)) for column in slice_columns]
    sizes = _numeric(table, spec.size_column) if spec.size_column else None
    facets = table.column(spec.facet_column).tolist() if spec.facet_column else None
    labels = table.column(spec.label_column).tolist() if spec.label_column else None

    rows: List[CompositionRow] = []
    for i in range(len(table)):
        source_row = row_ids[i]
        row_errors: List[GlyphPlotError] = []
        incomplete = False

        x, gap = _check_numeric_cell(table, spec.x_column, xs, i, skip, row_errors)
        incomplete |= gap
        y, gap = _check_numeric_cell(table, spec.y_column, ys, i, skip, row_errors)
        incomplete |= gap

        values = []
        for column, numeric in slices:
            value, gap = _check_numeric_cell(table, column, numeric, i, skip, row_errors)
            incomplete |= gap
            if value is not None and value < 0:
                row_errors.append(NegativeSliceValue(i, column, value))
            values.append(value)

        size = None
        if sizes is not None:
            size, gap = _check_numeric_cell(table, spec.size_column, sizes, i, skip, row_errors)
            incomplete |= gap

        for error in row_errors:
            error.row = source_row
        if row_errors:
            errors.extend(row_errors)
            continue

        if incomplete:
            _skip_warning(table, source_row, diagnostics)
            continue

        if not any(v > 0 for v in values):
            errors.append(AllZeroComposition(row=source_row))
            continue

        facet_key = None
        if facets is not None:
            facet_key = cell_text(facets[i]) or MISSING_FACET

        rows.append(CompositionRow(
            anchor_x=x,
            anchor_y=y,
            values=tuple(values),
            row_id=source_row,
            size_value=size,
            facet_key=facet_key,
            label=cell_text(labels[i]) if labels is not None else None,
        ))

    return rows


def extract_compositions(
    spec: PlotSpec,
    table: DataTable,
    diagnostics: Optional[List[Diagnostic]] = None,
) -> List[CompositionRow]:
    """
    Turn table rows into compositions

    Args:
        spec: Validated plot spec
        table: Data table
        diagnostics: Optional list that receives skip warnings

    Returns:
        One CompositionRow per plottable row (wide) or per group (long),
        values ordered by the global category order

    Raises:
        InvalidCompositions: every NonNumeric, MissingValue, NegativeSliceValue
            and AllZeroComposition found, with source rows
    """
    errors: List[GlyphPlotError] = []

    if isinstance(spec.slice_spec, WideSlices):
        rows = _extract_rows(
            spec, table, spec.slice_spec.columns, range(len(table)), diagnostics, errors
        )
    else:
        rows = _extract_long(spec, table, diagnostics, errors)

    if errors:
        errors.sort(key=lambda e: (e.row if e.row is not None else -1))
        raise InvalidCompositions(errors)

    logger.info(f"Extracted {len(rows)} compositions from {len(table)} rows of {table.source_name}")
    return rows


def _extract_long(
    spec: PlotSpec,
    table: DataTable,
    diagnostics: Optional[List[Diagnostic]],
    errors: List[GlyphPlotError],
) -> List[CompositionRow]:
    slice_spec: LongSlices = spec.slice_spec
    skip = spec.skip_incomplete_rows

    # per-source-row checks, so diagnostics name the offending line
    values = _numeric(table, slice_spec.value)
    category_missing = table.missing_mask(slice_spec.category)
    group_missing = [table.missing_mask(column) for column in slice_spec.group_by]
    keep = np.ones(len(table), dtype=bool)
    for i in range(len(table)):
        row_errors: List[GlyphPlotError] = []
        value, gap = _check_numeric_cell(table, slice_spec.value, values, i, skip, row_errors)
        if category_missing[i]:
            if skip:
                gap = True
            else:
                row_errors.append(MissingValue(i, slice_spec.category))
        for column, missing in zip(slice_spec.group_by, group_missing):
            if missing[i]:
                row_errors.append(MissingValue(i, column))
        if value is not None and value < 0:
            row_errors.append(NegativeSliceValue(i, slice_spec.value, value))

        if row_errors:
            errors.extend(row_errors)
            keep[i] = False
        elif gap:
            keep[i] = False
            _skip_warning(table, i, diagnostics)

    if errors:
        return []

    group_cols = list(slice_spec.group_by) or [spec.x_column, spec.y_column] + (
        [spec.facet_column] if spec.facet_column else []
    )
    carry = [
        c for c in (spec.x_column, spec.y_column, spec.size_column, spec.facet_column, spec.label_column)
        if c is not None and c not in group_cols
    ]
    carry = list(dict.fromkeys(carry))

    frame = table.frame[keep].copy()
    frame[_SOURCE_ROW] = np.flatnonzero(keep)
    wide = pivot_long_to_wide(
        DataTable(frame, source=table.source),
        slice_spec.category,
        slice_spec.value,
        group_cols,
        carry_cols=carry + [_SOURCE_ROW],
        category_prefix=_SLICE_PREFIX,
    )

    # categories seen only in skipped rows still get a (zero) slot; the prefix
    # keeps a category named like a group or carried column apart from it
    slice_columns = [_SLICE_PREFIX + category for category in slice_categories(spec, table)]
    wide = DataTable(
        wide.frame.reindex(columns=group_cols + carry + [_SOURCE_ROW] + slice_columns, fill_value=0),
        source=table.source,
    )
    row_ids = [int(r) for r in wide.column(_SOURCE_ROW)] if len(wide) else []
    return _extract_rows(spec, wide, slice_columns, row_ids, diagnostics, errors)

"""
Errors and diagnostics
Exception hierarchy with source locations for user-facing diagnostics
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence


@dataclass(frozen=True)
class Diagnostic:
    """One line-oriented diagnostic: "<severity>: <source>[:<row>]: <message>" """

    severity: str  # "error" | "warning"
    source: str
    message: str
    row: Optional[int] = None  # 1-based data row

    def format(self) -> str:
        location = self.source if self.row is None else f"{self.source}:{self.row}"
        return f"{self.severity}: {location}: {self.message}"


class GlyphPlotError(Exception):
    """Base class for all glyphplot errors"""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.row = row  # 0-based source index
        self.column = column

    def to_diagnostic(self, source: str, severity: str = "error") -> Diagnostic:
        data_row = None if self.row is None else self.row + 1
        return Diagnostic(severity=severity, source=source, message=self.message, row=data_row)

    def to_diagnostics(self, source: str) -> List[Diagnostic]:
        return [self.to_diagnostic(source)]


# === DATA ERRORS ===

class MissingColumn(GlyphPlotError):
    def __init__(self, column: str):
        super().__init__(f"missing column '{column}'", column=column)


class DuplicateColumn(GlyphPlotError):
    def __init__(self, column: str):
        super().__init__(f"duplicate column name '{column}'", column=column)


class NonNumeric(GlyphPlotError):
    def __init__(self, row: Optional[int], column: str, value=None):
        shown = "" if value is None else f" {value!r}"
        super().__init__(f"non-numeric value{shown} in column '{column}'", row=row, column=column)
        self.value = value


class MissingValue(GlyphPlotError):
    def __init__(self, row: int, column: str):
        super().__init__(f"missing value in column '{column}'", row=row, column=column)


class NegativeSliceValue(GlyphPlotError):
    def __init__(self, row: Optional[int] = None, column: Optional[str] = None, value: Optional[float] = None):
        where = f" in column '{column}'" if column else ""
        shown = f" {value:g}" if value is not None else ""
        super().__init__(f"negative slice value{shown}{where}", row=row, column=column)
        self.value = value


class AllZeroComposition(GlyphPlotError):
    def __init__(self, row: Optional[int] = None):
        super().__init__("all slice values are zero", row=row)


class InvalidCompositions(GlyphPlotError):
    """Aggregate of every per-row composition error found in one pass"""

    def __init__(self, errors: Sequence[GlyphPlotError]):
        self.errors = list(errors)
        super().__init__(f"{len(self.errors)} invalid composition row(s)")

    def to_diagnostics(self, source: str) -> List[Diagnostic]:
        return [error.to_diagnostic(source) for error in self.errors]


class DataSourceNotFound(GlyphPlotError):
    def __init__(self, path):
        super().__init__(f"data file not found or unreadable: {path}")
        self.path = path


# === GEOMETRY / LAYOUT ERRORS ===

class FullCircleSector(GlyphPlotError):
    def __init__(self):
        super().__init__("sector spans the full circle; use full_circle_path")


class NoFiniteValues(GlyphPlotError):
    def __init__(self, column: Optional[str] = None):
        where = f" in column '{column}'" if column else ""
        super().__init__(f"no finite values{where} to fit a scale", column=column)


class RowsColsTooSmall(GlyphPlotError):
    def __init__(self, rows: int, cols: int, needed: int):
        super().__init__(f"facet grid {rows}x{cols} cannot hold {needed} panels")


class PlotAreaTooSmall(GlyphPlotError):
    def __init__(self, width: float, height: float, what: str = "plot area"):
        super().__init__(f"{what} {width:g}x{height:g} leaves no room to draw")


# === MAP ERRORS ===

class UnsupportedProjection(GlyphPlotError):
    def __init__(self, name: str):
        super().__init__(f"unsupported projection '{name}'")
        self.name = name


class AntipodePole(GlyphPlotError):
    def __init__(self, lon: float, lat: float):
        super().__init__(f"point ({lon:g}, {lat:g}) is antipodal to the projection centre")


class DegenerateExtent(GlyphPlotError):
    def __init__(self):
        super().__init__("projected extent has zero width or height")


class UnclosedRing(GlyphPlotError):
    def __init__(self, feature: str, ring: int, reason: str = "first and last points differ"):
        super().__init__(f"feature '{feature}' ring {ring} is not closed: {reason}")
        self.feature = feature
        self.ring = ring


class MapSourceNotFound(GlyphPlotError):
    def __init__(self, path):
        super().__init__(f"MapSourceNotFound: GeoJSON file not found or unreadable: {path}")
        self.path = path


class GeoJSONError(GlyphPlotError):
    pass


# === SPEC / CLI ERRORS ===

class SpecFileError(GlyphPlotError):
    pass


class UsageError(GlyphPlotError):
    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


class ValidationFailed(GlyphPlotError):
    """validate_spec found problems; carries the whole report"""

    def __init__(self, report):
        self.report = report
        super().__init__(f"{len(report)} validation problem(s)")

    def to_diagnostics(self, source: str, sources: Optional[Dict[str, str]] = None) -> List[Diagnostic]:
        """One diagnostic per issue; sources maps an issue target ("data", "spec", "map") to a file"""
        sources = sources or {}
        return [
            Diagnostic(
                severity="error",
                source=sources.get(issue.target, source),
                message=issue.message,
                row=None if issue.row is None else issue.row + 1,
            )
            for issue in self.report
        ]

"""
Command-line runner
Parses flags, renders one plot and reports diagnostics on stderr

Exit codes: 0 success, 1 validation/render error, 2 usage error.
"""

import argparse
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from config.settings import get_settings
from core.scene_builder import build_scene
from data.csv_loader import load_table
from models.errors import (
    DataSourceNotFound,
    Diagnostic,
    GeoJSONError,
    GlyphPlotError,
    InvalidCompositions,
    MapSourceNotFound,
    SpecFileError,
    UnclosedRing,
    UsageError,
    ValidationFailed,
)
from models.plot_spec import JitterSpec, PlotSpec
from models.run_config import RunConfig
from models.spec_document import load_spec_document
from render.svg_renderer import render_scene
from utils.logging_utils import configure_logging, verbosity_to_level

logger = logging.getLogger(__name__)

PROG = "glyphplot"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(message, usage=self.format_usage())


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog=PROG,
        description="Overlay a scatterplot or map with fixed-radius pie-glyphs and write an SVG document.",
    )
    parser.add_argument("--data", required=True, help="CSV data file")
    parser.add_argument("--spec", required=True, help="JSON plot-spec file")
    parser.add_argument("--out", required=True, help="Output SVG path (written atomically)")
    parser.add_argument("--width", type=float, help="Canvas width, overrides the spec file")
    parser.add_argument("--height", type=float, help="Canvas height, overrides the spec file")
    parser.add_argument("--projection", help="Map projection, overrides the spec file")
    parser.add_argument(
        "--interactive", action="store_true", default=None,
        help="Attach hover tooltips (raw value and percentage per slice)",
    )
    parser.add_argument("--seed", type=int, help="Jitter seed; enables jitter when the spec has none")
    parser.add_argument(
        "--verbose", "-v", action="count", default=0,
        help="-v logs progress, -vv logs debug detail",
    )
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """
    Parse command-line flags

    Raises:
        UsageError: missing or malformed flags (exit code 2)
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return RunConfig(
            data_path=Path(args.data),
            spec_path=Path(args.spec),
            out_path=Path(args.out),
            width=args.width,
            height=args.height,
            projection=args.projection,
            interactive=args.interactive,
            seed=args.seed,
            log_level=verbosity_to_level(args.verbose, get_settings().log_level),
        )
    except ValidationError as e:
        problems = "; ".join(
            f"--{'.'.join(str(p) for p in err['loc']).replace('_', '-')}: {err['msg']}" for err in e.errors()
        )
        raise UsageError(problems, usage=parser.format_usage())


def apply_overrides(spec: PlotSpec, config: RunConfig) -> PlotSpec:
    """Flags beat spec-file values"""
    jitter = None
    if config.seed is not None:
        amount = spec.jitter.amount if spec.jitter is not None else None
        jitter = JitterSpec(amount=amount, seed=config.seed)
    return spec.with_overrides(
        width=config.width,
        height=config.height,
        projection=config.projection,
        interactive=config.interactive,
        jitter=jitter,
    )


def write_atomic(path: Path, text: str) -> None:
    """Write via a temp file in the target directory and rename over path"""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    handle, temp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="") as stream:
            stream.write(text)
            stream.flush()
            os.fsync(stream.fileno())
        os.replace(temp_name, path)
    except BaseException:
        try:
            os.unlink(temp_name)
        except FileNotFoundError:
            pass
        raise


def _error_diagnostics(error: GlyphPlotError, sources: Dict[str, str]) -> List[Diagnostic]:
    if isinstance(error, ValidationFailed):
        return error.to_diagnostics(sources["spec"], sources=sources)
    if isinstance(error, (MapSourceNotFound, UnclosedRing, GeoJSONError)):
        return error.to_diagnostics(sources.get("map", sources["spec"]))
    if isinstance(error, SpecFileError):
        return error.to_diagnostics(sources["spec"])
    if isinstance(error, InvalidCompositions) or error.row is not None or error.column is not None:
        return error.to_diagnostics(sources["data"])
    if isinstance(error, DataSourceNotFound):
        return error.to_diagnostics(sources["data"])
    return error.to_diagnostics(sources["spec"])


def _report(diagnostics: Sequence[Diagnostic], stream: TextIO) -> None:
    for diagnostic in diagnostics:
        print(diagnostic.format(), file=stream)


def run(config: RunConfig, stderr: Optional[TextIO] = None) -> int:
    """
    Render one plot from files

    Returns:
        0 when the document was written, 1 on any validation or render error
    """
    stderr = stderr or sys.stderr
    settings = get_settings()
    sources = {"data": str(config.data_path), "spec": str(config.spec_path)}
    diagnostics: List[Diagnostic] = []

    try:
        spec = load_spec_document(
            config.spec_path,
            defaults={
                "width": settings.default_width,
                "height": settings.default_height,
                "pie_radius": settings.default_radius,
            },
        )
        try:
            spec = apply_overrides(spec, config)
        except ValidationError as e:
            raise SpecFileError(f"invalid override: {e.errors()[0]['msg']}")
        if spec.map_source is not None:
            sources["map"] = str(spec.map_source)

        table = load_table(config.data_path)
        scene = build_scene(spec, table, diagnostics=diagnostics, settings=settings)
        document = render_scene(scene, interactive=spec.interactive)
    except GlyphPlotError as e:
        logger.info(f"Run failed: {e}")
        _report(diagnostics + _error_diagnostics(e, sources), stderr)
        return EXIT_ERROR
    except Exception as e:
        logger.exception("Unexpected error while rendering")
        _report(diagnostics + [Diagnostic("error", sources["spec"], f"internal error: {e}")], stderr)
        return EXIT_ERROR

    try:
        write_atomic(config.out_path, document)
    except OSError as e:
        _report(diagnostics + [Diagnostic("error", str(config.out_path), f"cannot write output: {e}")], stderr)
        return EXIT_ERROR

    _report(diagnostics, stderr)
    logger.info(f"Wrote {config.out_path} ({len(document)} bytes, {scene.glyph_count} glyphs)")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_args(argv)
    except UsageError as e:
        sys.stderr.write(e.usage)
        print(f"error: {PROG}: {e.message}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(config.log_level, get_settings().log_file)
    return run(config)

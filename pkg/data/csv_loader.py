"""
CSV loader
Reads delimited data into a DataTable; only empty cells count as missing
"""

import logging
from pathlib import Path

import pandas as pd

from models.errors import DataSourceNotFound, DuplicateColumn, GlyphPlotError
from models.table import DataTable

logger = logging.getLogger(__name__)


def load_table(path: Path) -> DataTable:
    """
    Load a CSV file with a header row

    Literal strings such as "NA" stay strings. Duplicate header names are
    rejected rather than renamed.

    Raises:
        DataSourceNotFound: path missing or unreadable
        DuplicateColumn: a header name appears twice
        GlyphPlotError: the file cannot be parsed as CSV
    """
    path = Path(path)
    if not path.is_file():
        raise DataSourceNotFound(path)

    try:
        header = pd.read_csv(
            path, header=None, nrows=1, dtype=str, keep_default_na=False, skipinitialspace=True
        )
    except pd.errors.EmptyDataError:
        logger.warning(f"{path} is empty")
        return DataTable(pd.DataFrame(), source=path)
    except (OSError, UnicodeDecodeError) as e:
        raise DataSourceNotFound(path) from e
    except pd.errors.ParserError as e:
        raise GlyphPlotError(f"cannot parse CSV header: {e}") from e

    names = [str(name) for name in header.iloc[0]] if len(header) else []
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateColumn(name)
        seen.add(name)

    try:
        frame = pd.read_csv(path, keep_default_na=False, na_values=[""], skipinitialspace=True)
    except (OSError, UnicodeDecodeError) as e:
        raise DataSourceNotFound(path) from e
    except pd.errors.ParserError as e:
        raise GlyphPlotError(f"cannot parse CSV: {e}") from e

    logger.info(f"Loaded {len(frame)} row(s) x {len(frame.columns)} column(s) from {path}")
    return DataTable(frame, source=path)

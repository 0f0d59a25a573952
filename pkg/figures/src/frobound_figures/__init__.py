"""Figure regeneration for frobound experiment CSVs."""

from .plots import FIGURE_IDS, build_figure, render
from .reader import CsvFormatError, Row, read_rows

__all__ = ["FIGURE_IDS", "CsvFormatError", "Row", "build_figure", "read_rows", "render"]

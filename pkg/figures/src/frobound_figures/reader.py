"""Strict reader for the frobound experiment CSV schema.

The figure scripts consume the experiment output file and nothing else, so
the schema is pinned here: exact header, 13 comma-separated columns, ints
for a/b/c/f_exact/f_known_upper, reals elsewhere, free-text error marker
last.  Malformed input is rejected with a 1-based line number.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

EXPECTED_HEADER = [
    "a", "b", "c", "z", "f_exact", "f_new_upper_n1", "f_new_upper",
    "f_known_upper", "f_davison_lower", "z_pow_5_4",
    "ratio_known_over_new", "ratio_new_over_exact", "error",
]

_INT_COLUMNS = {"a", "b", "c", "f_exact", "f_known_upper"}


class CsvFormatError(ValueError):
    """Malformed experiment CSV; message starts with the offending line."""


@dataclass(frozen=True)
class Row:
    a: int
    b: int
    c: int
    z: float
    f_exact: int | None
    f_new_upper_n1: float | None
    f_new_upper: float | None
    f_known_upper: int | None
    f_davison_lower: float | None
    z_pow_5_4: float | None
    ratio_known_over_new: float | None
    ratio_new_over_exact: float | None
    error: str


def _parse(name: str, text: str, lineno: int):
    if name == "error":
        return text
    if text == "":
        return None
    try:
        return int(text) if name in _INT_COLUMNS else float(text)
    except ValueError:
        raise CsvFormatError(f"line {lineno}: bad value {text!r} in column {name!r}") from None


def read_rows(path) -> list[Row]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError("line 1: empty file, expected header") from None
        if header != EXPECTED_HEADER:
            raise CsvFormatError(f"line 1: unexpected header {','.join(header)!r}")
        rows = []
        for lineno, cells in enumerate(reader, start=2):
            if len(cells) != len(EXPECTED_HEADER):
                raise CsvFormatError(
                    f"line {lineno}: expected {len(EXPECTED_HEADER)} fields, got {len(cells)}"
                )
            values = {n: _parse(n, cell, lineno) for n, cell in zip(EXPECTED_HEADER, cells)}
            for required in ("a", "b", "c", "z"):
                if values[required] is None:
                    raise CsvFormatError(f"line {lineno}: missing column {required!r}")
            rows.append(Row(**values))
    return rows


def usable(rows: list[Row]) -> list[Row]:
    """Rows that carry data (no error marker)."""
    return [r for r in rows if not r.error]

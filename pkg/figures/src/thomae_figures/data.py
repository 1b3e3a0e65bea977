"""Reading the `x,f` CSV contract emitted by `thomae sample` and
`thomae figure-data`."""

from __future__ import annotations

import csv


class FigureDataError(Exception):
    """Missing or malformed input CSV."""


def read_xy_csv(path: str) -> list[tuple[float, float]]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["x", "f"]:
                raise FigureDataError(f"{path}: expected header 'x,f', got {header!r}")
            points = []
            for lineno, row in enumerate(reader, start=2):
                if len(row) != 2:
                    raise FigureDataError(f"{path}:{lineno}: expected 2 columns")
                try:
                    points.append((float(row[0]), float(row[1])))
                except ValueError as exc:
                    raise FigureDataError(f"{path}:{lineno}: {exc}") from exc
    except OSError as exc:
        raise FigureDataError(f"cannot read {path}: {exc}") from exc
    if not points:
        raise FigureDataError(f"{path}: no data rows")
    return points

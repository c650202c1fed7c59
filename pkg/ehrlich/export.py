"""Readers and writers for polynomial files, start vectors, reports, tables and trajectories."""
from __future__ import annotations

import csv
import json
import os
from typing import Dict, Iterable, List, Optional, Sequence

from .errors import ExportError, ParseError, PolynomialError
from .experiments import TABLE_COLUMNS, TableRow
from .numerics.apcx import exact_complex, format_decimal
from .numerics.polynomial import Polynomial
from .numerics.solver import SolveReport

TRAJECTORY_COLUMNS = ('k', 'component_index', 're', 'im')
TRAJECTORY_DIGITS = 30


def _ensure_parent(path: str):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def read_polynomial(path: str) -> Polynomial:
    with open(path, 'r', encoding='utf-8') as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise ExportError(f"{path}: not valid JSON ({e})")
    try:
        return Polynomial.from_json(data)
    except (PolynomialError, ParseError) as e:
        raise ExportError(f"{path}: {e}")


def parse_vector(entries: Iterable) -> List:
    """Exact (re, im) pairs from ["re", "im"] lists, "re,im" strings or bare reals."""
    out = []
    for entry in entries:
        if isinstance(entry, str) and ',' in entry:
            entry = entry.split(',')
        try:
            out.append(exact_complex(entry))
        except ParseError as e:
            raise ExportError(str(e))
    return out


def read_initial(path: str) -> List:
    """Start vector from JSON (list of ["re", "im"]) or text with one "re,im" per line."""
    with open(path, 'r', encoding='utf-8') as fh:
        text = fh.read()
    if text.lstrip().startswith('['):
        try:
            return parse_vector(json.loads(text))
        except json.JSONDecodeError as e:
            raise ExportError(f"{path}: not valid JSON ({e})")
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith('#')]
    return parse_vector(lines)


def write_report_json(report: SolveReport, path: str, digits: Optional[int] = None):
    _ensure_parent(path)
    with open(path, 'w', encoding='utf-8') as fh:
        json.dump(report.to_json(digits), fh, indent=2)


def trajectory_rows(report: SolveReport, digits: int = TRAJECTORY_DIGITS) -> List[Dict[str, str]]:
    if not report.trace:
        raise ExportError("report has no iterates")
    rows = []
    for rec in report.trace:
        for i, z in enumerate(rec.x, start=1):
            rows.append({'k': str(rec.k), 'component_index': str(i),
                         're': format_decimal(z.real, digits), 'im': format_decimal(z.imag, digits)})
    return rows


def export_trajectories(report: SolveReport, path: str, digits: int = TRAJECTORY_DIGITS) -> int:
    """CSV with one row per component per iterate (k = 0 included); returns the row count."""
    rows = trajectory_rows(report, digits)
    _ensure_parent(path)
    with open(path, 'w', encoding='utf-8', newline='') as fh:
        writer = csv.DictWriter(fh, fieldnames=TRAJECTORY_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    return len(rows)


def read_trajectories(path: str) -> List[Dict[str, str]]:
    with open(path, 'r', encoding='utf-8', newline='') as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != TRAJECTORY_COLUMNS:
            raise ExportError(f"{path}: expected columns {','.join(TRAJECTORY_COLUMNS)}")
        return list(reader)


def format_table_text(rows: Sequence[TableRow]) -> str:
    cells = [row.formatted() for row in rows]
    columns = TABLE_COLUMNS[:-1]
    widths = {c: max([len(c)] + [len(cell[c]) for cell in cells]) for c in columns}
    lines = ['  '.join(c.rjust(widths[c]) for c in columns)]
    for cell in cells:
        line = '  '.join(cell[c].rjust(widths[c]) for c in columns)
        if cell['error']:
            line += f"  ! {cell['error']}"
        lines.append(line)
    return '\n'.join(lines)


def write_table(rows: Sequence[TableRow], path: str):
    """CSV for .csv, JSON for .json, aligned text otherwise."""
    _ensure_parent(path)
    suffix = os.path.splitext(path)[1].lower()
    cells = [row.formatted() for row in rows]
    with open(path, 'w', encoding='utf-8', newline='') as fh:
        if suffix == '.csv':
            writer = csv.DictWriter(fh, fieldnames=TABLE_COLUMNS)
            writer.writeheader()
            writer.writerows(cells)
        elif suffix == '.json':
            json.dump(cells, fh, indent=2)
        else:
            fh.write(format_table_text(rows) + '\n')


def format_iterates_text(listing) -> str:
    """Text block for iterate_listing(): one line per iterate and component."""
    lines = []
    for k, components in listing:
        for i, text in enumerate(components, start=1):
            lines.append(f"k={k}  x{i} = {text}")
    return '\n'.join(lines)

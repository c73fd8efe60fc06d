"""Bit-exact CSV and JSON record formatting.

CSV is RFC-4180-style with a mandatory header row; JSON is one record
per line with snake_case keys.  Numbers below 1e15 print as plain
decimal (never scientific) with 12 significant digits, so identical
configurations produce byte-identical files.
"""

from __future__ import annotations

import numpy as np

SIGNIFICANT_DIGITS = 12


def fmt_number(x) -> str:
    """12-significant-digit decimal notation, '.' separator, no exponent."""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    value = float(x)
    if not np.isfinite(value):
        return "nan" if np.isnan(value) else ("inf" if value > 0 else "-inf")
    if value == 0.0:
        return "0"
    out = np.format_float_positional(
        value, precision=SIGNIFICANT_DIGITS, unique=False,
        fractional=False, trim="-")
    return out


def fmt_cell(x) -> str:
    if isinstance(x, str):
        if any(ch in x for ch in ',"\n'):
            return '"' + x.replace('"', '""') + '"'
        return x
    if isinstance(x, (list, tuple, np.ndarray)):
        return '"' + ";".join(fmt_number(v) for v in x) + '"'
    return fmt_number(x)


def rows_to_csv(rows: list[dict]) -> str:
    """Serialize homogeneous dict rows; column order follows the first row."""
    if not rows:
        return "\n"
    header = list(rows[0].keys())
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt_cell(row[k]) for k in header))
    return "\r\n".join(lines) + "\r\n"


def _json_value(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, str):
        escaped = x.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(x, dict):
        return _json_object(x)
    if isinstance(x, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_json_value(v) for v in x) + "]"
    return fmt_number(x)


def _json_object(record: dict) -> str:
    parts = [f'"{k}": {_json_value(v)}' for k, v in record.items()]
    return "{" + ", ".join(parts) + "}"


def records_to_jsonl(records: list[dict]) -> str:
    """One JSON object per line, keys in insertion order."""
    return "".join(_json_object(r) + "\n" for r in records)

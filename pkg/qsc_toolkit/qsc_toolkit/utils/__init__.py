# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Utility functions for QSC Toolkit
"""

import csv
import dataclasses
import io
import json

from qsc_toolkit.exceptions import ValidationError

__all__ = [
    "parse_int_list",
    "as_json",
    "flatten",
    "to_csv",
]


def parse_int_list(value):
    """Parse "1,2,3" or a list into a tuple of ints"""
    if value is None or value == "":
        return ()
    if isinstance(value, int) and not isinstance(value, bool):
        return (value,)
    parts = [part for part in value.split(",") if part.strip()] if isinstance(value, str) else value
    try:
        return tuple(int(part) for part in parts)
    except (TypeError, ValueError):
        raise ValidationError(f"Expected a list of integers, got {value!r}")


def _json_handler(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        if hasattr(obj, "as_dict"):
            return obj.as_dict()
        return dataclasses.asdict(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "as_dict"):
        return obj.as_dict()
    if hasattr(obj, "to_text"):
        return obj.to_text()
    # numpy and galois scalars
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def as_json(obj, indent=1):
    """Serialize with sorted keys so identical inputs give identical bytes"""
    return json.dumps(obj, indent=indent, sort_keys=True, default=_json_handler, separators=(",", ": "))


def flatten(doc, prefix=""):
    """Flatten nested dicts/lists into (dotted key, value) pairs"""
    rows = []
    if isinstance(doc, dict):
        for key in sorted(doc):
            rows.extend(flatten(doc[key], f"{prefix}.{key}" if prefix else str(key)))
    elif isinstance(doc, (list, tuple)):
        for i, value in enumerate(doc):
            rows.extend(flatten(value, f"{prefix}[{i}]"))
    else:
        rows.append((prefix, doc))
    return rows


def to_csv(rows):
    """Render a list of dict rows (or key/value pairs) as CSV text"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    if rows and isinstance(rows[0], dict):
        header = sorted({key for row in rows for key in row})
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(row.get(key)) for key in header])
    else:
        writer.writerow(["key", "value"])
        for key, value in rows:
            writer.writerow([key, _csv_cell(value)])

    return buffer.getvalue()


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, (dict, list, tuple, set, frozenset)):
        return json.dumps(value, sort_keys=True, default=_json_handler, separators=(",", ":"))
    return value

"""
Fixture and result file input/output.

A fixture file ``<constant>.<base>.txt`` holds one line
``<constant> <base> <integer_part>.<fractional>``.
"""

import json
import os
from typing import Any, Dict, Optional

from ..core.base import DigitResult
from ..oracle.reference import ReferenceDigits


def fixture_path(directory: str, constant: str, base: int) -> str:
    return os.path.join(directory, f"{constant}.{base}.txt")


def format_fixture_line(ref: ReferenceDigits) -> str:
    return f"{ref.constant} {ref.base} {ref.integer_part}.{ref.fractional}"


def parse_fixture_line(line: str) -> ReferenceDigits:
    """Parse one fixture line into ReferenceDigits."""
    parts = line.split()
    if len(parts) != 3 or "." not in parts[2]:
        raise ValueError(f"Invalid fixture line: {line.strip()!r}")
    constant, base, value = parts
    integer_part, fractional = value.split(".", 1)
    try:
        base_value = int(base)
    except ValueError:
        raise ValueError(f"Invalid base in fixture line: {base!r}")
    return ReferenceDigits(
        constant=constant,
        base=base_value,
        integer_part=integer_part,
        fractional=fractional,
        precision_terms=0,
        guard_digits=0,
    )


def write_fixture(ref: ReferenceDigits, directory: str) -> str:
    """Write a reference line to its fixture file and return the path."""
    os.makedirs(directory, exist_ok=True)
    path = fixture_path(directory, ref.constant, ref.base)
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(format_fixture_line(ref) + "\n")
    except OSError as e:
        raise IOError(f"Failed to write fixture {path}: {e}")
    return path


def read_fixture(path: str) -> ReferenceDigits:
    if not os.path.exists(path):
        raise FileNotFoundError(f"File not found: {path}")
    with open(path, 'r', encoding='utf-8') as f:
        for raw in f:
            if raw.strip():
                return parse_fixture_line(raw)
    raise ValueError(f"Empty fixture file: {path}")


def find_fixture(directory: Optional[str], constant: str, base: int) -> Optional[ReferenceDigits]:
    """The fixture for (constant, base) under ``directory``, if there is one."""
    if not directory:
        return None
    path = fixture_path(directory, constant, base)
    if not os.path.exists(path):
        return None
    return read_fixture(path)


def default_fixture_dir() -> str:
    return os.path.join(os.path.dirname(os.path.dirname(__file__)), 'fixtures')


def export_result(result: DigitResult, filename: str):
    """Export a DigitResult to JSON."""
    try:
        with open(filename, 'w') as f:
            json.dump(result.to_dict(), f, indent=2)
    except Exception as e:
        raise IOError(f"Failed to export result to {filename}: {e}")


def import_result(filename: str) -> Dict[str, Any]:
    """Import a result dictionary from JSON."""
    if not os.path.exists(filename):
        raise FileNotFoundError(f"File not found: {filename}")
    try:
        with open(filename, 'r') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON in {filename}: {e}")

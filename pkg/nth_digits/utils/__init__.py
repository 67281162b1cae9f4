"""
Data input/output utilities.
"""

from .data_io import (
    default_fixture_dir,
    export_result,
    find_fixture,
    fixture_path,
    format_fixture_line,
    import_result,
    parse_fixture_line,
    read_fixture,
    write_fixture,
)

__all__ = [
    'default_fixture_dir',
    'export_result',
    'find_fixture',
    'fixture_path',
    'format_fixture_line',
    'import_result',
    'parse_fixture_line',
    'read_fixture',
    'write_fixture',
]

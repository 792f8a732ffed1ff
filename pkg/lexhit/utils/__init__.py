"""
Utility functions for the lexhit package.
"""

from .helpers import parse_name_list, resolve_names, validate_file_path

__all__ = ["validate_file_path", "parse_name_list", "resolve_names"]

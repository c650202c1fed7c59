# Expose all tool functions for easier imports
from .certify_tool import certify_tool
from .solve_tool import solve_tool
from .table_tool import table_tool

__all__ = [
    'certify_tool',
    'solve_tool',
    'table_tool',
]

"""Circular programs on a call-by-need cell engine."""

from .engine import (
    AllocStats,
    Arena,
    Cell,
    CircprogError,
    IllFoundedSelfReference,
    LimitExceeded,
    force,
    new_recipe,
    new_value,
    same_cell,
    stats,
    tie,
)

__version__ = "0.1.0"

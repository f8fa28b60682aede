"""Randomized ternary search trie with an oracle test kit and CLI."""

from .core import (
    DEFAULT_R,
    FixedPriorities,
    PathStats,
    RandomPriorities,
    RTrie,
    Violation,
)

__version__ = "0.1.0"

__all__ = [
    "RTrie",
    "PathStats",
    "Violation",
    "RandomPriorities",
    "FixedPriorities",
    "DEFAULT_R",
    "__version__",
]

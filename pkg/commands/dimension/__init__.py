# Dimension command initialization
from .dimension_command import DimensionCommand

__all__ = ["DimensionCommand"]

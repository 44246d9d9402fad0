# Constants command initialization
from .constants_command import ConstantsCommand

__all__ = ["ConstantsCommand"]

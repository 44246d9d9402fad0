# Spectra command initialization
from .spectra_command import SpectraCommand

__all__ = ["SpectraCommand"]

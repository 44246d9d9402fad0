# Verify command initialization
from .verify_command import VerifyCommand

__all__ = ["VerifyCommand"]

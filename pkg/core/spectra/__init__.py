"""
spectra - Perron 的 λ_i、Markov 值与 Lagrange 值
"""

from .errors import PatternViolationError, UnsupportedSequenceError
from .families import (
    freiman_sequence,
    named_sequence,
    pa_sequence,
    pa_word,
    membership_sequence,
    rho,
)
from .markov import MarkovCertificate, markov_value, replay_certificate
from .values import (
    SpectrumValue,
    decimal_renderer,
    lagrange_value,
    lambda_at,
    lambda_sum,
    phase_values,
)

__all__ = [
    "MarkovCertificate",
    "PatternViolationError",
    "SpectrumValue",
    "UnsupportedSequenceError",
    "decimal_renderer",
    "freiman_sequence",
    "lagrange_value",
    "lambda_at",
    "lambda_sum",
    "markov_value",
    "named_sequence",
    "pa_sequence",
    "pa_word",
    "phase_values",
    "membership_sequence",
    "replay_certificate",
    "rho",
]

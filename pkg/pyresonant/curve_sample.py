"""
Module that contains our CurveSample class.
"""
from dataclasses import dataclass

from pyresonant.log_magnitude import LogMagnitude


@dataclass(frozen=True)
class CurveSample:
    """One grid point of a model-versus-real comparison curve."""

    theta: float
    """The angle, in [0, 2π)"""

    log_norm_model: LogMagnitude
    """log of the model-case norm (h = diag(λ, 0))"""

    log_norm_real: float
    """log of the real-case norm (H = diag(λ, 1/λ)); always finite since H is invertible"""

"""
Module that contains our LogMagnitude class.
"""
import math
from dataclasses import dataclass

from pyresonant.core import Core


@dataclass(frozen=True, order=True)
class LogMagnitude:
    """The natural log of a non-negative real, with -inf standing for exactly zero.

    Lets λ^n·∏|cos(j·θ)| be carried at any n without overflow. Ordering follows the
    represented value, so a zero magnitude sorts below every positive one.
    """

    log_value: float
    """log of the magnitude; -inf for zero"""

    def __post_init__(self):
        """Rejects NaN and +inf, neither of which is the log of a finite non-negative real."""
        if math.isnan(self.log_value) or self.log_value == math.inf:
            raise Core.ArgumentException("log_value", "The argument '{name}' must be finite or -inf.")

    @classmethod
    def zero(cls) -> "LogMagnitude":
        """The magnitude 0."""
        return cls(-math.inf)

    @classmethod
    def one(cls) -> "LogMagnitude":
        """The magnitude 1."""
        return cls(0.0)

    @classmethod
    def of(cls, value: float) -> "LogMagnitude":
        """Wraps a real value by its absolute value.

        Args:
            value (float): The value.

        Returns:
            LogMagnitude: log|value|
        """
        return cls(Core.log_abs(value))

    def is_zero(self) -> bool:
        """True when the magnitude is exactly zero."""
        return self.log_value == -math.inf

    def value(self) -> float:
        """The magnitude itself; overflows to inf for very large logs."""
        try:
            return math.exp(self.log_value)
        except OverflowError:
            return math.inf

    def __mul__(self, other: "LogMagnitude") -> "LogMagnitude":
        return LogMagnitude(self.log_value + other.log_value)

    def __str__(self) -> str:
        return "-inf" if self.is_zero() else repr(self.log_value)

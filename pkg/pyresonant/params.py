"""
Module that contains our Params class.
"""
import math
from dataclasses import dataclass

from pyresonant.core import Core


@dataclass(frozen=True)
class Params:
    """The model parameters: growth factor λ, exponent δ and rotation budget fraction ε.

    Validated on construction; raises `Core.ArgumentException` when
    λ ≤ 1, δ ∉ (0, 1) or ε ∉ (0, 1).
    """

    lambda_: float
    """The growth factor λ > 1"""

    delta: float
    """The exponent δ in (0, 1)"""

    epsilon: float
    """The rotation budget fraction ε in (0, 1)"""

    def __post_init__(self):
        """Validates the parameters."""
        if not (math.isfinite(self.lambda_) and self.lambda_ > 1.0):
            raise Core.ArgumentException("lambda", "The argument '{name}' must be a finite real greater than 1.")

        if not 0.0 < self.delta < 1.0:
            raise Core.ArgumentException("delta", "The argument '{name}' must lie strictly between 0 and 1.")

        if not 0.0 < self.epsilon < 1.0:
            raise Core.ArgumentException("epsilon", "The argument '{name}' must lie strictly between 0 and 1.")

    @property
    def log_lambda(self) -> float:
        """float: log λ"""
        return math.log(self.lambda_)

    def rotation_budget(self, n: int) -> int:
        """The largest number of rotations allowed alongside n copies of h, floor(ε·n).

        Args:
            n (int): The number of h factors.

        Returns:
            int: floor(ε·n)
        """
        return Core.floor_product(self.epsilon, n)

    def resonance_log_threshold(self, n: int) -> float:
        """The log of the resonance threshold λ^{δn}.

        Args:
            n (int): The number of h factors.

        Returns:
            float: δ·n·log λ
        """
        return self.delta * n * self.log_lambda

    def decay_exponent(self, alpha: int) -> float:
        """The exponent (1−δ)α/ε used by the sublevel thresholds.

        Args:
            alpha (int): The rotation block length α.

        Returns:
            float: (1−δ)·α/ε
        """
        return (1.0 - self.delta) * alpha / self.epsilon

    def default_horizon(self) -> int:
        """The default certification horizon, ceil(10/ε)."""
        return math.ceil(10.0 / self.epsilon)

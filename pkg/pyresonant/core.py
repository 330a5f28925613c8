"""
Module that contains our Core class.
"""
import logging
import math
from fractions import Fraction

import mpmath


class Core:
    """A class holding the core numeric helpers shared by the rest of the package."""

    # Class variables
    TWO_PI: float = 2.0 * math.pi
    """The length of the circle [0, 2π) that all angles live on."""

    _LARGE_MULTIPLE: int = 2 ** 40
    """Multiples of an angle above this are reduced modulo 2π in extended precision."""

    _ZERO_TOLERANCE: float = 1e-15
    """Trigonometric values this close to zero are treated as exact zeros."""

    _REDUCTION_DPS: int = 60
    """Decimal digits used by mpmath when reducing large multiples of an angle."""

    _logger = logging.getLogger(__name__)
    """The Logger instance for this class"""

    @staticmethod
    def reduce_angle(theta: float) -> float:
        """Reduces an angle into [0, 2π).

        Args:
            theta (float): The angle in radians. Must be finite.

        Returns:
            float: The equivalent angle in [0, 2π).
        """
        if not math.isfinite(theta):
            raise Core.ArgumentException("theta", "The argument '{name}' must be a finite angle.")

        reduced = math.fmod(theta, Core.TWO_PI)
        if reduced < 0.0:
            reduced += Core.TWO_PI

        # fmod of a tiny negative value can round up to exactly 2π
        if reduced >= Core.TWO_PI:
            reduced = 0.0

        return reduced

    @staticmethod
    def multiple_angle(multiple: int, theta: float) -> float:
        """Returns j·θ reduced modulo 2π, where j is an exact integer.

        For j beyond 2^40 the product is formed in extended precision before reducing,
        so the phase stays accurate.

        Args:
            multiple (int): The integer multiple j (non-negative).
            theta (float): The angle θ in radians.

        Returns:
            float: j·θ mod 2π in [0, 2π).
        """
        theta = Core.reduce_angle(theta)

        if multiple <= Core._LARGE_MULTIPLE:
            return Core.reduce_angle(multiple * theta)

        with mpmath.workdps(Core._REDUCTION_DPS):
            product = mpmath.mpf(multiple) * mpmath.mpf(theta)
            reduced = mpmath.fmod(product, 2 * mpmath.pi)

            Core._logger.debug("Reduced %s * %s in extended precision to %s", multiple, theta, reduced)

            return Core.reduce_angle(float(reduced))

    @staticmethod
    def cos_sin(angle: float) -> tuple[float, float]:
        """Returns (cos, sin) of an angle, with values within `_ZERO_TOLERANCE` of zero snapped to 0.

        Angles such as π/2 are not representable, so their cosine would otherwise come back as
        roughly 6e-17 rather than an exact zero.

        Args:
            angle (float): The angle in radians.

        Returns:
            tuple[float, float]: The cosine and sine.
        """
        cos_value = math.cos(angle)
        sin_value = math.sin(angle)

        if abs(cos_value) <= Core._ZERO_TOLERANCE:
            cos_value = 0.0
        if abs(sin_value) <= Core._ZERO_TOLERANCE:
            sin_value = 0.0

        return cos_value, sin_value

    @staticmethod
    def cos_sin_multiple(multiple: int, theta: float) -> tuple[float, float]:
        """Returns (cos(jθ), sin(jθ)) with the phase reduced by `multiple_angle`.

        Args:
            multiple (int): The integer multiple j.
            theta (float): The angle θ in radians.

        Returns:
            tuple[float, float]: The snapped cosine and sine of j·θ.
        """
        return Core.cos_sin(Core.multiple_angle(multiple, theta))

    @staticmethod
    def log_abs(value: float) -> float:
        """Extended-real log of |value|, giving -inf for an exact zero.

        Args:
            value (float): The value to take the log of.

        Returns:
            float: log|value|, or -inf when value is 0.
        """
        if value == 0.0:
            return -math.inf

        return math.log(abs(value))

    @staticmethod
    def floor_product(epsilon: float, n: int) -> int:
        """Computes floor(ε·n) exactly on the shortest decimal form of ε, so ε = 0.3 and n = 10 give 3.

        Args:
            epsilon (float): The rotation budget fraction.
            n (int): The number of h factors.

        Returns:
            int: floor(ε·n)
        """
        return math.floor(Core._exact(epsilon) * n)

    @staticmethod
    def floor_quotient(alpha: int, epsilon: float) -> int:
        """Computes floor(α/ε) exactly on the shortest decimal form of ε.

        Args:
            alpha (int): The rotation block length.
            epsilon (float): The rotation budget fraction.

        Returns:
            int: floor(α/ε)
        """
        return math.floor(Fraction(alpha) / Core._exact(epsilon))

    @staticmethod
    def _exact(value: float) -> Fraction:
        # repr gives the shortest decimal that round-trips to the same float
        return Fraction(repr(float(value)))

    class ArgumentException(Exception):
        """Exception class thrown when we have an argument exception."""

        def __init__(self, name: str, message: str = "The argument with name '{name}' is invalid."):
            """Initialises an instance of this exception

            Args:
                name (str): The name of the argument
                message (str, optional): The exception message. Defaults to "The argument with name '{name}' is invalid.".
            """
            self.message = message
            self._name = name

            super().__init__(self.message)

        def __str__(self):
            """Returns a string representation of this exception"""
            return self.message.format(name=self._name)

    class ScaleGuardException(Exception):
        """Exception class thrown when an oracle is asked to work beyond the scale it is valid for."""

        def __init__(self,
                     operation: str,
                     value: float,
                     limit: float,
                     message: str = "Operation '{operation}' was asked for {value}, beyond its limit of {limit}; use the log-domain path instead."):
            """Initialises an instance of this exception

            Args:
                operation (str): The operation whose guard was violated.
                value (float): The requested value.
                limit (float): The largest value the operation supports.
                message (str, optional): The exception message. Must contain 'operation', 'value' and 'limit' format inserts.
            """
            self.message = message
            self._operation = operation
            self._value = value
            self._limit = limit

            super().__init__(self.message)

        def __str__(self):
            """Returns a string representation of this exception"""
            return self.message.format(operation=self._operation, value=self._value, limit=self._limit)

"""
Module that contains our Mat2 class.
"""
import math
from dataclasses import dataclass

import numpy as np

from pyresonant.core import Core


@dataclass(frozen=True)
class Mat2:
    """An immutable real 2×2 matrix, stored row-major as (a, b; c, d)."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        """Checks that every entry is finite."""
        if not all(math.isfinite(entry) for entry in (self.a, self.b, self.c, self.d)):
            raise Core.ScaleGuardException("Mat2", max(abs(self.a), abs(self.b), abs(self.c), abs(self.d)), "finite entries")

    @classmethod
    def identity(cls) -> "Mat2":
        """Returns the 2×2 identity."""
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def zero(cls) -> "Mat2":
        """Returns the 2×2 zero matrix."""
        return cls(0.0, 0.0, 0.0, 0.0)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "Mat2":
        """Builds a matrix from a 2×2 numpy array.

        Args:
            array (np.ndarray): The array to copy.

        Returns:
            Mat2: The matrix.
        """
        return cls(float(array[0, 0]), float(array[0, 1]), float(array[1, 0]), float(array[1, 1]))

    def to_array(self) -> np.ndarray:
        """Returns the matrix as a 2×2 numpy array."""
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=float)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def power(self, exponent: int) -> "Mat2":
        """Raises the matrix to a non-negative integer power by repeated left-to-right multiplication.

        Args:
            exponent (int): The power.

        Returns:
            Mat2: The product of `exponent` copies.
        """
        result = Mat2.identity()
        for _ in range(exponent):
            result = result @ self

        return result

    def determinant(self) -> float:
        """Returns ad − bc."""
        return self.a * self.d - self.b * self.c

    def l1_norm(self) -> float:
        """The entrywise norm |a| + |b| + |c| + |d|."""
        return abs(self.a) + abs(self.b) + abs(self.c) + abs(self.d)

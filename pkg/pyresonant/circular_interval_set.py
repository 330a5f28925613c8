"""
Module that contains our CircularIntervalSet class.
"""
import bisect
import math
from typing import Iterable

import numpy as np

from pyresonant.core import Core


class CircularIntervalSet:
    """A finite union of half-open arcs [start, end) on the circle [0, 2π).

    Arcs are kept sorted, pairwise disjoint and non-touching, with 0 ≤ start < end ≤ 2π.
    An arc passing through 0 is held as two pieces, one ending at 2π and one starting at 0.
    Endpoints are not outward-rounded; measures are exact up to double-precision rounding.
    """

    def __init__(self, arcs: Iterable[tuple[float, float]] = ()):
        """Initialises an instance of this class from arcs in any order.

        Args:
            arcs (Iterable[tuple[float, float]]): (start, end) pairs with end ≥ start. Arcs may start
                                                  anywhere and wrap past 2π; arcs of length 2π or more
                                                  cover the whole circle.
        """
        pieces: list[tuple[float, float]] = []

        for start, end in arcs:
            length = end - start
            if not length > 0.0:
                continue

            if length >= Core.TWO_PI:
                pieces = [(0.0, Core.TWO_PI)]
                break

            if not (0.0 <= start and end <= Core.TWO_PI):
                start = Core.reduce_angle(start)
                end = start + length
                if end <= start:
                    continue

            if end > Core.TWO_PI:
                pieces.append((start, Core.TWO_PI))
                pieces.append((0.0, end - Core.TWO_PI))
            else:
                pieces.append((start, end))

        self._arcs: tuple[tuple[float, float], ...] = self._merge(pieces)
        """The sorted, disjoint arcs"""

        self._starts: list[float] = [start for start, _ in self._arcs]
        """The arc starts, for bisection"""

    @classmethod
    def empty(cls) -> "CircularIntervalSet":
        """The empty set."""
        return cls()

    @classmethod
    def full(cls) -> "CircularIntervalSet":
        """The whole circle."""
        return cls([(0.0, Core.TWO_PI)])

    @staticmethod
    def _merge(pieces: list[tuple[float, float]]) -> tuple[tuple[float, float], ...]:
        merged: list[tuple[float, float]] = []

        for start, end in sorted(pieces):
            if merged and start <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], end))
            else:
                merged.append((start, end))

        return tuple(merged)

    @property
    def arcs(self) -> tuple[tuple[float, float], ...]:
        """tuple[tuple[float, float], ...]: The sorted, disjoint arcs"""
        return self._arcs

    def is_empty(self) -> bool:
        """True when the set has no arcs."""
        return not self._arcs

    def measure(self) -> float:
        """The Lebesgue measure, the sum of the arc lengths, in [0, 2π]."""
        return math.fsum(end - start for start, end in self._arcs)

    def union(self, other: "CircularIntervalSet") -> "CircularIntervalSet":
        """The union of two sets.

        Args:
            other (CircularIntervalSet): The other set.

        Returns:
            CircularIntervalSet: The merged set.
        """
        return CircularIntervalSet(self._arcs + other.arcs)

    def __or__(self, other: "CircularIntervalSet") -> "CircularIntervalSet":
        return self.union(other)

    def complement(self) -> "CircularIntervalSet":
        """The complement in [0, 2π)."""
        gaps = []
        cursor = 0.0

        for start, end in self._arcs:
            if start > cursor:
                gaps.append((cursor, start))
            cursor = end

        if cursor < Core.TWO_PI:
            gaps.append((cursor, Core.TWO_PI))

        return CircularIntervalSet(gaps)

    def contains(self, theta: float) -> bool:
        """Whether an angle lies in the set.

        Args:
            theta (float): The angle; reduced into [0, 2π) first.

        Returns:
            bool: True if some arc holds it.
        """
        theta = Core.reduce_angle(theta)
        index = bisect.bisect_right(self._starts, theta) - 1

        return index >= 0 and theta < self._arcs[index][1]

    def __contains__(self, theta: float) -> bool:
        return self.contains(theta)

    def indicator(self, thetas: np.ndarray) -> np.ndarray:
        """Vectorised membership for angles already in [0, 2π).

        Args:
            thetas (np.ndarray): The angles.

        Returns:
            np.ndarray: A boolean array, True where the angle is in the set.
        """
        thetas = np.asarray(thetas, dtype=float)
        if self.is_empty():
            return np.zeros(thetas.shape, dtype=bool)

        starts = np.array(self._starts)
        ends = np.array([end for _, end in self._arcs])
        index = np.searchsorted(starts, thetas, side="right") - 1

        return (index >= 0) & (thetas < ends[np.clip(index, 0, None)])

    def grid_measure(self, points: int = 1_000_000) -> float:
        """Estimates the measure from a uniform-grid indicator, as a cross-check of `measure`.

        Args:
            points (int, optional): The number of grid points. Defaults to 10^6.

        Returns:
            float: 2π times the share of grid points in the set.
        """
        grid = np.arange(points) * (Core.TWO_PI / points)

        return Core.TWO_PI * float(np.count_nonzero(self.indicator(grid))) / points

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Draws angles uniformly (by measure) from the set.

        Args:
            rng (np.random.Generator): The random generator.
            count (int): How many angles to draw.

        Returns:
            np.ndarray: The angles.
        """
        if self.is_empty():
            raise Core.ArgumentException("set", "Cannot sample from an empty {name}.")

        lengths = np.array([end - start for start, end in self._arcs])
        cumulative = np.cumsum(lengths)
        positions = rng.uniform(0.0, cumulative[-1], size=count)
        index = np.minimum(np.searchsorted(cumulative, positions, side="right"), len(lengths) - 1)
        offsets = positions - (cumulative[index] - lengths[index])

        starts = np.array(self._starts)
        ends = np.array([end for _, end in self._arcs])

        # Keep samples inside the half-open arcs despite rounding
        return np.clip(starts[index] + offsets, starts[index], np.nextafter(ends[index], -np.inf))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CircularIntervalSet):
            return NotImplemented

        return self._arcs == other.arcs

    def __len__(self) -> int:
        return len(self._arcs)

    def __repr__(self) -> str:
        return f"CircularIntervalSet({list(self._arcs)})"

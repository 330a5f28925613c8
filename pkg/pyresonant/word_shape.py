"""
Module that contains our WordShape enumeration.
"""
from enum import Enum


class WordShape(Enum):
    """The boundary type of a word: which kind of block it starts and ends with."""

    HR = "HR"
    """Starts with an h-block, ends with a rotation block."""

    RH = "RH"
    """Starts with a rotation block, ends with an h-block."""

    RR = "RR"
    """Starts and ends with rotation blocks, with at least one h-block between."""

    HH = "HH"
    """Starts and ends with h-blocks; the minimum norm is always attained on this type."""

    PURE_H = "PureH"
    """A single h-block, no rotations."""

    PURE_R = "PureR"
    """A single rotation block, no h."""

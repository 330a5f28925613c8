"""
Module that contains our Word class.
"""
from enum import Enum
from typing import Iterable, NamedTuple, Union

from pyresonant.core import Core


class Word:
    """An immutable word in h and R_θ, held as its canonical alternating block sequence.

    Construction drops zero exponents and merges neighbouring blocks of the same kind,
    so every word has exactly one representation. The empty word is the identity.
    """

    class BlockKind(Enum):
        """The kind of a block."""

        H = "H"
        """A power of h (or of H in the real case)."""

        R = "R"
        """A power of the rotation R_θ."""

    class Block(NamedTuple):
        """A single block of a word: a kind and a positive exponent."""

        kind: "Word.BlockKind"
        exponent: int

    def __init__(self, blocks: Iterable[tuple[Union["Word.BlockKind", str], int]] = ()):
        """Initialises an instance of this class, canonicalising the blocks.

        Args:
            blocks (Iterable[tuple[BlockKind | str, int]]): The (kind, exponent) pairs, in order.
                                                           Kinds may be given as 'H' or 'R'.
        """
        canonical: list[Word.Block] = []

        for kind, exponent in blocks:
            kind = Word.BlockKind(kind)

            if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 0:
                raise Core.ArgumentException(repr(exponent), "Block exponents must be non-negative integers, but got {name}.")

            if exponent == 0:
                continue

            if canonical and canonical[-1].kind is kind:
                canonical[-1] = Word.Block(kind, canonical[-1].exponent + exponent)
            else:
                canonical.append(Word.Block(kind, exponent))

        self._blocks: tuple[Word.Block, ...] = tuple(canonical)
        """The canonical block sequence"""

    @classmethod
    def hh(cls, rotation_profile: Iterable[int], h_total: int) -> "Word":
        """Builds an HH-type word h^{i_1} R^{j_1} … R^{j_k} h^{i_{k+1}} for a rotation profile.

        The h exponents are split as evenly as possible; any positive split gives the same model norm.

        Args:
            rotation_profile (Iterable[int]): The rotation exponents (j_1, …, j_k).
            h_total (int): n, the total h exponent. Must be at least k + 1.

        Returns:
            Word: The HH-type word (or PureH when the profile is empty).
        """
        profile = tuple(rotation_profile)
        parts = len(profile) + 1

        if h_total < parts:
            raise Core.ArgumentException("h_total", "The argument '{name}' is too small to give every h-block a positive exponent.")

        base, extra = divmod(h_total, parts)
        h_parts = [base + (1 if index < extra else 0) for index in range(parts)]

        blocks: list[tuple[Word.BlockKind, int]] = [(Word.BlockKind.H, h_parts[0])]
        for rotation, h_part in zip(profile, h_parts[1:]):
            blocks.append((Word.BlockKind.R, rotation))
            blocks.append((Word.BlockKind.H, h_part))

        return cls(blocks)

    @property
    def blocks(self) -> tuple["Word.Block", ...]:
        """tuple[Block, ...]: The canonical blocks"""
        return self._blocks

    @property
    def h_total(self) -> int:
        """int: n, the sum of the h-block exponents"""
        return sum(block.exponent for block in self._blocks if block.kind is Word.BlockKind.H)

    @property
    def r_total(self) -> int:
        """int: m, the sum of the rotation-block exponents"""
        return sum(block.exponent for block in self._blocks if block.kind is Word.BlockKind.R)

    @property
    def rotation_exponents(self) -> tuple[int, ...]:
        """tuple[int, ...]: The rotation exponents (j_1, …, j_k) in order"""
        return tuple(block.exponent for block in self._blocks if block.kind is Word.BlockKind.R)

    @property
    def h_exponents(self) -> tuple[int, ...]:
        """tuple[int, ...]: The h exponents (i_1, …) in order"""
        return tuple(block.exponent for block in self._blocks if block.kind is Word.BlockKind.H)

    def is_identity(self) -> bool:
        """True for the empty word."""
        return not self._blocks

    def __add__(self, other: "Word") -> "Word":
        """Concatenation, re-canonicalised at the join."""
        return Word(self._blocks + other.blocks)

    def __len__(self) -> int:
        return len(self._blocks)

    def __iter__(self):
        return iter(self._blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented

        return self._blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self._blocks)

    def __repr__(self) -> str:
        inner = ",".join(f"{block.kind.value}:{block.exponent}" for block in self._blocks)
        return f"Word[{inner}]"

    class EmptyWordException(Exception):
        """Exception class thrown when an operation needs a non-empty word."""

        def __init__(self, operation: str, message: str = "The empty word has no shape (operation '{operation}')."):
            """Initialises an instance of this exception

            Args:
                operation (str): The operation that was attempted.
                message (str, optional): The exception message. Must contain an 'operation' format insert.
            """
            self.message = message
            self._operation = operation

            super().__init__(self.message)

        def __str__(self):
            """Returns a string representation of this exception"""
            return self.message.format(operation=self._operation)

"""
Module that contains our WordHelper class.
"""
import logging
from typing import Callable, Generator, Iterator

from pyresonant.core import Core
from pyresonant.mat2 import Mat2
from pyresonant.word import Word
from pyresonant.word_shape import WordShape


class WordHelper:
    """A class to help with building, evaluating, classifying and enumerating words in h and R_θ.

    Matrix products here are exact left-to-right double-precision products, used as the oracle
    that the closed forms and the minimizer are checked against.
    """

    # Class variables
    _ENUMERATION_WARNING_SIZE: int = 20
    """Enumerations with n + m_max above this log a warning, since the count grows exponentially."""

    _ENUMERATION_SHAPES: tuple[WordShape, ...] = (WordShape.HR, WordShape.RH, WordShape.RR, WordShape.HH)
    """The boundary types in the order words are enumerated."""

    def __init__(self):
        """Initialises an instance of this class."""

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

    def rotation_matrix(self, theta: float) -> Mat2:
        """Returns the rotation matrix R_θ = (cos θ, −sin θ; sin θ, cos θ).

        Args:
            theta (float): The angle in radians. Must be finite.

        Returns:
            Mat2: R_θ
        """
        cos_value, sin_value = Core.cos_sin(Core.reduce_angle(theta))

        return Mat2(cos_value, -sin_value, sin_value, cos_value)

    def h_matrix(self, lambda_: float, power: int) -> Mat2:
        """Returns h^power = diag(λ^power, 0).

        Args:
            lambda_ (float): λ > 1
            power (int): The power, at least 1.

        Returns:
            Mat2: diag(λ^power, 0)

        Raises:
            Core.ScaleGuardException: When λ^power overflows; use the log-domain path instead.
        """
        return Mat2(self.lambda_power(lambda_, power), 0.0, 0.0, 0.0)

    def lambda_power(self, lambda_: float, power: int) -> float:
        """Computes λ^power, checking the arguments and guarding against overflow.

        Args:
            lambda_ (float): λ > 1
            power (int): The power, at least 1.

        Returns:
            float: λ^power
        """
        if not lambda_ > 1.0:
            raise Core.ArgumentException("lambda", "The argument '{name}' must be greater than 1.")

        if power < 1:
            raise Core.ArgumentException("power", "The argument '{name}' must be a positive integer.")

        try:
            value = lambda_ ** power
        except OverflowError as exc:
            raise Core.ScaleGuardException("lambda ** power", power, "the double-precision range") from exc

        return value

    def evaluate_word(self, word: Word, theta: float, lambda_: float) -> Mat2:
        """Multiplies out a word in h and R_θ, left to right.

        Args:
            word (Word): The word.
            theta (float): The angle θ.
            lambda_ (float): λ > 1

        Returns:
            Mat2: The product matrix (the identity for the empty word).
        """
        return self.evaluate_with(word, theta, lambda power: self.h_matrix(lambda_, power))

    def evaluate_with(self, word: Word, theta: float, h_block: Callable[[int], Mat2]) -> Mat2:
        """Multiplies out a word, left to right, realising each h-block with the supplied factory.

        Rotation blocks are formed by repeated multiplication of R_θ, not from cos(jθ), so the
        result stays independent of the closed forms.

        Args:
            word (Word): The word.
            theta (float): The angle θ.
            h_block (Callable[[int], Mat2]): Returns the matrix for an h-block of a given exponent.

        Returns:
            Mat2: The product matrix.
        """
        rotation = self.rotation_matrix(theta)
        product = Mat2.identity()

        for block in word:
            if block.kind is Word.BlockKind.H:
                product = product @ h_block(block.exponent)
            else:
                product = product @ rotation.power(block.exponent)

        return product

    def l1_entry_norm(self, matrix: Mat2) -> float:
        """The entrywise norm ‖W‖ = |a| + |b| + |c| + |d|.

        Args:
            matrix (Mat2): The matrix.

        Returns:
            float: The norm.
        """
        return matrix.l1_norm()

    def classify(self, word: Word) -> WordShape:
        """Classifies a word by the kinds of its first and last blocks.

        Args:
            word (Word): A non-empty canonical word.

        Returns:
            WordShape: HR, RH, RR or HH, or PureH / PureR for single-block words.

        Raises:
            Word.EmptyWordException: For the identity word.
        """
        if word.is_identity():
            raise Word.EmptyWordException("classify")

        first = word.blocks[0].kind
        last = word.blocks[-1].kind

        if len(word) == 1:
            return WordShape.PURE_H if first is Word.BlockKind.H else WordShape.PURE_R

        if first is Word.BlockKind.H:
            return WordShape.HH if last is Word.BlockKind.H else WordShape.HR

        return WordShape.RH if last is Word.BlockKind.H else WordShape.RR

    def enumerate_words(self, n: int, m_max: int) -> Iterator[Word]:
        """Yields every canonical word with h_total = n and 0 ≤ r_total ≤ m_max, each exactly once.

        Order is lexicographic by (m, k, boundary type, rotation composition, h composition),
        with boundary types in the order HR, RH, RR, HH. The count grows exponentially, so this
        is only meant for oracle use at small n.

        Args:
            n (int): The number of h factors, at least 1.
            m_max (int): The largest number of rotations, at least 0.

        Returns:
            Iterator[Word]: The words.
        """
        if n < 1:
            raise Core.ArgumentException("n", "The argument '{name}' must be a positive integer.")

        if m_max < 0:
            raise Core.ArgumentException("m_max", "The argument '{name}' must be non-negative.")

        if n + m_max > self._ENUMERATION_WARNING_SIZE:
            self._logger.warning("Enumerating words with n=%s and m_max=%s; the count grows exponentially", n, m_max)

        return self._generate_words(n, m_max)

    def _generate_words(self, n: int, m_max: int) -> Iterator[Word]:
        yield Word([(Word.BlockKind.H, n)])

        for m in range(1, m_max + 1):
            for k in range(1, m + 1):
                for shape in self._ENUMERATION_SHAPES:
                    h_count = self._h_block_count(shape, k)
                    if h_count < 1 or h_count > n:
                        continue

                    for rotations in self._compositions(m, k):
                        for h_parts in self._compositions(n, h_count):
                            yield self._assemble(shape, rotations, h_parts)

    @staticmethod
    def _h_block_count(shape: WordShape, k: int) -> int:
        """The number of h-blocks in a word of the given shape with k rotation blocks."""
        if shape is WordShape.HH:
            return k + 1
        if shape is WordShape.RR:
            return k - 1
        return k

    @staticmethod
    def _compositions(total: int, parts: int) -> Generator[tuple[int, ...], None, None]:
        """Enumerates the compositions of total into the given number of positive parts, lexicographically."""
        if parts == 1:
            yield (total,)
            return

        for first in range(1, total - parts + 2):
            for rest in WordHelper._compositions(total - first, parts - 1):
                yield (first,) + rest

    @staticmethod
    def _assemble(shape: WordShape, rotations: tuple[int, ...], h_parts: tuple[int, ...]) -> Word:
        """Interleaves rotation and h exponents according to the boundary type."""
        blocks: list[tuple[Word.BlockKind, int]] = []
        h_iter = iter(h_parts)

        if shape in (WordShape.HR, WordShape.HH):
            blocks.append((Word.BlockKind.H, next(h_iter)))

        for index, rotation in enumerate(rotations):
            blocks.append((Word.BlockKind.R, rotation))

            is_last = index == len(rotations) - 1
            if not is_last or shape in (WordShape.RH, WordShape.HH):
                blocks.append((Word.BlockKind.H, next(h_iter)))

        return Word(blocks)

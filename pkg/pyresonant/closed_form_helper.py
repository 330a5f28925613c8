"""
Module that contains our ClosedFormHelper class.
"""
import logging
import math
from typing import Sequence

from pyresonant.core import Core
from pyresonant.log_magnitude import LogMagnitude
from pyresonant.word import Word
from pyresonant.word_helper import WordHelper
from pyresonant.word_shape import WordShape


class ClosedFormHelper:
    """A class to help with the log-domain closed forms of model-case word norms.

    With h = diag(λ, 0) every word's product collapses to λ^n times cosines of the
    rotation blocks, with |cos| + |sin| factors for rotation blocks on the boundary.
    These hold at any n, where the matrix products themselves would overflow.
    """

    def __init__(self, word_helper: WordHelper = None):
        """Initialises an instance of this class.

        Args:
            word_helper (WordHelper, optional): The `WordHelper` to classify words with. Defaults to a new one.
        """

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

        self._word_helper = word_helper or WordHelper()
        """The `WordHelper` instance for this class instance"""

    def rotation_factor_profile(self, word: Word) -> list[int]:
        """Returns the rotation profile (j_1, …, j_k) of a word, in order; empty for PureH.

        Args:
            word (Word): The word.

        Returns:
            list[int]: The rotation exponents.
        """
        return list(word.rotation_exponents)

    def closed_form_norm(self, word: Word, theta: float, lambda_: float) -> LogMagnitude:
        """Computes log ‖W_n(θ)‖ for a model-case word from its closed form.

        Args:
            word (Word): The word. The identity word is treated as R_θ^0.
            theta (float): The angle θ.
            lambda_ (float): λ > 1

        Returns:
            LogMagnitude: log of the entrywise norm; -inf when the product is exactly zero.
        """
        if word.is_identity():
            return self.profile_norm(WordShape.PURE_R, 0, [0], theta, lambda_)

        shape = self._word_helper.classify(word)

        return self.profile_norm(shape, word.h_total, self.rotation_factor_profile(word), theta, lambda_)

    def profile_norm(self, shape: WordShape, n: int, profile: Sequence[int], theta: float, lambda_: float) -> LogMagnitude:
        """Computes the model norm from the data it depends on: n, the shape and the rotation profile.

        How n is split among the h-blocks never enters, which is why redistributing the
        h exponents leaves the model curve unchanged.

        Args:
            shape (WordShape): The boundary type.
            n (int): The total h exponent.
            profile (Sequence[int]): The rotation profile (j_1, …, j_k).
            theta (float): The angle θ.
            lambda_ (float): λ > 1

        Returns:
            LogMagnitude: log of the entrywise norm.
        """
        if shape is WordShape.PURE_R:
            # ‖R_{mθ}‖ = 2(|cos mθ| + |sin mθ|)
            return LogMagnitude(math.log(2.0) + self.log_boundary_factor(sum(profile), theta))

        total = n * math.log(lambda_)

        if shape is WordShape.PURE_H:
            return LogMagnitude(total)

        interior, boundary = self.split_profile(shape, profile)

        for rotation in interior:
            total += self.log_abs_cos(rotation, theta)
        for rotation in boundary:
            total += self.log_boundary_factor(rotation, theta)

        return LogMagnitude(total)

    def split_profile(self, shape: WordShape, profile: Sequence[int]) -> tuple[list[int], list[int]]:
        """Splits a rotation profile into interior blocks, contributing |cos(jθ)|, and boundary
        blocks, contributing |cos(jθ)| + |sin(jθ)|.

        A rotation block is on the boundary when it opens or closes the word.

        Args:
            shape (WordShape): The boundary type (not PureR).
            profile (Sequence[int]): The rotation profile.

        Returns:
            tuple[list[int], list[int]]: (interior, boundary) exponents.
        """
        interior = list(profile)
        boundary: list[int] = []

        if shape in (WordShape.RH, WordShape.RR):
            boundary.append(interior.pop(0))
        if shape in (WordShape.HR, WordShape.RR):
            boundary.append(interior.pop())

        return interior, boundary

    def zero_angles(self, word: Word) -> list[float]:
        """The angles in [0, 2π) where the model norm of a word vanishes: the zeros of cos(jθ)
        for every interior rotation exponent j.

        Args:
            word (Word): A word with at least one h-block.

        Returns:
            list[float]: The zeros, sorted, without duplicates.
        """
        shape = self._word_helper.classify(word)
        if shape in (WordShape.PURE_H, WordShape.PURE_R):
            return []

        interior, _ = self.split_profile(shape, word.rotation_exponents)

        zeros = {(2 * k + 1) * math.pi / (2 * j) for j in set(interior) for k in range(2 * j)}

        return sorted(zeros)

    def log_abs_cos(self, multiple: int, theta: float) -> float:
        """log|cos(jθ)|, -inf at a zero of the cosine.

        Args:
            multiple (int): j
            theta (float): θ

        Returns:
            float: log|cos(jθ)|
        """
        cos_value, _ = Core.cos_sin_multiple(multiple, theta)

        return Core.log_abs(cos_value)

    def log_boundary_factor(self, multiple: int, theta: float) -> float:
        """log(|cos(jθ)| + |sin(jθ)|), the factor a boundary rotation block contributes.

        Args:
            multiple (int): j
            theta (float): θ

        Returns:
            float: log(|cos(jθ)| + |sin(jθ)|), which lies in [0, log √2].
        """
        cos_value, sin_value = Core.cos_sin_multiple(multiple, theta)

        return math.log(abs(cos_value) + abs(sin_value))

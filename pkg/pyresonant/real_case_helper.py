"""
Module that contains our RealCaseHelper class.
"""
import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from pyresonant.closed_form_helper import ClosedFormHelper
from pyresonant.core import Core
from pyresonant.curve_sample import CurveSample
from pyresonant.log_magnitude import LogMagnitude
from pyresonant.mat2 import Mat2
from pyresonant.params import Params
from pyresonant.word import Word
from pyresonant.word_helper import WordHelper


class RealCaseHelper:
    """A class to help with the real case H = diag(λ, 1/λ) ∈ SL(2, ℝ), and with comparing
    its word norms against the model case h = diag(λ, 0).

    The real product does not factor the way the model one does, so everything here is
    brute force over explicit matrix products.
    """

    # Class variables
    ORACLE_MAX_N: int = 10
    """The largest n `brute_force_real_f_n` accepts."""

    NEAR_IDENTITY_THRESHOLD: float = 0.05
    """The largest |log10(real / model)| for two curves to count as nearly identical."""

    ZERO_MASK_WIDTH: float = 1e-3
    """Grid angles closer than this to a zero of the model norm are left out of ratio comparisons."""

    _MAX_LOG_SCALE: float = 40 * math.log(2.0)
    """The largest n·log λ the real oracle accepts (n ≤ 40 at λ = 2)."""

    @dataclass(frozen=True)
    class CurveStatistics:
        """Summary statistics of a norm curve sampled on a uniform grid."""

        min_log_norm: float
        """The smallest log norm on the grid"""

        argmin_theta: float
        """Where that minimum is attained"""

        resonant_fraction: float
        """The share of grid angles with norm below λ^{δn}"""

        dip_width: float
        """The measure of the grid cells with norm below λ^{δn}, 2π·resonant_fraction"""

    def __init__(self, word_helper: WordHelper = None, closed_form_helper: ClosedFormHelper = None):
        """Initialises an instance of this class.

        Args:
            word_helper (WordHelper, optional): The `WordHelper` to use. Defaults to a new one.
            closed_form_helper (ClosedFormHelper, optional): The `ClosedFormHelper` to use. Defaults to a new one.
        """

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

        self._word_helper = word_helper or WordHelper()
        """The `WordHelper` instance for this class instance"""

        self._closed_form_helper = closed_form_helper or ClosedFormHelper(self._word_helper)
        """The `ClosedFormHelper` instance for this class instance"""

    @staticmethod
    def theta_grid(grid: int) -> np.ndarray:
        """The uniform grid of `grid` angles k·2π/grid, k = 0..grid−1.

        Args:
            grid (int): The number of points, at least 2.

        Returns:
            np.ndarray: The angles.
        """
        if grid < 2:
            raise Core.ArgumentException("grid", "The argument '{name}' must be at least 2.")

        return np.arange(grid) * (Core.TWO_PI / grid)

    def real_H(self, lambda_: float, power: int) -> Mat2:
        """Returns H^power = diag(λ^power, λ^−power).

        Args:
            lambda_ (float): λ > 1
            power (int): The power, at least 1.

        Returns:
            Mat2: diag(λ^power, λ^−power)
        """
        value = self._word_helper.lambda_power(lambda_, power)

        return Mat2(value, 0.0, 0.0, 1.0 / value)

    def evaluate_real_word(self, word: Word, theta: float, lambda_: float) -> Mat2:
        """Multiplies out a word in H and R_θ, left to right.

        Args:
            word (Word): The word.
            theta (float): The angle θ.
            lambda_ (float): λ > 1

        Returns:
            Mat2: The product, which lies in SL(2, ℝ) up to rounding.

        Raises:
            Core.ScaleGuardException: When n·log λ exceeds 40·log 2.
        """
        if word.h_total * math.log(lambda_) > self._MAX_LOG_SCALE:
            raise Core.ScaleGuardException("evaluate_real_word", word.h_total, math.floor(self._MAX_LOG_SCALE / math.log(lambda_)))

        return self._word_helper.evaluate_with(word, theta, lambda power: self.real_H(lambda_, power))

    def real_log_norm(self, word: Word, theta: float, lambda_: float) -> float:
        """log of the entrywise norm of the real-case product."""
        return Core.log_abs(self._word_helper.l1_entry_norm(self.evaluate_real_word(word, theta, lambda_)))

    def model_log_norms(self, word: Word, thetas: Sequence[float], lambda_: float) -> list[LogMagnitude]:
        """The model-case log norms of a word along a sequence of angles."""
        return [self._closed_form_helper.closed_form_norm(word, float(theta), lambda_) for theta in thetas]

    def real_log_norms(self, word: Word, thetas: Sequence[float], lambda_: float) -> list[float]:
        """The real-case log norms of a word along a sequence of angles."""
        return [self.real_log_norm(word, float(theta), lambda_) for theta in thetas]

    def comparison_curves(self, word_model: Word, word_real: Word, lambda_: float, grid: int) -> list[CurveSample]:
        """Samples the model norm of one word and the real norm of another on a uniform θ-grid.

        Args:
            word_model (Word): The word evaluated with h.
            word_real (Word): The word evaluated with H.
            lambda_ (float): λ > 1
            grid (int): The number of grid points, at least 2.

        Returns:
            list[CurveSample]: One sample per grid angle, increasing in θ.
        """
        thetas = self.theta_grid(grid)
        model = self.model_log_norms(word_model, thetas, lambda_)
        real = self.real_log_norms(word_real, thetas, lambda_)

        self._logger.debug("Sampled %s and %s on %s grid points", word_model, word_real, grid)

        return [CurveSample(float(theta), model_value, real_value)
                for theta, model_value, real_value in zip(thetas, model, real)]

    def max_log10_ratio(self, word: Word, lambda_: float, grid: int = 2048) -> float:
        """The largest |log10(real norm / model norm)| of a word over the grid, leaving out angles
        within `ZERO_MASK_WIDTH` of a zero of the model norm, where the ratio is meaningless.

        Args:
            word (Word): The word, evaluated both ways.
            lambda_ (float): λ > 1
            grid (int, optional): The number of grid points. Defaults to 2048.

        Returns:
            float: The masked maximum.
        """
        samples = self.comparison_curves(word, word, lambda_, grid)

        return self.masked_max_log10_ratio([sample.theta for sample in samples],
                                           [sample.log_norm_model.log_value for sample in samples],
                                           [sample.log_norm_real for sample in samples],
                                           self._closed_form_helper.zero_angles(word))

    def masked_max_log10_ratio(self,
                               thetas: Sequence[float],
                               log_norms_a: Sequence[float],
                               log_norms_b: Sequence[float],
                               zero_angles: Sequence[float]) -> float:
        """The largest |log10(a / b)| between two curves on a shared grid, leaving out angles within
        `ZERO_MASK_WIDTH` of any of the given zeros.

        Args:
            thetas (Sequence[float]): The grid angles.
            log_norms_a (Sequence[float]): The first curve's log norms.
            log_norms_b (Sequence[float]): The second curve's log norms.
            zero_angles (Sequence[float]): The angles to mask around.

        Returns:
            float: The masked maximum; inf if an unmasked point has exactly one zero norm.
        """
        zeros = np.array(zero_angles, dtype=float)
        worst = 0.0
        masked = 0

        for theta, value_a, value_b in zip(thetas, log_norms_a, log_norms_b):
            if zeros.size and self._circular_distance(theta, zeros) < self.ZERO_MASK_WIDTH:
                masked += 1
                continue

            if value_a == value_b:
                continue

            worst = max(worst, abs(value_a - value_b) / math.log(10.0))

        if masked > len(thetas) // 10:
            self._logger.warning("Masked %s of %s grid points near model zeros", masked, len(thetas))

        return worst

    def is_nearly_identical(self, word: Word, lambda_: float, grid: int = 2048) -> bool:
        """Whether the model and real curves of a word agree within `NEAR_IDENTITY_THRESHOLD` in log10."""
        return self.max_log10_ratio(word, lambda_, grid) <= self.NEAR_IDENTITY_THRESHOLD

    def curve_statistics(self, thetas: Sequence[float], log_norms: Sequence[float], n: int, params: Params) -> "RealCaseHelper.CurveStatistics":
        """Summarises a curve: its minimum, and how much of the circle lies below λ^{δn}.

        Args:
            thetas (Sequence[float]): The uniform grid the curve was sampled on.
            log_norms (Sequence[float]): The log norms (−inf allowed).
            n (int): The word length, for the threshold λ^{δn}.
            params (Params): The model parameters.

        Returns:
            RealCaseHelper.CurveStatistics: The statistics.
        """
        values = np.asarray(log_norms, dtype=float)
        index = int(np.argmin(values))
        below = values < params.resonance_log_threshold(n)
        fraction = float(np.count_nonzero(below)) / len(values)

        return RealCaseHelper.CurveStatistics(min_log_norm=float(values[index]),
                                              argmin_theta=float(thetas[index]),
                                              resonant_fraction=fraction,
                                              dip_width=Core.TWO_PI * fraction)

    def brute_force_real_f_n(self, theta: float, n: int, params: Params) -> tuple[LogMagnitude, Word]:
        """The smallest real-case norm over all words with n copies of H and at most floor(ε·n) rotations.

        There is no DP for the real case since its products do not factor.

        Args:
            theta (float): The angle θ.
            n (int): The number of H factors, at most `ORACLE_MAX_N`.
            params (Params): The model parameters.

        Returns:
            tuple[LogMagnitude, Word]: The minimum and the first word attaining it.
        """
        if n > self.ORACLE_MAX_N:
            raise Core.ScaleGuardException("brute_force_real_f_n", n, self.ORACLE_MAX_N)

        best_norm = math.inf
        best_word = None

        for word in self._word_helper.enumerate_words(n, params.rotation_budget(n)):
            norm = self._word_helper.l1_entry_norm(self.evaluate_real_word(word, theta, params.lambda_))
            if norm < best_norm:
                best_norm = norm
                best_word = word

        return LogMagnitude.of(best_norm), best_word

    @staticmethod
    def _circular_distance(theta: float, angles: np.ndarray) -> float:
        difference = np.abs(angles - theta)

        return float(np.min(np.minimum(difference, Core.TWO_PI - difference)))

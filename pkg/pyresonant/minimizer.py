"""
Module that contains our Minimizer class.
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from pyresonant.closed_form_helper import ClosedFormHelper
from pyresonant.core import Core
from pyresonant.log_magnitude import LogMagnitude
from pyresonant.params import Params
from pyresonant.word import Word
from pyresonant.word_helper import WordHelper
from pyresonant.word_shape import WordShape


class Minimizer:
    """A class to compute f_n(θ), the smallest norm over all words with n copies of h
    and at most floor(ε·n) rotations, by dynamic programming over partitions of the rotation budget.

    The minimum is always attained on an HH-type word, whose norm is λ^n·∏|cos(j_i θ)|,
    so only the rotation profile has to be optimised.
    """

    # Class variables
    ORACLE_MAX_N: int = 12
    """The largest n the brute-force oracle accepts."""

    @dataclass(frozen=True)
    class MinResult:
        """The minimum norm over words of a given length, with a minimising rotation profile."""

        n: int
        """The number of h factors"""

        log_f_n: LogMagnitude
        """log f_n(θ)"""

        witness_profile: tuple[int, ...]
        """The rotation profile of a minimising HH word"""

        m_used: int
        """The number of rotations the witness uses, sum(witness_profile)"""

        def witness_word(self) -> Word:
            """The HH word realising the minimum, with the h exponents split evenly."""
            return Word.hh(self.witness_profile, self.n)

    class CosProductTable:
        """The DP table G[0..M] of minimal log ∏|cos(j_i θ)| over partitions of m, with backpointers."""

        def __init__(self, values: np.ndarray, first_parts: np.ndarray, whole_tails: np.ndarray = None):
            """Initialises an instance of this class.

            Args:
                values (np.ndarray): G[0..M].
                first_parts (np.ndarray): The first part of a minimising profile for each m (0 for m = 0).
                whole_tails (np.ndarray, optional): Marks the m whose profile ends in the single part
                                                    m − first_parts[m]. Defaults to none marked.
            """
            self.values = values
            """G[0..M]; G[0] = 0"""

            self.first_parts = first_parts
            """Backpointers: the first part of the chosen profile for each m"""

            self.whole_tails = whole_tails if whole_tails is not None else np.zeros(len(values), dtype=bool)
            """Where the remainder after the first part is one part rather than the profile chosen for it"""

        @property
        def size(self) -> int:
            """int: M, the largest budget in the table"""
            return len(self.values) - 1

        def profile(self, m: int) -> tuple[int, ...]:
            """Recovers the minimising profile for budget m by following the backpointers.

            Args:
                m (int): The budget.

            Returns:
                tuple[int, ...]: The profile, summing to m.
            """
            parts = []
            while m > 0:
                part = int(self.first_parts[m])
                parts.append(part)
                if self.whole_tails[m] and part < m:
                    parts.append(m - part)
                    break
                m -= part

            return tuple(parts)

        def best_budget(self, limit: int) -> int:
            """The smallest m' ≤ limit attaining min_{m' ≤ limit} G[m'].

            G is non-increasing, so the minimum value is G[limit].

            Args:
                limit (int): The largest allowed budget.

            Returns:
                int: The minimising budget.
            """
            window = self.values[:limit + 1]
            best = window[limit]

            assert window.min() == best, "G must be non-increasing in m"

            return int(np.flatnonzero(window == best)[0])

    def __init__(self, params: Params, closed_form_helper: ClosedFormHelper = None):
        """Initialises an instance of this class.

        Args:
            params (Params): The model parameters.
            closed_form_helper (ClosedFormHelper, optional): The `ClosedFormHelper` to use. Defaults to a new one.
        """

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

        self._params = params
        """The model parameters for this class instance"""

        self._closed_form_helper = closed_form_helper or ClosedFormHelper()
        """The `ClosedFormHelper` instance for this class instance"""

        self._word_helper = WordHelper()
        """The `WordHelper` instance for this class instance"""

    @property
    def params(self) -> Params:
        """Params: The model parameters"""
        return self._params

    def min_log_cos_product(self, theta: float, budget: int) -> "Minimizer.CosProductTable":
        """Builds G[m] = min over partitions (j_1, …, j_k) of m of Σ log|cos(j_i θ)|, for m = 0..M.

        G[0] = 0 and G[m] = min_{1 ≤ j ≤ m} (log|cos(jθ)| + G[m − j]). Ties between equal values
        prefer fewer parts, then the lexicographically smallest profile. O(M²) time.

        When G[m] = −inf any profile with a vanishing cosine attains it, whatever its remainder, so
        those entries are chosen directly: (m,) if cos(mθ) = 0, otherwise the smallest (a, m − a)
        with a vanishing part.

        Args:
            theta (float): The angle θ.
            budget (int): M ≥ 0

        Returns:
            Minimizer.CosProductTable: The table with backpointers.
        """
        if budget < 0:
            raise Core.ArgumentException("budget", "The argument '{name}' must be non-negative.")

        log_cos = np.array([0.0] + [self._closed_form_helper.log_abs_cos(j, theta) for j in range(1, budget + 1)])

        values = np.zeros(budget + 1)
        first_parts = np.zeros(budget + 1, dtype=np.int64)
        part_counts = np.zeros(budget + 1, dtype=np.int64)
        whole_tails = np.zeros(budget + 1, dtype=bool)
        table = Minimizer.CosProductTable(values, first_parts, whole_tails)
        vanishing = log_cos == -math.inf

        for m in range(1, budget + 1):
            # candidates[j - 1] = log|cos(jθ)| + G[m − j]
            candidates = log_cos[1:m + 1] + values[m - 1::-1]
            best = candidates.min()

            if best == -math.inf:
                values[m] = best
                if vanishing[m]:
                    first_parts[m] = m
                    part_counts[m] = 1
                else:
                    first_parts[m] = next(a for a in range(1, m) if vanishing[a] or vanishing[m - a])
                    part_counts[m] = 2
                    whole_tails[m] = True
                continue

            tied = np.flatnonzero(candidates == best) + 1

            chosen = int(tied[0])
            if len(tied) > 1:
                chosen = min((int(j) for j in tied),
                             key=lambda j: (1 + part_counts[m - j], (j,) + table.profile(m - j)))

            values[m] = best
            first_parts[m] = chosen
            part_counts[m] = 1 + part_counts[m - chosen]

        self._logger.debug("Built cos-product table for theta=%s up to budget %s", theta, budget)

        return table

    def f_n(self, theta: float, n: int) -> "Minimizer.MinResult":
        """Computes f_n(θ) = min ‖W_n(θ)‖ over words with n copies of h and at most floor(ε·n) rotations.

        Args:
            theta (float): The angle θ.
            n (int): The number of h factors, at least 1.

        Returns:
            Minimizer.MinResult: The minimum with an HH witness.
        """
        self._check_n(n)

        budget = self._params.rotation_budget(n)
        table = self.min_log_cos_product(theta, budget)

        return self._result_from_table(theta, n, table, budget)

    def f_n_scan(self, theta: float, horizon: int) -> list["Minimizer.MinResult"]:
        """Computes f_n(θ) for n = 1..N, sharing a single DP table.

        Args:
            theta (float): The angle θ.
            horizon (int): N ≥ 1

        Returns:
            list[Minimizer.MinResult]: One result per n, in order.
        """
        self._check_n(horizon)

        table = self.min_log_cos_product(theta, self._params.rotation_budget(horizon))

        return [self._result_from_table(theta, n, table, self._params.rotation_budget(n))
                for n in range(1, horizon + 1)]

    def f_n_grid(self, thetas: Iterable[float], n: int) -> list["Minimizer.MinResult"]:
        """Computes f_n over a sequence of angles, results ordered as the input.

        Args:
            thetas (Iterable[float]): The angles.
            n (int): The number of h factors.

        Returns:
            list[Minimizer.MinResult]: One result per angle.
        """
        return [self.f_n(theta, n) for theta in thetas]

    def brute_force_f_n(self, theta: float, n: int) -> "Minimizer.MinResult":
        """Computes f_n(θ) by multiplying out every admissible word; the oracle for `f_n`.

        The witness is the rotation profile of the first minimising word in enumeration order,
        which need not be HH-type when several shapes tie.

        Args:
            theta (float): The angle θ.
            n (int): The number of h factors, at most `ORACLE_MAX_N`.

        Returns:
            Minimizer.MinResult: The exhaustive minimum.

        Raises:
            Core.ScaleGuardException: When n exceeds `ORACLE_MAX_N`.
        """
        self._check_n(n)

        if n > self.ORACLE_MAX_N:
            raise Core.ScaleGuardException("brute_force_f_n", n, self.ORACLE_MAX_N)

        best_norm = math.inf
        best_word = None

        for word in self._word_helper.enumerate_words(n, self._params.rotation_budget(n)):
            norm = self._word_helper.l1_entry_norm(self._word_helper.evaluate_word(word, theta, self._params.lambda_))
            if norm < best_norm:
                best_norm = norm
                best_word = word

        return Minimizer.MinResult(n, LogMagnitude.of(best_norm), best_word.rotation_exponents, best_word.r_total)

    def _result_from_table(self, theta: float, n: int, table: "Minimizer.CosProductTable", budget: int) -> "Minimizer.MinResult":
        m_used = table.best_budget(budget)
        profile = table.profile(m_used)
        shape = WordShape.HH if profile else WordShape.PURE_H

        # Re-evaluated through the closed form so the witness reproduces log_f_n exactly
        log_f_n = self._closed_form_helper.profile_norm(shape, n, profile, theta, self._params.lambda_)

        return Minimizer.MinResult(n, log_f_n, profile, m_used)

    @staticmethod
    def _check_n(n: int):
        if n < 1:
            raise Core.ArgumentException("n", "The argument '{name}' must be a positive integer.")

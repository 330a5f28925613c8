"""
Module that contains our OracleSuite class.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from pyresonant.closed_form_helper import ClosedFormHelper
from pyresonant.core import Core
from pyresonant.minimizer import Minimizer
from pyresonant.params import Params
from pyresonant.resonance_helper import ResonanceHelper
from pyresonant.word_helper import WordHelper


class OracleSuite:
    """A class that runs the oracle-equivalence checks: closed forms against matrix products,
    the DP against exhaustive search, and the measure identities and bounds.
    """

    # Class variables
    RELATIVE_TOLERANCE: float = 1e-10
    """Relative agreement required between a fast path and its oracle."""

    ABSOLUTE_TOLERANCE: float = 1e-12
    """Absolute agreement accepted when the value is below `SMALL_VALUE`."""

    SMALL_VALUE: float = 1e-2
    """Below this, agreement is judged absolutely rather than relatively."""

    MEASURE_TOLERANCE: float = 1e-12
    """Agreement required between a computed measure and its closed form."""

    @dataclass(frozen=True)
    class CheckOutcome:
        """The result of one named check."""

        name: str
        passed: bool
        cases: int
        detail: str = ""

    def __init__(self, quick: bool = False, seed: int = 0):
        """Initialises an instance of this class.

        Args:
            quick (bool, optional): Run reduced sweeps. Defaults to False.
            seed (int, optional): The seed for the pseudo-random angles. Defaults to 0.
        """

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

        self._quick = quick
        """Whether to run reduced sweeps"""

        self._seed = seed
        """The seed for the pseudo-random angles"""

        self._word_helper = WordHelper()
        """The `WordHelper` instance for this class instance"""

        self._closed_form_helper = ClosedFormHelper(self._word_helper)
        """The `ClosedFormHelper` instance for this class instance"""

    @classmethod
    def agrees(cls, log_a: float, log_b: float) -> bool:
        """Whether two log-domain values agree: both -inf, within relative `RELATIVE_TOLERANCE`,
        or within `ABSOLUTE_TOLERANCE` when the values themselves are small.

        Args:
            log_a (float): The first log value.
            log_b (float): The second log value.

        Returns:
            bool: True if they agree.
        """
        if log_a == log_b:
            return True

        value_a = math.exp(log_a) if log_a < 700 else math.inf
        value_b = math.exp(log_b) if log_b < 700 else math.inf

        if max(value_a, value_b) < cls.SMALL_VALUE:
            return abs(value_a - value_b) <= cls.ABSOLUTE_TOLERANCE

        # Relative error in value is the difference in log to first order
        return abs(log_a - log_b) <= cls.RELATIVE_TOLERANCE

    def run(self) -> list["OracleSuite.CheckOutcome"]:
        """Runs every check.

        Returns:
            list[OracleSuite.CheckOutcome]: The outcomes, in a fixed order.
        """
        checks: list[Callable[[], OracleSuite.CheckOutcome]] = [self.check_closed_forms,
                                                                 self.check_minimizer,
                                                                 self.check_measure_identity,
                                                                 self.check_measure_bracket,
                                                                 self.check_density]
        outcomes = []

        for check in checks:
            outcome = check()
            self._logger.info("Check '%s': %s over %s cases %s", outcome.name, "passed" if outcome.passed else "FAILED", outcome.cases, outcome.detail)
            outcomes.append(outcome)

        return outcomes

    def check_closed_forms(self) -> "OracleSuite.CheckOutcome":
        """Closed-form norms against multiplied-out products for every word with n ≤ 6, m ≤ 4."""
        rng = np.random.default_rng(self._seed)
        angles_per_word = 10 if self._quick else 100
        failures = 0
        cases = 0

        for n in range(1, 7):
            for word in self._word_helper.enumerate_words(n, 4):
                for theta in rng.uniform(0.0, Core.TWO_PI, angles_per_word):
                    oracle = self._word_helper.l1_entry_norm(self._word_helper.evaluate_word(word, theta, 2.0))
                    closed = self._closed_form_helper.closed_form_norm(word, theta, 2.0)
                    cases += 1

                    if not self.agrees(closed.log_value, Core.log_abs(oracle)):
                        failures += 1
                        self._logger.warning("Closed form disagrees for %s at theta=%s: %s vs %s", word, theta, closed, oracle)

        return OracleSuite.CheckOutcome("closed_form_vs_product", failures == 0, cases, f"{failures} failures")

    def check_minimizer(self) -> "OracleSuite.CheckOutcome":
        """The DP minimum against exhaustive search over all admissible words."""
        rng = np.random.default_rng(self._seed + 1)
        max_n = 6 if self._quick else 8
        angles = 5 if self._quick else 25
        failures = 0
        cases = 0

        for lambda_ in (1.5, 2.0):
            for epsilon in (0.25, 0.5):
                minimizer = Minimizer(Params(lambda_, 0.5, epsilon), self._closed_form_helper)

                for n in range(1, max_n + 1):
                    for theta in rng.uniform(0.0, Core.TWO_PI, angles):
                        fast = minimizer.f_n(theta, n)
                        oracle = minimizer.brute_force_f_n(theta, n)
                        cases += 1

                        if not self.agrees(fast.log_f_n.log_value, oracle.log_f_n.log_value):
                            failures += 1
                            self._logger.warning("DP disagrees at lambda=%s epsilon=%s n=%s theta=%s", lambda_, epsilon, n, theta)

        return OracleSuite.CheckOutcome("dp_vs_brute_force", failures == 0, cases, f"{failures} failures")

    def check_measure_identity(self) -> "OracleSuite.CheckOutcome":
        """|S̃_α| = 2π − 4·arccos(t̃_α) for α = 1..100."""
        failures = 0
        cases = 0

        for lambda_ in (2.0, 10.0):
            for epsilon in (0.1, 0.5):
                helper = ResonanceHelper(Params(lambda_, 0.5, epsilon))

                for alpha in range(1, 101):
                    expected = Core.TWO_PI - 4.0 * math.acos(helper.outer_threshold(alpha))
                    cases += 1

                    if abs(helper.measure(helper.s_tilde_alpha(alpha)) - expected) > self.MEASURE_TOLERANCE:
                        failures += 1

        return OracleSuite.CheckOutcome("measure_identity", failures == 0, cases, f"{failures} failures")

    def check_measure_bracket(self) -> "OracleSuite.CheckOutcome":
        """The bracket at λ = 2, δ = 0.5, ε = 0.1, A = 50 against its closed-form anchors."""
        helper = ResonanceHelper(Params(2.0, 0.5, 0.1))
        bracket = helper.resonant_measure_bracket(50)

        passed = (bracket.lower >= 4.0 * math.asin(2.0 ** -6) * (1 - 1e-6)
                  and bracket.lower <= bracket.upper <= 0.14
                  and abs(bracket.upper - bracket.asymptotic) <= 0.1 * bracket.asymptotic)

        return OracleSuite.CheckOutcome("measure_bracket", passed, 1, f"[{bracket.lower}, {bracket.upper}]")

    def check_density(self) -> "OracleSuite.CheckOutcome":
        """Every interval longer than π/α meets a density witness, for α ≤ 64."""
        rng = np.random.default_rng(self._seed + 2)
        helper = ResonanceHelper(Params(2.0, 0.5, 0.5))
        intervals = 10 if self._quick else 100
        failures = 0
        cases = 0

        for alpha in range(1, 65):
            witnesses = np.array(helper.density_witnesses(alpha))
            min_length = math.pi / alpha

            for _ in range(intervals):
                length = rng.uniform(min_length, min(Core.TWO_PI, 2.0 * min_length)) + 1e-9
                start = rng.uniform(0.0, Core.TWO_PI)
                offsets = np.mod(witnesses - start, Core.TWO_PI)
                cases += 1

                if not np.any(offsets < length):
                    failures += 1

        return OracleSuite.CheckOutcome("density", failures == 0, cases, f"{failures} failures")

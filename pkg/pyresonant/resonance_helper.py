"""
Module that contains our ResonanceHelper class.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from pyresonant.circular_interval_set import CircularIntervalSet
from pyresonant.closed_form_helper import ClosedFormHelper
from pyresonant.core import Core
from pyresonant.minimizer import Minimizer
from pyresonant.params import Params
from pyresonant.resonance_certificate import ResonanceCertificate
from pyresonant.word_shape import WordShape


class ResonanceHelper:
    """A class to help with the resonant set R: the angles θ for which some n gives f_n(θ) < λ^{δn}.

    R is sandwiched between the unions over α of the inner sublevel sets
    S_α = {|cos(αθ)| < λ^{−(1−δ)α/ε − 1}} and the outer ones S̃_α = {|cos(αθ)| < λ^{−(1−δ)α/ε}},
    which gives both certificates for individual angles and rigorous measure brackets.
    """

    # Class variables
    DEFAULT_TRUNCATION: int = 50
    """The default number of sublevel sets, A, in a measure bracket."""

    class Bound(Enum):
        """Which family of sublevel sets to use."""

        INNER = "inner"
        """The sets S_α, whose union lies inside R."""

        OUTER = "outer"
        """The sets S̃_α, whose union contains R."""

    @dataclass(frozen=True)
    class MeasureBracket:
        """Rigorous lower and upper bounds on |R|, with the approximations reported alongside."""

        lower: float
        """|∪_{α ≤ A} S_α|, a lower bound since each S_α lies in R"""

        upper: float
        """|∪_{α ≤ A} S̃_α| plus the rigorous tail bound"""

        tail: float
        """2π·t̃^{A+1}/(1 − t̃), bounding Σ_{α > A} |S̃_α|"""

        truncated_sum: float
        """Σ_{α ≤ A} |S̃_α|, the subadditive bound on the outer union"""

        asymptotic: float
        """4t̃, the leading-order approximation (not a bound)"""

        geometric_sum: float
        """4t̃/(1 − t̃), the geometric-sum approximation (not a bound)"""

        truncation: int
        """A"""

    def __init__(self, params: Params, minimizer: Minimizer = None):
        """Initialises an instance of this class.

        Args:
            params (Params): The model parameters.
            minimizer (Minimizer, optional): The `Minimizer` used for DP scans. Defaults to a new one.
        """

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

        self._params = params
        """The model parameters for this class instance"""

        self._minimizer = minimizer or Minimizer(params)
        """The `Minimizer` instance for this class instance"""

        self._closed_form_helper = ClosedFormHelper()
        """The `ClosedFormHelper` instance for this class instance"""

    def inner_threshold(self, alpha: int) -> float:
        """t_α = λ^{−(1−δ)α/ε − 1}, the threshold of S_α."""
        return self._params.lambda_ ** -(self._params.decay_exponent(alpha) + 1.0)

    def outer_threshold(self, alpha: int) -> float:
        """t̃_α = λ^{−(1−δ)α/ε}, the threshold of S̃_α."""
        return self._params.lambda_ ** -self._params.decay_exponent(alpha)

    def sublevel_set(self, alpha: int, t: float) -> CircularIntervalSet:
        """Builds {θ ∈ [0, 2π) : |cos(αθ)| < t}.

        This is 2α arcs centred on the zeros (2k+1)π/(2α) of cos(αθ), each of half-width
        arcsin(t)/α, for a total measure of 4·arcsin(t) whatever α is.

        Args:
            alpha (int): α ≥ 1
            t (float): The threshold. t ≥ 1 gives the full circle and t ≤ 0 the empty set.

        Returns:
            CircularIntervalSet: The sublevel set.
        """
        if alpha < 1:
            raise Core.ArgumentException("alpha", "The argument '{name}' must be a positive integer.")

        if t <= 0.0:
            return CircularIntervalSet.empty()

        if t >= 1.0:
            return CircularIntervalSet.full()

        half_width = math.asin(t) / alpha
        arcs = []

        for center in self.density_witnesses(alpha):
            arcs.append((center - half_width, center + half_width))

        return CircularIntervalSet(arcs)

    def s_alpha(self, alpha: int) -> CircularIntervalSet:
        """The inner sublevel set S_α."""
        return self.sublevel_set(alpha, self.inner_threshold(alpha))

    def s_tilde_alpha(self, alpha: int) -> CircularIntervalSet:
        """The outer sublevel set S̃_α."""
        return self.sublevel_set(alpha, self.outer_threshold(alpha))

    def measure(self, interval_set: CircularIntervalSet) -> float:
        """The Lebesgue measure of a set of arcs.

        Args:
            interval_set (CircularIntervalSet): The set.

        Returns:
            float: Its measure, in [0, 2π].
        """
        return interval_set.measure()

    def union_up_to(self, truncation: int, which: Union["ResonanceHelper.Bound", str]) -> CircularIntervalSet:
        """The union of S_α (inner) or S̃_α (outer) over α = 1..A.

        Args:
            truncation (int): A ≥ 1
            which (ResonanceHelper.Bound | str): 'inner' or 'outer'.

        Returns:
            CircularIntervalSet: The merged union.
        """
        if truncation < 1:
            raise Core.ArgumentException("A", "The argument '{name}' must be a positive integer.")

        which = ResonanceHelper.Bound(which)
        build = self.s_alpha if which is ResonanceHelper.Bound.INNER else self.s_tilde_alpha

        arcs: list[tuple[float, float]] = []
        for alpha in range(1, truncation + 1):
            arcs.extend(build(alpha).arcs)

        union = CircularIntervalSet(arcs)

        self._logger.debug("Union of %s sets up to A=%s has %s arcs", which.value, truncation, len(union))

        return union

    def resonant_measure_bracket(self, truncation: int = DEFAULT_TRUNCATION) -> "ResonanceHelper.MeasureBracket":
        """Brackets the measure of R between the inner union and the outer union plus a tail.

        The tail Σ_{α > A} 4·arcsin(t̃^α) is bounded by 2π·t̃^{A+1}/(1 − t̃), using arcsin x ≤ (π/2)x.

        Args:
            truncation (int, optional): A ≥ 1. Defaults to 50.

        Returns:
            ResonanceHelper.MeasureBracket: The bracket.

        Raises:
            ResonanceHelper.TrivialBoundException: When t̃ = λ^{−(1−δ)/ε} is not below 1.
        """
        t_tilde = self.outer_threshold(1)
        if t_tilde >= 1.0:
            raise ResonanceHelper.TrivialBoundException(t_tilde)

        lower = self.union_up_to(truncation, ResonanceHelper.Bound.INNER).measure()
        outer = self.union_up_to(truncation, ResonanceHelper.Bound.OUTER).measure()
        tail = Core.TWO_PI * t_tilde ** (truncation + 1) / (1.0 - t_tilde)
        truncated_sum = math.fsum(4.0 * math.asin(self.outer_threshold(alpha)) for alpha in range(1, truncation + 1))
        asymptotic, geometric_sum = self.approximations()

        bracket = ResonanceHelper.MeasureBracket(lower=lower,
                                                 upper=min(Core.TWO_PI, outer + tail),
                                                 tail=tail,
                                                 truncated_sum=truncated_sum,
                                                 asymptotic=asymptotic,
                                                 geometric_sum=geometric_sum,
                                                 truncation=truncation)

        self._logger.info("Measure bracket for %s with A=%s: [%s, %s]", self._params, truncation, bracket.lower, bracket.upper)

        return bracket

    def approximations(self) -> tuple[float, float]:
        """The approximations 4t̃ and 4t̃/(1 − t̃) to |R|, with t̃ = λ^{−(1−δ)/ε}.

        Returns:
            tuple[float, float]: (4t̃, 4t̃/(1 − t̃))
        """
        t_tilde = self.outer_threshold(1)

        return 4.0 * t_tilde, 4.0 * t_tilde / (1.0 - t_tilde)

    def certify(self, theta: float, horizon: int) -> ResonanceCertificate:
        """Decides whether θ is resonant with some word of length n ≤ N, with a certificate.

        1. If |cos(αθ)| is below the inner threshold for some α ≤ floor(ε·N), the word
           h^{i_1} R^α h^{i_2} with n = floor(α/ε) + 1 is a witness; it is re-checked before returning.
        2. If |cos(αθ)| reaches the outer threshold for every α ≤ floor(ε·N), every word of
           length n ≤ N has norm at least λ^{δn}.
        3. Otherwise f_n is scanned for n = 1..N with the DP.

        Args:
            theta (float): The angle θ.
            horizon (int): N ≥ 1

        Returns:
            ResonanceCertificate: A resonant or non-resonant-up-to-N certificate; never unknown.
        """
        if horizon < 1:
            raise Core.ArgumentException("N", "The argument '{name}' must be a positive integer.")

        budget = self._params.rotation_budget(horizon)
        cosines = [abs(Core.cos_sin_multiple(alpha, theta)[0]) for alpha in range(1, budget + 1)]

        for alpha, cos_value in enumerate(cosines, start=1):
            if cos_value < self.inner_threshold(alpha):
                certificate = self._sublevel_witness(theta, horizon, alpha)
                if certificate is not None:
                    return certificate

        if all(cos_value >= self.outer_threshold(alpha) for alpha, cos_value in enumerate(cosines, start=1)):
            self._logger.debug("Angle %s is outside every outer set up to alpha=%s", theta, budget)
            return ResonanceCertificate(theta, ResonanceCertificate.Verdict.NON_RESONANT_UP_TO, horizon, path="bound")

        for result in self._minimizer.f_n_scan(theta, horizon):
            log_threshold = self._params.resonance_log_threshold(result.n)
            if result.log_f_n.log_value < log_threshold:
                self._logger.debug("Angle %s is resonant at n=%s by DP scan", theta, result.n)
                return ResonanceCertificate(theta,
                                            ResonanceCertificate.Verdict.RESONANT,
                                            horizon,
                                            n=result.n,
                                            witness_profile=result.witness_profile,
                                            log_norm=result.log_f_n.log_value,
                                            log_threshold=log_threshold,
                                            path="scan")

        return ResonanceCertificate(theta, ResonanceCertificate.Verdict.NON_RESONANT_UP_TO, horizon, path="scan")

    def certify_many(self, thetas: Iterable[float], horizon: int) -> list[ResonanceCertificate]:
        """Certifies a batch of angles; results are in input order.

        Args:
            thetas (Iterable[float]): The angles.
            horizon (int): N ≥ 1

        Returns:
            list[ResonanceCertificate]: One certificate per angle.
        """
        return [self.certify(theta, horizon) for theta in thetas]

    def verify_certificate(self, certificate: ResonanceCertificate) -> bool:
        """Re-evaluates a resonant certificate's witness through the closed form.

        Args:
            certificate (ResonanceCertificate): The certificate.

        Returns:
            bool: True when the witness word's norm is below λ^{δn}; False for any other verdict.
        """
        if not certificate.is_resonant:
            return False

        shape = WordShape.HH if certificate.witness_profile else WordShape.PURE_H
        log_norm = self._closed_form_helper.profile_norm(shape,
                                                         certificate.n,
                                                         certificate.witness_profile,
                                                         certificate.theta,
                                                         self._params.lambda_)

        return (sum(certificate.witness_profile) <= self._params.rotation_budget(certificate.n)
                and log_norm.log_value < self._params.resonance_log_threshold(certificate.n))

    def density_witnesses(self, alpha: int) -> list[float]:
        """The 2α zeros (2k+1)π/(2α), k = 0..2α−1, of cos(αθ) in [0, 2π).

        Every one lies in S_α, so R meets every interval longer than π/α.

        Args:
            alpha (int): α ≥ 1

        Returns:
            list[float]: The angles, increasing.
        """
        if alpha < 1:
            raise Core.ArgumentException("alpha", "The argument '{name}' must be a positive integer.")

        return [(2 * k + 1) * math.pi / (2 * alpha) for k in range(2 * alpha)]

    def _sublevel_witness(self, theta: float, horizon: int, alpha: int) -> Union[ResonanceCertificate, None]:
        n = Core.floor_quotient(alpha, self._params.epsilon) + 1
        certificate = ResonanceCertificate(theta,
                                           ResonanceCertificate.Verdict.RESONANT,
                                           horizon,
                                           n=n,
                                           witness_profile=(alpha,),
                                           log_norm=self._closed_form_helper.profile_norm(WordShape.HH, n, (alpha,), theta, self._params.lambda_).log_value,
                                           log_threshold=self._params.resonance_log_threshold(n),
                                           path="sublevel")

        if self.verify_certificate(certificate):
            self._logger.debug("Angle %s is resonant through S_%s at n=%s", theta, alpha, n)
            return certificate

        self._logger.warning("Sublevel witness for angle %s at alpha=%s failed re-verification; falling back", theta, alpha)
        return None

    class TrivialBoundException(Exception):
        """Exception class thrown when the parameters only give the trivial bound 2π on |R|."""

        def __init__(self, t_tilde: float, message: str = "Parameters give trivial bound 2π (λ^(-(1-δ)/ε) = {t_tilde} is not below 1)."):
            """Initialises an instance of this exception

            Args:
                t_tilde (float): The offending ratio t̃.
                message (str, optional): The exception message. Must contain a 't_tilde' format insert.
            """
            self.message = message
            self._t_tilde = t_tilde

            super().__init__(self.message)

        def __str__(self):
            """Returns a string representation of this exception"""
            return self.message.format(t_tilde=self._t_tilde)

"""
Module that contains our ResonanceCertificate class.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional


@dataclass(frozen=True)
class ResonanceCertificate:
    """The outcome of certifying an angle: resonant with a witness, or non-resonant up to a horizon.

    A `RESONANT` certificate carries (n, witness_profile) such that the HH word with that profile
    and n copies of h has norm below λ^{δn}. A `NON_RESONANT_UP_TO` certificate guarantees
    f_n(θ) ≥ λ^{δn} for every n ≤ horizon.
    """

    class Verdict(Enum):
        """The possible verdicts."""

        RESONANT = "Resonant"
        NON_RESONANT_UP_TO = "NonResonantUpTo"
        UNKNOWN = "Unknown"

    theta: float
    """The angle that was certified"""

    verdict: "ResonanceCertificate.Verdict"
    """The verdict"""

    horizon: int
    """N, the largest word length considered"""

    n: Optional[int] = None
    """For a resonant verdict, the word length of the witness"""

    witness_profile: tuple[int, ...] = ()
    """For a resonant verdict, the rotation profile of the witness"""

    log_norm: Optional[float] = None
    """For a resonant verdict, log of the witness's norm"""

    log_threshold: Optional[float] = None
    """For a resonant verdict, log λ^{δn}"""

    path: str = ""
    """Which route produced the verdict: 'sublevel', 'bound' or 'scan'"""

    @property
    def is_resonant(self) -> bool:
        """bool: True for a resonant verdict"""
        return self.verdict is ResonanceCertificate.Verdict.RESONANT

    def to_dict(self) -> dict[str, Any]:
        """A JSON-ready representation; -inf is written as the string '-inf'."""
        result: dict[str, Any] = {
            "theta": self.theta,
            "verdict": self.verdict.value,
            "horizon": self.horizon,
            "path": self.path,
        }

        if self.is_resonant:
            result["n"] = self.n
            result["witness_profile"] = list(self.witness_profile)
            result["log_norm"] = "-inf" if self.log_norm == -math.inf else self.log_norm
            result["log_threshold"] = self.log_threshold

        return result

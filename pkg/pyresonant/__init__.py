"""
A package for the norm growth of words in the singular matrix h = diag(λ, 0) and rotations R_θ,
the resonant set of angles where that growth stalls, and comparisons with the SL(2, ℝ) case.

See README.md for the command line.
"""
import logging

logger = logging.getLogger(__name__)
logger.info("Imported package '%s' from %s", __name__, __path__)

# -*- coding: utf-8 -*-

import math
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from .context import pyresonant  # noqa: F401
from pyresonant.circular_interval_set import CircularIntervalSet
from pyresonant.core import Core
from pyresonant.minimizer import Minimizer
from pyresonant.oracle_suite import OracleSuite
from pyresonant.params import Params
from pyresonant.resonance_certificate import ResonanceCertificate
from pyresonant.resonance_helper import ResonanceHelper

GRID = np.arange(200_000) * (Core.TWO_PI / 200_000)


def predicate_measure(alpha, t):
    """Estimates |{|cos(αθ)| < t}| by counting grid points that satisfy the predicate directly."""
    return Core.TWO_PI * np.count_nonzero(np.abs(np.cos(alpha * GRID)) < t) / len(GRID)


class SublevelSetTestSuite(unittest.TestCase):
    """Sublevel sets of |cos(αθ)| and their measures."""

    def setUp(self):
        self.helper = ResonanceHelper(Params(2.0, 0.5, 0.5))

    def test_sublevel_set_examples(self):
        first = self.helper.sublevel_set(1, 0.5)

        self.assertEqual(len(first), 2)
        self.assertIn(math.pi / 2, first)
        self.assertIn(3 * math.pi / 2, first)
        self.assertAlmostEqual(first.measure(), Core.TWO_PI / 3, places=14)
        self.assertAlmostEqual(predicate_measure(1, 0.5), Core.TWO_PI / 3, delta=1e-3)

        second = self.helper.sublevel_set(2, 0.5)
        self.assertEqual(len(second), 4)
        self.assertAlmostEqual(second.measure(), Core.TWO_PI / 3, places=14)

    def test_sublevel_set_limits(self):
        self.assertAlmostEqual(self.helper.sublevel_set(1, 1.0 - 1e-12).measure(), Core.TWO_PI, delta=1e-5)
        self.assertEqual(self.helper.sublevel_set(3, 1.0), CircularIntervalSet.full())
        self.assertEqual(self.helper.sublevel_set(3, 0.0), CircularIntervalSet.empty())

        with self.assertRaises(Core.ArgumentException):
            self.helper.sublevel_set(0, 0.5)

    def test_sublevel_set_matches_predicate(self):
        for alpha in (1, 3, 7):
            for t in (0.05, 0.3, 0.9):
                interval_set = self.helper.sublevel_set(alpha, t)
                inside = np.abs(np.cos(alpha * GRID)) < t

                self.assertAlmostEqual(interval_set.measure(), 4.0 * math.asin(t), places=12)
                self.assertLessEqual(np.count_nonzero(interval_set.indicator(GRID) != inside), 4 * alpha)

    def test_s_alpha_examples(self):
        self.assertAlmostEqual(self.helper.s_tilde_alpha(1).measure(), Core.TWO_PI / 3, places=14)
        self.assertAlmostEqual(self.helper.s_alpha(1).measure(), 4.0 * math.asin(0.25), places=14)
        self.assertAlmostEqual(self.helper.s_alpha(1).measure(), 1.01072, places=5)

        narrow = ResonanceHelper(Params(2.0, 0.5, 0.1))
        self.assertAlmostEqual(narrow.outer_threshold(1), 0.03125, places=15)
        self.assertAlmostEqual(narrow.s_tilde_alpha(1).measure(), 4 * math.asin(0.03125), places=14)

    def test_measure_examples(self):
        self.assertEqual(self.helper.measure(CircularIntervalSet.empty()), 0.0)
        self.assertAlmostEqual(self.helper.measure(CircularIntervalSet.full()), Core.TWO_PI, places=15)
        self.assertAlmostEqual(self.helper.measure(self.helper.s_tilde_alpha(1)), Core.TWO_PI - 4.0 * math.acos(0.5), places=14)

    def test_measure_identity_sweep(self):
        outcome = OracleSuite().check_measure_identity()

        self.assertTrue(outcome.passed, outcome.detail)
        self.assertEqual(outcome.cases, 400)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=1, max_value=40),
           st.floats(min_value=1.1, max_value=10.0),
           st.floats(min_value=0.05, max_value=0.95),
           st.floats(min_value=0.05, max_value=0.95))
    def test_inner_set_lies_in_outer_set(self, alpha, lambda_, delta, epsilon):
        helper = ResonanceHelper(Params(lambda_, delta, epsilon))
        inner = helper.s_alpha(alpha)
        outer = helper.s_tilde_alpha(alpha)

        self.assertEqual(inner | outer, outer)
        self.assertLessEqual(inner.measure(), outer.measure())


class MeasureBracketTestSuite(unittest.TestCase):
    """Unions of sublevel sets and the resonant measure bracket."""

    def setUp(self):
        self.helper = ResonanceHelper(Params(2.0, 0.5, 0.1))

    def test_union_examples(self):
        self.assertEqual(self.helper.union_up_to(1, "inner"), self.helper.s_alpha(1))
        self.assertEqual(self.helper.union_up_to(1, ResonanceHelper.Bound.OUTER), self.helper.s_tilde_alpha(1))

        outer = self.helper.union_up_to(30, "outer").measure()
        self.assertGreater(outer, 0.125)
        self.assertLess(outer, 0.13)
        self.assertLessEqual(outer, math.fsum(self.helper.s_tilde_alpha(alpha).measure() for alpha in range(1, 31)) + 1e-15)

    def test_union_grows_with_truncation(self):
        helper = ResonanceHelper(Params(2.0, 0.5, 0.5))
        measures = [helper.union_up_to(truncation, "outer").measure() for truncation in range(1, 15)]

        self.assertTrue(all(later >= earlier for earlier, later in zip(measures, measures[1:])))

    def test_union_matches_grid(self):
        union = ResonanceHelper(Params(2.0, 0.5, 0.5)).union_up_to(12, "outer")
        points = 1_000_000
        bound = Core.TWO_PI * 1e-5 + 4 * len(union) * (Core.TWO_PI / points)

        self.assertAlmostEqual(union.grid_measure(points), union.measure(), delta=bound)

    def test_union_rejects_bad_arguments(self):
        with self.assertRaises(Core.ArgumentException):
            self.helper.union_up_to(0, "outer")

        with self.assertRaises(ValueError):
            self.helper.union_up_to(3, "sideways")

    def test_bracket_anchors(self):
        bracket = self.helper.resonant_measure_bracket(50)

        self.assertGreaterEqual(bracket.lower, 0.0625 * (1 - 1e-6))
        self.assertGreaterEqual(bracket.lower, 4.0 * math.asin(2.0 ** -6) - 1e-15)
        self.assertLessEqual(bracket.upper, 0.14)
        self.assertLessEqual(bracket.lower, bracket.upper)
        self.assertAlmostEqual(bracket.upper, 0.129, delta=1e-3)
        self.assertLessEqual(abs(bracket.upper - 0.125), 0.1 * 0.125)
        self.assertEqual(bracket.truncation, 50)

    def test_bracket_reports_approximations(self):
        bracket = self.helper.resonant_measure_bracket()

        self.assertAlmostEqual(bracket.asymptotic, 0.125, places=12)
        self.assertAlmostEqual(bracket.geometric_sum, 0.125 / (1 - 0.03125), places=12)
        self.assertLess(bracket.tail, 1e-70)
        self.assertGreaterEqual(bracket.truncated_sum + 1e-15, bracket.upper - bracket.tail)
        self.assertEqual(self.helper.approximations(), (bracket.asymptotic, bracket.geometric_sum))

    def test_bracket_check_in_oracle_suite(self):
        self.assertTrue(OracleSuite().check_measure_bracket().passed)

    @settings(max_examples=30, deadline=None)
    @given(st.floats(min_value=1.5, max_value=10.0),
           st.floats(min_value=0.1, max_value=0.9),
           st.floats(min_value=0.05, max_value=0.9),
           st.integers(min_value=1, max_value=20))
    def test_lower_never_exceeds_upper(self, lambda_, delta, epsilon, truncation):
        bracket = ResonanceHelper(Params(lambda_, delta, epsilon)).resonant_measure_bracket(truncation)

        self.assertLessEqual(bracket.lower, bracket.upper + 1e-12)
        self.assertLessEqual(bracket.upper, Core.TWO_PI)

    def test_trivial_bound_raises(self):
        helper = ResonanceHelper(Params(1.0000000000000002, 0.99, 0.9))

        with self.assertRaises(ResonanceHelper.TrivialBoundException) as context:
            helper.resonant_measure_bracket(5)

        self.assertIn("trivial bound", str(context.exception))


class CertifyTestSuite(unittest.TestCase):
    """Certificates for individual angles, and the density of the resonant set."""

    def setUp(self):
        self.params = Params(2.0, 0.5, 0.5)
        self.helper = ResonanceHelper(self.params)

    def test_quarter_turn_is_resonant(self):
        certificate = self.helper.certify(math.pi / 2, 2)

        self.assertTrue(certificate.is_resonant)
        self.assertEqual(certificate.path, "sublevel")
        self.assertEqual(certificate.witness_profile, (1,))
        self.assertEqual(certificate.n, 3)
        self.assertEqual(certificate.to_dict()["log_norm"], "-inf")
        self.assertTrue(self.helper.verify_certificate(certificate))

    def test_zero_is_never_resonant(self):
        for horizon in range(1, 31):
            certificate = self.helper.certify(0.0, horizon)

            self.assertIs(certificate.verdict, ResonanceCertificate.Verdict.NON_RESONANT_UP_TO)
            self.assertEqual(certificate.horizon, horizon)
            self.assertFalse(self.helper.verify_certificate(certificate))

    def test_third_turn_is_non_resonant_up_to_eight(self):
        certificate = self.helper.certify(math.pi / 3, 8)

        self.assertIs(certificate.verdict, ResonanceCertificate.Verdict.NON_RESONANT_UP_TO)
        self.assertEqual(certificate.path, "bound")

        for result in Minimizer(self.params).f_n_scan(math.pi / 3, 8):
            self.assertGreaterEqual(result.log_f_n.log_value, self.params.resonance_log_threshold(result.n) - 1e-12)

    def test_scan_path_finds_resonance_outside_sublevel_sets(self):
        # |cos αθ| never drops below t_α for α ≤ 10, and |cos θ| = 0.3 is below t̃_1 = 0.5
        theta = math.acos(0.3)
        certificate = self.helper.certify(theta, 20)

        self.assertEqual(certificate.path, "scan")
        self.assertTrue(certificate.is_resonant)
        self.assertEqual(certificate.n, 2)
        self.assertEqual(certificate.witness_profile, (1,))
        self.assertTrue(self.helper.verify_certificate(certificate))

    def test_tampered_certificate_fails_verification(self):
        forged = ResonanceCertificate(0.0, ResonanceCertificate.Verdict.RESONANT, 10, n=3, witness_profile=(1,))

        self.assertFalse(self.helper.verify_certificate(forged))

        over_budget = ResonanceCertificate(math.pi / 2, ResonanceCertificate.Verdict.RESONANT, 10, n=2, witness_profile=(3,))
        self.assertFalse(self.helper.verify_certificate(over_budget))

    def test_certify_many_keeps_order(self):
        thetas = [0.0, math.pi / 2, math.pi / 3]
        certificates = self.helper.certify_many(thetas, 8)

        self.assertEqual([certificate.theta for certificate in certificates], thetas)
        self.assertEqual([certificate.is_resonant for certificate in certificates], [False, True, False])

    def test_certify_rejects_bad_horizon(self):
        with self.assertRaises(Core.ArgumentException):
            self.helper.certify(1.0, 0)

    def test_sandwich(self):
        horizon = 20
        rng = np.random.default_rng(2024)
        minimizer = Minimizer(self.params)

        inner = self.helper.union_up_to(10, ResonanceHelper.Bound.INNER)
        for theta in inner.sample(rng, 200):
            certificate = self.helper.certify(float(theta), horizon)

            self.assertTrue(certificate.is_resonant, f"theta={theta}")
            self.assertTrue(self.helper.verify_certificate(certificate), f"theta={theta}")

        outside = self.helper.union_up_to(self.params.rotation_budget(horizon), ResonanceHelper.Bound.OUTER).complement()
        for theta in outside.sample(rng, 200):
            certificate = self.helper.certify(float(theta), horizon)

            self.assertIs(certificate.verdict, ResonanceCertificate.Verdict.NON_RESONANT_UP_TO, f"theta={theta}")
            for result in minimizer.f_n_scan(float(theta), horizon):
                self.assertGreaterEqual(result.log_f_n.log_value, self.params.resonance_log_threshold(result.n) - 1e-9)

    def test_density_witness_examples(self):
        np.testing.assert_allclose(self.helper.density_witnesses(1), [math.pi / 2, 3 * math.pi / 2])
        np.testing.assert_allclose(self.helper.density_witnesses(2), [math.pi / 4, 3 * math.pi / 4, 5 * math.pi / 4, 7 * math.pi / 4])

        for alpha in (1, 4, 9):
            for theta in self.helper.density_witnesses(alpha):
                self.assertIn(theta, self.helper.s_alpha(alpha))

    def test_density_sweep(self):
        outcome = OracleSuite(seed=3).check_density()

        self.assertTrue(outcome.passed, outcome.detail)
        self.assertEqual(outcome.cases, 64 * 100)


if __name__ == '__main__':
    unittest.main()

# -*- coding: utf-8 -*-

import math
import unittest

import mpmath
import numpy as np
from hypothesis import given, settings, strategies as st

from .context import pyresonant  # noqa: F401
from pyresonant.core import Core
from pyresonant.log_magnitude import LogMagnitude
from pyresonant.mat2 import Mat2
from pyresonant.params import Params

finite_entries = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
matrices = st.builds(Mat2, finite_entries, finite_entries, finite_entries, finite_entries)


class CoreTestSuite(unittest.TestCase):
    """Angle reduction, snapping and exact budgets."""

    def test_reduce_angle(self):
        self.assertAlmostEqual(Core.reduce_angle(-0.5), Core.TWO_PI - 0.5, places=14)
        self.assertAlmostEqual(Core.reduce_angle(7.0), 7.0 - Core.TWO_PI, places=14)
        self.assertEqual(Core.reduce_angle(0.0), 0.0)

        for theta in (-1e-300, -Core.TWO_PI, 3 * Core.TWO_PI):
            reduced = Core.reduce_angle(theta)
            self.assertTrue(0.0 <= reduced < Core.TWO_PI)

    def test_reduce_angle_rejects_non_finite(self):
        with self.assertRaises(Core.ArgumentException):
            Core.reduce_angle(math.inf)

        with self.assertRaises(Core.ArgumentException):
            Core.reduce_angle(math.nan)

    def test_multiple_angle_small(self):
        self.assertAlmostEqual(Core.multiple_angle(3, 1.0), Core.reduce_angle(3.0), places=14)
        self.assertEqual(Core.multiple_angle(0, 1.0), 0.0)

    def test_multiple_angle_large_uses_extended_precision(self):
        multiple = 2 ** 41 + 3

        with mpmath.workdps(80):
            expected = float(mpmath.fmod(mpmath.mpf(multiple) * mpmath.mpf(0.5), 2 * mpmath.pi))

        self.assertAlmostEqual(Core.multiple_angle(multiple, 0.5), expected, places=9)

    def test_cos_sin_snaps_zeros(self):
        self.assertEqual(Core.cos_sin(math.pi / 2), (0.0, 1.0))
        self.assertEqual(Core.cos_sin(math.pi)[1], 0.0)
        self.assertEqual(Core.cos_sin_multiple(3, math.pi / 6)[0], 0.0)

    def test_log_abs(self):
        self.assertEqual(Core.log_abs(0.0), -math.inf)
        self.assertAlmostEqual(Core.log_abs(-math.e), 1.0, places=15)

    def test_floor_product_uses_decimal_epsilon(self):
        self.assertEqual(Core.floor_product(0.3, 10), 3)
        self.assertEqual(Core.floor_product(0.5, 7), 3)
        self.assertEqual(Core.floor_product(0.1, 9), 0)

    def test_floor_quotient(self):
        self.assertEqual(Core.floor_quotient(1, 0.1), 10)
        self.assertEqual(Core.floor_quotient(3, 0.4), 7)
        self.assertEqual(Core.floor_quotient(2, 0.5), 4)

    def test_exception_messages(self):
        self.assertIn("'lambda'", str(Core.ArgumentException("lambda")))
        self.assertIn("12", str(Core.ScaleGuardException("brute_force_f_n", 13, 12)))


class ParamsTestSuite(unittest.TestCase):
    """Validation and derived quantities of Params."""

    def test_validation(self):
        for lambda_, delta, epsilon in ((1.0, 0.5, 0.5), (2.0, 0.0, 0.5), (2.0, 1.0, 0.5),
                                        (2.0, 0.5, 0.0), (2.0, 0.5, 1.0), (math.inf, 0.5, 0.5)):
            with self.assertRaises(Core.ArgumentException):
                Params(lambda_, delta, epsilon)

    def test_derived_quantities(self):
        params = Params(2.0, 0.5, 0.1)

        self.assertEqual(params.rotation_budget(25), 2)
        self.assertAlmostEqual(params.resonance_log_threshold(4), 2 * math.log(2.0), places=15)
        self.assertAlmostEqual(params.decay_exponent(1), 5.0, places=12)
        self.assertEqual(params.default_horizon(), 100)
        self.assertEqual(Params(2.0, 0.5, 0.3).default_horizon(), 34)


class Mat2TestSuite(unittest.TestCase):
    """The 2×2 matrix value type."""

    def test_identity_and_zero(self):
        self.assertEqual(Mat2.identity().l1_norm(), 2.0)
        self.assertEqual(Mat2.zero().l1_norm(), 0.0)
        self.assertEqual(Mat2.identity().determinant(), 1.0)

    def test_product_matches_numpy(self):
        left = Mat2(1.0, 2.0, 3.0, 4.0)
        right = Mat2(0.5, -1.0, 2.0, 0.0)

        np.testing.assert_allclose((left @ right).to_array(), left.to_array() @ right.to_array())
        self.assertEqual(Mat2.from_array(left.to_array()), left)

    def test_power(self):
        matrix = Mat2(1.0, 1.0, 0.0, 1.0)

        self.assertEqual(matrix.power(0), Mat2.identity())
        self.assertEqual(matrix.power(5), Mat2(1.0, 5.0, 0.0, 1.0))

    def test_non_finite_entries_rejected(self):
        with self.assertRaises(Core.ScaleGuardException):
            Mat2(math.inf, 0.0, 0.0, 0.0)

    @settings(max_examples=100, deadline=None)
    @given(matrices, matrices, matrices)
    def test_associativity(self, a, b, c):
        np.testing.assert_allclose(((a @ b) @ c).to_array(), (a @ (b @ c)).to_array(), rtol=1e-9, atol=1e-9)

    @settings(max_examples=100, deadline=None)
    @given(matrices, matrices)
    def test_norm_submultiplicative(self, a, b):
        self.assertLessEqual((a @ b).l1_norm(), a.l1_norm() * b.l1_norm() * (1 + 1e-12) + 1e-12)

    @settings(max_examples=100, deadline=None)
    @given(matrices, matrices)
    def test_norm_subadditive(self, a, b):
        self.assertLessEqual((a + b).l1_norm(), (a.l1_norm() + b.l1_norm()) * (1 + 1e-12))

    def test_addition(self):
        self.assertEqual(Mat2(1.0, 2.0, 3.0, 4.0) + Mat2(-1.0, 0.5, 0.0, 1.0), Mat2(0.0, 2.5, 3.0, 5.0))


class LogMagnitudeTestSuite(unittest.TestCase):
    """The log-domain magnitude."""

    def test_zero_and_one(self):
        self.assertTrue(LogMagnitude.zero().is_zero())
        self.assertEqual(LogMagnitude.one().value(), 1.0)
        self.assertEqual(LogMagnitude.of(0.0), LogMagnitude.zero())
        self.assertEqual(str(LogMagnitude.zero()), "-inf")

    def test_multiplication_and_order(self):
        product = LogMagnitude.of(2.0) * LogMagnitude.of(3.0)

        self.assertAlmostEqual(product.value(), 6.0, places=12)
        self.assertLess(LogMagnitude.zero(), LogMagnitude.of(1e-300))
        self.assertTrue((LogMagnitude.zero() * LogMagnitude.of(5.0)).is_zero())

    def test_large_values_do_not_overflow(self):
        big = LogMagnitude(5000 * math.log(2.0))

        self.assertEqual(big.value(), math.inf)
        self.assertGreater(big, LogMagnitude.of(1e300))

    def test_rejects_nan_and_positive_infinity(self):
        for value in (math.nan, math.inf):
            with self.assertRaises(Core.ArgumentException):
                LogMagnitude(value)


if __name__ == '__main__':
    unittest.main()

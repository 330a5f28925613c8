# -*- coding: utf-8 -*-

import contextlib
import csv
import io
import json
import math
import os
import tempfile
import unittest

from .context import pyresonant  # noqa: F401
from pyresonant.cli import Cli


class CliTestSuite(unittest.TestCase):
    """The command-line subcommands, their outputs and exit codes."""

    def run_cli(self, *argv):
        stdout = io.StringIO()
        stderr = io.StringIO()

        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            code = Cli().run(list(argv))

        return code, stdout.getvalue()

    def test_norm_curve_to_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "curve.csv")
            code, _ = self.run_cli("norm-curve", "--word", "H:5,R:2,H:5,R:3,H:5", "--lambda", "2", "--grid", "1024", "--out", path)

            with open(path, encoding="utf-8") as stream:
                rows = list(csv.reader(stream))

        self.assertEqual(code, Cli.EXIT_OK)
        self.assertEqual(rows[0], ["theta", "log_norm"])
        self.assertEqual(len(rows), 1025)
        self.assertEqual(float(rows[1][0]), 0.0)
        self.assertAlmostEqual(float(rows[1][1]), 15 * math.log(2.0), places=12)

    def test_norm_curve_is_deterministic(self):
        argv = ("norm-curve", "--word", "H:5,R:2,H:9,R:3,H:1", "--grid", "64", "--real")

        self.assertEqual(self.run_cli(*argv), self.run_cli(*argv))

    def test_fmin(self):
        code, output = self.run_cli("fmin", "--n", "4", "--grid", "8")
        rows = list(csv.reader(io.StringIO(output)))

        self.assertEqual(code, Cli.EXIT_OK)
        self.assertEqual(rows[0], ["theta", "log_f_n", "resonant_flag", "witness"])
        self.assertEqual(len(rows), 9)

        # θ = 0: no rotation helps
        self.assertAlmostEqual(float(rows[1][1]), 4 * math.log(2.0), places=12)
        self.assertEqual(rows[1][2:], ["0", ""])

        # θ = π/2: cos θ vanishes
        self.assertEqual(rows[3][1], "-inf")
        self.assertEqual(rows[3][2], "1")

    def test_measure(self):
        code, output = self.run_cli("measure", "--lambda", "2", "--delta", "0.5", "--epsilon", "0.1")
        document = json.loads(output)

        self.assertEqual(code, Cli.EXIT_OK)
        self.assertEqual(document["A"], 50)
        self.assertAlmostEqual(document["upper"], 0.129, delta=1e-3)
        self.assertLessEqual(document["lower"], document["upper"])
        self.assertEqual(document["paper_asymptotic"], 0.125)

    def test_certify(self):
        code, output = self.run_cli("certify", "--theta", "1.5707963")
        document = json.loads(output)

        self.assertEqual(code, Cli.EXIT_OK)
        self.assertEqual(document["verdict"], "Resonant")
        self.assertEqual(document["horizon"], 20)
        self.assertEqual(document["n"], 3)

        code, output = self.run_cli("certify", "--theta", "0", "--N", "12")
        document = json.loads(output)

        self.assertEqual(document["verdict"], "NonResonantUpTo")
        self.assertEqual(document["horizon"], 12)

    def test_compare_csv(self):
        code, output = self.run_cli("compare", "--word-a", "H:5,R:2,H:5,R:3,H:5", "--word-b", "H:1,R:2,H:13,R:3,H:1", "--grid", "32")
        rows = list(csv.reader(io.StringIO(output)))

        self.assertEqual(code, Cli.EXIT_OK)
        self.assertEqual(rows[0], ["theta", "log_norm_a", "log_norm_b"])
        self.assertEqual(len(rows), 33)
        self.assertTrue(all(row[1] == row[2] for row in rows[1:]))

    def test_compare_summary(self):
        word = "R:1,H:7,R:1,H:8,R:1"
        code, output = self.run_cli("compare", "--word-a", word, "--word-b", word, "--real-b", "--summary")
        document = json.loads(output)

        self.assertEqual(code, Cli.EXIT_OK)
        self.assertEqual(document["grid"], 2048)
        self.assertTrue(document["nearly_identical"])
        self.assertLessEqual(document["max_abs_log10_ratio"], 0.05)
        self.assertEqual(document["curves"]["a"]["word"], word)
        self.assertEqual(set(document["curves"]["b"]), {"word", "min_log_norm", "argmin_theta", "resonant_fraction", "dip_width"})

    def test_verify_quick(self):
        code, output = self.run_cli("verify", "--quick", "--seed", "5")
        outcomes = json.loads(output)

        self.assertEqual(code, Cli.EXIT_OK)
        self.assertEqual(len(outcomes), 5)
        self.assertTrue(all(outcome["passed"] for outcome in outcomes))

    def test_usage_errors(self):
        for argv in (("norm-curve", "--word", "H:0"),
                     ("norm-curve", "--word", "H:1", "--lambda", "1.0"),
                     ("norm-curve", "--word", "H:1", "--grid", "1"),
                     ("certify", "--theta", "1.0", "--N", "0"),
                     ("measure", "--delta", "1.5"),
                     ("measure", "--bogus"),
                     ()):
            code, output = self.run_cli(*argv)

            self.assertEqual(code, Cli.EXIT_USAGE, argv)
            self.assertEqual(output, "", argv)

    def test_numeric_guards(self):
        code, _ = self.run_cli("measure", "--lambda", "1.0000000000000002", "--delta", "0.99", "--epsilon", "0.9")
        self.assertEqual(code, Cli.EXIT_NUMERIC_GUARD)

        code, _ = self.run_cli("norm-curve", "--word", "H:41", "--real", "--grid", "4")
        self.assertEqual(code, Cli.EXIT_NUMERIC_GUARD)


if __name__ == '__main__':
    unittest.main()

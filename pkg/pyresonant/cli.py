"""
Module that contains our Cli class, the command-line surface of the package.

Subcommands:
    norm-curve   CSV theta,log_norm for one word (model case, or real case with --real)
    fmin         CSV theta,log_f_n,resonant_flag,witness over a θ-grid
    measure      JSON measure bracket for the resonant set
    certify      JSON resonance certificate for one angle
    compare      CSV theta,log_norm_a,log_norm_b for two words (or a JSON summary)
    verify       runs the oracle suite; exit code 1 on any failure
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from pyresonant.closed_form_helper import ClosedFormHelper
from pyresonant.core import Core
from pyresonant.minimizer import Minimizer
from pyresonant.oracle_suite import OracleSuite
from pyresonant.output_writer import OutputWriter
from pyresonant.real_case_helper import RealCaseHelper
from pyresonant.resonance_helper import ResonanceHelper
from pyresonant.run_config import RunConfig
from pyresonant.word import Word
from pyresonant.word_helper import WordHelper
from pyresonant.word_parser import WordParser


class Cli:
    """A class that parses the command line and dispatches to the subcommands."""

    # Class variables
    EXIT_OK: int = 0
    """Exit code on success"""

    EXIT_CHECK_FAILED: int = 1
    """Exit code when `verify` finds a failing check"""

    EXIT_USAGE: int = 2
    """Exit code for invalid flags or arguments"""

    EXIT_NUMERIC_GUARD: int = 3
    """Exit code when a numeric guard is violated"""

    _LOG_LEVELS: tuple[int, ...] = (logging.WARNING, logging.INFO, logging.DEBUG)
    """Log levels selected by repeating -v"""

    def __init__(self):
        """Initialises an instance of this class."""

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

        self._word_helper = WordHelper()
        """The `WordHelper` instance for this class instance"""

        self._closed_form_helper = ClosedFormHelper(self._word_helper)
        """The `ClosedFormHelper` instance for this class instance"""

        self._real_case_helper = RealCaseHelper(self._word_helper, self._closed_form_helper)
        """The `RealCaseHelper` instance for this class instance"""

        self._word_parser = WordParser()
        """The `WordParser` instance for this class instance"""

        self._parser = self.build_parser()
        """The argument parser for this class instance"""

    def build_parser(self) -> argparse.ArgumentParser:
        """Builds the argument parser with one sub-parser per subcommand."""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--lambda", dest="lambda_", type=float, default=2.0, help="growth factor λ > 1 (default 2)")
        common.add_argument("--delta", type=float, default=0.5, help="exponent δ in (0, 1) (default 0.5)")
        common.add_argument("--epsilon", type=float, default=0.5, help="rotation budget fraction ε in (0, 1) (default 0.5)")
        common.add_argument("--out", type=str, default="-", help="output path, '-' for stdout (default)")
        common.add_argument("-v", "--verbose", action="count", default=0, help="log more (repeat for debug)")

        parser = argparse.ArgumentParser(prog="pyresonant",
                                         description="Norm growth of words in h = diag(λ, 0) and rotations, and the resonant set.")
        sub = parser.add_subparsers(dest="command", required=True)

        curve = sub.add_parser("norm-curve", parents=[common], help="log norm of a word over a θ-grid (CSV)")
        curve.add_argument("--word", required=True, help="word spec, e.g. 'H:5,R:2,H:5,R:3,H:5'")
        curve.add_argument("--grid", type=int, default=2048)
        curve.add_argument("--real", action="store_true", help="use H = diag(λ, 1/λ) instead of h")
        curve.set_defaults(func=self.cmd_norm_curve)

        fmin = sub.add_parser("fmin", parents=[common], help="f_n over a θ-grid with resonance flags (CSV)")
        fmin.add_argument("--n", type=int, required=True)
        fmin.add_argument("--grid", type=int, default=2048)
        fmin.set_defaults(func=self.cmd_fmin)

        measure = sub.add_parser("measure", parents=[common], help="measure bracket for the resonant set (JSON)")
        measure.add_argument("--A", type=int, default=ResonanceHelper.DEFAULT_TRUNCATION)
        measure.set_defaults(func=self.cmd_measure)

        certify = sub.add_parser("certify", parents=[common], help="certify one angle (JSON)")
        certify.add_argument("--theta", type=float, required=True)
        certify.add_argument("--N", type=int, default=None, help="horizon (default ceil(10/ε))")
        certify.set_defaults(func=self.cmd_certify)

        compare = sub.add_parser("compare", parents=[common], help="two norm curves on one grid (CSV)")
        compare.add_argument("--word-a", required=True)
        compare.add_argument("--word-b", required=True)
        compare.add_argument("--real-a", action="store_true", help="evaluate word A with H")
        compare.add_argument("--real-b", action="store_true", help="evaluate word B with H")
        compare.add_argument("--grid", type=int, default=2048)
        compare.add_argument("--summary", action="store_true", help="emit a JSON summary instead of the CSV")
        compare.set_defaults(func=self.cmd_compare)

        verify = sub.add_parser("verify", parents=[common], help="run the oracle-equivalence suite")
        verify.add_argument("--quick", action="store_true", help="reduced sweeps")
        verify.add_argument("--seed", type=int, default=0, help="seed for the pseudo-random angles (default 0)")
        verify.set_defaults(func=self.cmd_verify)

        return parser

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Parses the arguments and runs the chosen subcommand.

        Args:
            argv (Sequence[str], optional): The arguments, without the program name. Defaults to sys.argv.

        Returns:
            int: The exit code.
        """
        try:
            args = self._parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)

        logging.basicConfig(level=self._LOG_LEVELS[min(args.verbose, len(self._LOG_LEVELS) - 1)],
                            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
                            stream=sys.stderr)

        try:
            config = RunConfig.from_namespace(args, self._word_parser)
            self._check_options(config)
        except (Core.ArgumentException, WordParser.WordParseException) as exc:
            self._parser.print_usage(sys.stderr)
            print(f"pyresonant: error: {exc}", file=sys.stderr)
            return self.EXIT_USAGE

        self._logger.info("Running '%s' with %s", config.command, config.params)

        try:
            return args.func(config)
        except Core.ArgumentException as exc:
            print(f"pyresonant: error: {exc}", file=sys.stderr)
            return self.EXIT_USAGE
        except (Core.ScaleGuardException, ResonanceHelper.TrivialBoundException) as exc:
            print(f"pyresonant: numeric guard: {exc}", file=sys.stderr)
            return self.EXIT_NUMERIC_GUARD

    def cmd_norm_curve(self, config: RunConfig) -> int:
        """CSV theta,log_norm of one word, model or real."""
        thetas = self._real_case_helper.theta_grid(config.grid)
        log_norms = self._curve(config.word, config.real, thetas, config.params.lambda_)

        OutputWriter(config.out).write_csv(["theta", "log_norm"], zip(map(float, thetas), log_norms))

        return self.EXIT_OK

    def cmd_fmin(self, config: RunConfig) -> int:
        """CSV theta,log_f_n,resonant_flag,witness over the grid; the witness is the rotation profile, space separated."""
        minimizer = Minimizer(config.params, self._closed_form_helper)
        thetas = self._real_case_helper.theta_grid(config.grid)
        log_threshold = config.params.resonance_log_threshold(config.n)

        rows = []
        for theta, result in zip(thetas, minimizer.f_n_grid(map(float, thetas), config.n)):
            rows.append([float(theta),
                         result.log_f_n.log_value,
                         1 if result.log_f_n.log_value < log_threshold else 0,
                         " ".join(str(part) for part in result.witness_profile)])

        OutputWriter(config.out).write_csv(["theta", "log_f_n", "resonant_flag", "witness"], rows)

        return self.EXIT_OK

    def cmd_measure(self, config: RunConfig) -> int:
        """JSON measure bracket with the approximations alongside."""
        bracket = ResonanceHelper(config.params).resonant_measure_bracket(config.truncation)

        OutputWriter(config.out).write_json({
            "lambda": config.params.lambda_,
            "delta": config.params.delta,
            "epsilon": config.params.epsilon,
            "A": bracket.truncation,
            "lower": bracket.lower,
            "upper": bracket.upper,
            "tail": bracket.tail,
            "truncated_sum": bracket.truncated_sum,
            "paper_asymptotic": bracket.asymptotic,
            "geometric_sum": bracket.geometric_sum,
        })

        return self.EXIT_OK

    def cmd_certify(self, config: RunConfig) -> int:
        """JSON certificate for one angle."""
        certificate = ResonanceHelper(config.params).certify(config.theta, config.horizon)

        OutputWriter(config.out).write_json(certificate.to_dict())

        return self.EXIT_OK

    def cmd_compare(self, config: RunConfig) -> int:
        """CSV theta,log_norm_a,log_norm_b, or with --summary a JSON summary of both curves."""
        lambda_ = config.params.lambda_
        thetas = self._real_case_helper.theta_grid(config.grid)
        curve_a = self._curve(config.word, config.real, thetas, lambda_)
        curve_b = self._curve(config.word_b, config.real_b, thetas, lambda_)

        if not config.summary:
            OutputWriter(config.out).write_csv(["theta", "log_norm_a", "log_norm_b"], zip(map(float, thetas), curve_a, curve_b))
            return self.EXIT_OK

        zeros = []
        for word, real in ((config.word, config.real), (config.word_b, config.real_b)):
            if not real:
                zeros.extend(self._closed_form_helper.zero_angles(word))

        statistics = {}
        for label, word, curve in (("a", config.word, curve_a), ("b", config.word_b, curve_b)):
            stats = self._real_case_helper.curve_statistics(thetas, curve, word.h_total, config.params)
            statistics[label] = {
                "word": self._word_parser.format_word(word),
                "min_log_norm": stats.min_log_norm,
                "argmin_theta": stats.argmin_theta,
                "resonant_fraction": stats.resonant_fraction,
                "dip_width": stats.dip_width,
            }

        max_ratio = self._real_case_helper.masked_max_log10_ratio(thetas, curve_a, curve_b, zeros)

        OutputWriter(config.out).write_json({
            "grid": config.grid,
            "max_abs_log10_ratio": max_ratio,
            "nearly_identical": max_ratio <= RealCaseHelper.NEAR_IDENTITY_THRESHOLD,
            "curves": statistics,
        })

        return self.EXIT_OK

    def cmd_verify(self, config: RunConfig) -> int:
        """Runs the oracle suite and writes the outcomes as JSON."""
        outcomes = OracleSuite(quick=config.quick, seed=config.seed).run()

        OutputWriter(config.out).write_json([
            {"name": outcome.name, "passed": outcome.passed, "cases": outcome.cases, "detail": outcome.detail}
            for outcome in outcomes
        ])

        return self.EXIT_OK if all(outcome.passed for outcome in outcomes) else self.EXIT_CHECK_FAILED

    def _curve(self, word: Word, real: bool, thetas, lambda_: float) -> list[float]:
        if real:
            return self._real_case_helper.real_log_norms(word, thetas, lambda_)

        return [value.log_value for value in self._real_case_helper.model_log_norms(word, thetas, lambda_)]

    def _check_options(self, config: RunConfig):
        if config.grid is not None and config.grid < 2:
            raise Core.ArgumentException("--grid", "The option '{name}' must be at least 2.")
        for name, value in (("--N", config.horizon), ("--A", config.truncation), ("--n", config.n)):
            if value is not None and value < 1:
                raise Core.ArgumentException(name, "The option '{name}' must be a positive integer.")


def main():
    """Entry point for the `pyresonant` console script."""
    sys.exit(Cli().run())

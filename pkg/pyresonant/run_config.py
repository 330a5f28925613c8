"""
Module that contains our RunConfig class.
"""
import argparse
from dataclasses import dataclass
from typing import Optional

from pyresonant.params import Params
from pyresonant.word import Word
from pyresonant.word_parser import WordParser


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs, validated: the parameters and the subcommand's options.

    Built from the parsed command line by `from_namespace`; options a subcommand does not take
    are left at None.
    """

    command: str
    """The subcommand name"""

    params: Params
    """The validated model parameters"""

    out: str = "-"
    """Where to write the output; '-' for stdout"""

    grid: Optional[int] = None
    """The number of θ-grid points"""

    horizon: Optional[int] = None
    """N, the certification horizon"""

    truncation: Optional[int] = None
    """A, the number of sublevel sets in a bracket"""

    n: Optional[int] = None
    """The word length for fmin"""

    theta: Optional[float] = None
    """The angle to certify"""

    word: Optional[Word] = None
    """The word for norm-curve, or word A for compare"""

    word_b: Optional[Word] = None
    """Word B for compare"""

    real: bool = False
    """Evaluate the (first) word with the real H instead of h"""

    real_b: bool = False
    """Evaluate word B with the real H instead of h"""

    summary: bool = False
    """Emit a JSON summary instead of CSV (compare)"""

    quick: bool = False
    """Run the reduced oracle suite (verify)"""

    seed: int = 0
    """The seed for the oracle suite's pseudo-random angles (verify)"""

    @classmethod
    def from_namespace(cls, args: argparse.Namespace, word_parser: WordParser = None) -> "RunConfig":
        """Builds a run configuration from parsed arguments, validating the parameters and parsing words.

        Args:
            args (argparse.Namespace): The parsed command line.
            word_parser (WordParser, optional): The parser for word specifications. Defaults to a new one.

        Returns:
            RunConfig: The configuration.

        Raises:
            Core.ArgumentException: When the parameters are out of range.
            WordParser.WordParseException: When a word specification is malformed.
        """
        word_parser = word_parser or WordParser()
        params = Params(args.lambda_, args.delta, args.epsilon)

        word_spec = getattr(args, "word", None) or getattr(args, "word_a", None)
        word_b_spec = getattr(args, "word_b", None)

        horizon = getattr(args, "N", None)
        if args.command == "certify" and horizon is None:
            horizon = params.default_horizon()

        return cls(command=args.command,
                   params=params,
                   out=args.out,
                   grid=getattr(args, "grid", None),
                   horizon=horizon,
                   truncation=getattr(args, "A", None),
                   n=getattr(args, "n", None),
                   theta=getattr(args, "theta", None),
                   word=word_parser.parse_word(word_spec) if word_spec is not None else None,
                   word_b=word_parser.parse_word(word_b_spec) if word_b_spec is not None else None,
                   real=getattr(args, "real", False) or getattr(args, "real_a", False),
                   real_b=getattr(args, "real_b", False),
                   summary=getattr(args, "summary", False),
                   quick=getattr(args, "quick", False),
                   seed=getattr(args, "seed", 0))

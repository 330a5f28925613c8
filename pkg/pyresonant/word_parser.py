"""
Module that contains our WordParser class.
"""
import logging
import re

from pyresonant.word import Word


class WordParser:
    """A class to parse and format word specifications such as "H:5,R:2,H:9,R:3,H:1".

    Grammar: block (',' block)*, with block = ('H' | 'R') ':' positive-integer.
    Whitespace around blocks is ignored. Parsed words are canonical, so "H:2,H:3" gives [H:5].
    """

    # Class variables
    _BLOCK_PATTERN = re.compile(r"\s*([HR]):([0-9]+)\s*")
    """Matches a single block, capturing its kind and exponent"""

    def __init__(self):
        """Initialises an instance of this class."""

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

    def parse_word(self, spec: str) -> Word:
        """Parses a word specification into a canonical word.

        Args:
            spec (str): The specification, e.g. "H:5,R:2,H:9,R:3,H:1".

        Returns:
            Word: The canonical word.

        Raises:
            WordParser.WordParseException: On an empty spec, a malformed block or a zero exponent.
        """
        if not spec or not spec.strip():
            raise WordParser.WordParseException(spec, 0, "the specification is empty")

        blocks = []
        position = 0

        for token in spec.split(","):
            match = self._BLOCK_PATTERN.fullmatch(token)
            if match is None:
                raise WordParser.WordParseException(spec, position, f"expected 'H:<n>' or 'R:<n>' but found '{token}'")

            exponent = int(match.group(2))
            if exponent == 0:
                raise WordParser.WordParseException(spec, position + match.start(2), "exponents must be positive")

            blocks.append((match.group(1), exponent))
            position += len(token) + 1

        word = Word(blocks)
        self._logger.debug("Parsed '%s' as %s", spec, word)

        return word

    def format_word(self, word: Word) -> str:
        """Formats a word as a specification string; the inverse of `parse_word` on canonical words.

        Args:
            word (Word): The word.

        Returns:
            str: The specification, e.g. "H:5,R:2,H:9,R:3,H:1".
        """
        return ",".join(f"{block.kind.value}:{block.exponent}" for block in word)

    class WordParseException(Exception):
        """Exception class thrown when a word specification cannot be parsed."""

        def __init__(self, spec: str, position: int, reason: str, message: str = "Cannot parse word '{spec}' at position {position}: {reason}."):
            """Initialises an instance of this exception

            Args:
                spec (str): The specification being parsed.
                position (int): The 0-based character position of the problem.
                reason (str): What was wrong.
                message (str, optional): The exception message. Must contain 'spec', 'position' and 'reason' format inserts.
            """
            self.message = message
            self.position = position
            self._spec = spec
            self._reason = reason

            super().__init__(self.message)

        def __str__(self):
            """Returns a string representation of this exception"""
            return self.message.format(spec=self._spec, position=self.position, reason=self._reason)

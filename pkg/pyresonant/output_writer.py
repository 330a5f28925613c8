"""
Module that contains our OutputWriter class.
"""
import csv
import json
import logging
import math
import sys
from contextlib import contextmanager
from typing import Any, Iterable, Iterator, TextIO


class OutputWriter:
    """A class to write CSV and JSON results to stdout or a file.

    Floats are written with 17 significant digits so they round-trip, and -inf (a zero
    magnitude in the log domain) is written as the literal string '-inf'.
    """

    def __init__(self, out: str = "-"):
        """Initialises an instance of this class.

        Args:
            out (str, optional): The output path, or '-' for stdout. Defaults to '-'.
        """

        # Instance variables
        self._logger = logging.getLogger(__name__)
        """The Logger instance for this class instance"""

        self._out = out
        """The output path, or '-' for stdout"""

    @staticmethod
    def format_float(value: float) -> str:
        """Formats a float losslessly, with infinities as '-inf' / 'inf'.

        Args:
            value (float): The value.

        Returns:
            str: The text.
        """
        if value == -math.inf:
            return "-inf"
        if value == math.inf:
            return "inf"

        return format(value, ".17g")

    def write_csv(self, header: list[str], rows: Iterable[Iterable[Any]]) -> int:
        """Writes a header row and data rows; floats are formatted with `format_float`.

        Args:
            header (list[str]): The column names.
            rows (Iterable[Iterable[Any]]): The rows.

        Returns:
            int: The number of data rows written.
        """
        count = 0

        with self._open() as stream:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(header)

            for row in rows:
                writer.writerow([self.format_float(cell) if isinstance(cell, float) else cell for cell in row])
                count += 1

        self._logger.info("Wrote %s CSV rows to %s", count, self._describe())

        return count

    def write_json(self, document: Any):
        """Writes a JSON document, replacing infinities with strings.

        Args:
            document (Any): The document (dicts, lists, numbers, strings).
        """
        with self._open() as stream:
            json.dump(self._sanitise(document), stream, indent=2, sort_keys=False)
            stream.write("\n")

        self._logger.info("Wrote JSON to %s", self._describe())

    def _sanitise(self, value: Any) -> Any:
        if isinstance(value, float) and math.isinf(value):
            return self.format_float(value)
        if isinstance(value, dict):
            return {key: self._sanitise(item) for key, item in value.items()}
        if isinstance(value, (list, tuple)):
            return [self._sanitise(item) for item in value]

        return value

    @contextmanager
    def _open(self) -> Iterator[TextIO]:
        if self._out == "-":
            yield sys.stdout
            sys.stdout.flush()
            return

        with open(self._out, "w", encoding="utf-8", newline="") as stream:
            yield stream

    def _describe(self) -> str:
        return "stdout" if self._out == "-" else f"'{self._out}'"

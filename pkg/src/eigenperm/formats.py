"""Text formats for sequences.

Sequence files hold one coefficient per line, starting at index 1.  A
line is an integer or a ``p/q`` rational; blank lines and lines starting
with ``#`` are ignored.
"""
from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Union

from .errors import ParseError

_COEFF = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_sequence(text: str) -> List[Fraction]:
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not _COEFF.match(line):
            raise ParseError(f"line {lineno}: {raw!r} is not an integer or p/q rational")
        try:
            values.append(Fraction(line))
        except ZeroDivisionError:
            raise ParseError(f"line {lineno}: zero denominator") from None
    return values


def read_sequence(path: Union[str, Path]) -> List[Fraction]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_sequence(text)


def coefficient_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def dumps_sequence_file(values: Iterable) -> str:
    return "".join(coefficient_str(v) + "\n" for v in values)


def write_sequence(path: Union[str, Path], values: Iterable) -> None:
    Path(path).write_text(dumps_sequence_file(values), encoding="utf-8")


def render_sequence(values: Iterable, fmt: str = "text") -> str:
    """Render for display: ``text`` (space separated), ``json`` or ``csv``.

    JSON uses numbers for integers and ``"p/q"`` strings otherwise.
    """
    values = [Fraction(v) for v in values]
    if fmt == "text":
        return " ".join(coefficient_str(v) for v in values)
    if fmt == "json":
        return json.dumps([v.numerator if v.denominator == 1 else coefficient_str(v) for v in values])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "value"])
        for i, v in enumerate(values, start=1):
            writer.writerow([i, coefficient_str(v)])
        return buf.getvalue().rstrip("\n")
    raise ValueError(f"unknown format {fmt!r}")


def parse_rendered_json(text: str) -> List[Fraction]:
    return [Fraction(v) for v in json.loads(text)]

"""
Text formats.

Scheme v1:      "ASCH v1" / "n=<int> d=<int>" / n rows of n relation indices
Partition v1:   "PART v1" / "n=<int> f=<int>" / n block labels, one per line
Rational matrix: one row per line, entries "a" or "a/b" (lowest terms, b > 0)
"""

import re
from math import gcd
from pathlib import Path
from typing import List, Union

import numpy as np
from pydantic import ValidationError
from sympy import ImmutableMatrix, Rational

from .exceptions import FormatError, InputError
from ..models.code import GoldCode
from ..models.matrix import RationalMatrix
from ..models.scheme import PointPartition, RelationPartition, relation_dtype

PathLike = Union[str, Path]

_SCHEME_HEADER = "ASCH v1"
_PARTITION_HEADER = "PART v1"
_SIZE_LINE = re.compile(r"^n=(\d+) (d|f)=(\d+)$")
_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise InputError(f"cannot read {path}", {"reason": error.strerror})


def _lines(text: str) -> List[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _header(lines: List[str], expected: str, key: str):
    if not lines or lines[0].strip() != expected:
        raise FormatError(f"expected header '{expected}'", line=1, column=1)
    if len(lines) < 2:
        raise FormatError(f"missing 'n=<int> {key}=<int>' line", line=2, column=1)
    match = _SIZE_LINE.match(lines[1].strip())
    if not match or match.group(2) != key:
        raise FormatError(f"expected 'n=<int> {key}=<int>'", line=2, column=1)
    return int(match.group(1)), int(match.group(3))


def _integer(token: str, line: int, column: int, low: int, high: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"'{token}' is not an integer", line=line, column=column)
    if value < low or value > high:
        raise FormatError(f"{value} outside [{low}, {high}]", line=line, column=column)
    return value


# --- scheme format ------------------------------------------------------------

def parse_scheme(text: str) -> RelationPartition:
    lines = _lines(text)
    n, d = _header(lines, _SCHEME_HEADER, "d")
    if len(lines) - 2 != n:
        raise FormatError(f"expected {n} rows, found {len(lines) - 2}", line=min(len(lines), n + 2) + 1, column=1)

    table = np.empty((n, n), dtype=relation_dtype(d))
    for x in range(n):
        number = x + 3
        tokens = lines[number - 1].split()
        if len(tokens) != n:
            raise FormatError(f"expected {n} entries, found {len(tokens)}", line=number, column=len(tokens) + 1)
        try:
            row = np.array(tokens, dtype=np.int64)
        except ValueError:
            row = None
        if row is None or row.min() < 0 or row.max() > d:
            for y, token in enumerate(tokens):
                _integer(token, number, y + 1, 0, d)
        table[x] = row

    try:
        return RelationPartition(n=n, d=d, rel=table)
    except ValidationError as error:
        raise InputError("invalid relation partition", {"reason": error.errors()[0]["msg"]})


def format_scheme(rp: RelationPartition) -> str:
    rows = [_SCHEME_HEADER, f"n={rp.n} d={rp.d}"]
    rows.extend(" ".join(str(int(v)) for v in row) for row in rp.rel)
    return "\n".join(rows) + "\n"


def read_scheme(path: PathLike) -> RelationPartition:
    return parse_scheme(_read(path))


# --- partition format ---------------------------------------------------------

def parse_partition(text: str) -> PointPartition:
    lines = _lines(text)
    n, f = _header(lines, _PARTITION_HEADER, "f")
    if f < 1:
        raise FormatError("f must be positive", line=2, column=1)
    if len(lines) - 2 != n:
        raise FormatError(f"expected {n} labels, found {len(lines) - 2}", line=min(len(lines), n + 2) + 1, column=1)
    labels = [_integer(lines[x + 2].strip(), x + 3, 1, 0, f - 1) for x in range(n)]
    return PointPartition(n=n, f=f, blocks=labels)


def format_partition(partition: PointPartition) -> str:
    rows = [_PARTITION_HEADER, f"n={partition.n} f={partition.f}"]
    rows.extend(str(int(v)) for v in partition.blocks)
    return "\n".join(rows) + "\n"


def read_partition(path: PathLike) -> PointPartition:
    return parse_partition(_read(path))


# --- rational matrices --------------------------------------------------------

def parse_rational_matrix(text: str) -> RationalMatrix:
    rows = []
    for number, line in enumerate(_lines(text), start=1):
        tokens = line.split()
        if not tokens:
            raise FormatError("empty row", line=number, column=1)
        entries = []
        for column, token in enumerate(tokens, start=1):
            match = _RATIONAL.match(token)
            if not match:
                raise FormatError(f"'{token}' is not a rational", line=number, column=column)
            numerator = int(match.group(1))
            denominator = int(match.group(2) or 1)
            if denominator == 0 or (match.group(2) and (denominator == 1 or gcd(numerator, denominator) != 1)):
                raise FormatError(f"'{token}' is not in lowest terms", line=number, column=column)
            entries.append(Rational(numerator, denominator))
        if rows and len(entries) != len(rows[0]):
            raise FormatError(f"expected {len(rows[0])} entries", line=number, column=len(entries))
        rows.append(entries)
    if not rows:
        raise FormatError("empty matrix", line=1, column=1)
    return ImmutableMatrix(rows)


def format_rational_matrix(matrix: RationalMatrix) -> str:
    return "".join(" ".join(str(matrix[i, j]) for j in range(matrix.cols)) + "\n" for i in range(matrix.rows))


# --- codes and weighing matrices ----------------------------------------------

def format_codewords(code: GoldCode) -> str:
    """One codeword per line: its bits, then its RM(1,m)-coset label."""
    labels = code.coset_of
    return "".join(
        "".join("1" if bit else "0" for bit in word) + f" {int(label)}\n"
        for word, label in zip(code.words, labels)
    )


def format_weighing(W: np.ndarray, a: int, b: int, weight: int) -> str:
    rows = [f"W a={a} b={b} w={weight}"]
    rows.extend(" ".join(str(int(v)) for v in row) for row in W)
    return "\n".join(rows) + "\n"


def write_text(path: PathLike, text: str) -> Path:
    path = Path(path)
    path.write_text(text, encoding="utf-8", newline="\n")
    return path

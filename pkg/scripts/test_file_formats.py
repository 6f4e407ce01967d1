"""Scheme, partition and rational matrix text formats."""

import numpy as np
import pytest
from sympy import ImmutableMatrix, Rational

from asch.core.exceptions import FormatError, InputError
from asch.core.file_formats import (
    format_codewords,
    format_partition,
    format_rational_matrix,
    format_scheme,
    format_weighing,
    parse_partition,
    parse_rational_matrix,
    parse_scheme,
    read_scheme,
)
from asch.models.scheme import PointPartition, RelationPartition

K4_TEXT = "ASCH v1\nn=4 d=1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 0\n"


class TestSchemeFormat:
    def test_format(self, k4):
        assert format_scheme(k4) == K4_TEXT

    def test_parse(self, k4):
        parsed = parse_scheme(K4_TEXT)
        assert parsed.n == 4 and parsed.d == 1
        assert np.array_equal(parsed.rel, k4.rel)

    def test_bad_header(self):
        with pytest.raises(FormatError) as error:
            parse_scheme("SCHEME\nn=4 d=1\n")
        assert error.value.line == 1

    def test_bad_size_line(self):
        with pytest.raises(FormatError) as error:
            parse_scheme("ASCH v1\nn=4 f=1\n")
        assert error.value.line == 2

    def test_missing_row(self):
        with pytest.raises(FormatError):
            parse_scheme("ASCH v1\nn=4 d=1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n")

    def test_short_row(self):
        with pytest.raises(FormatError) as error:
            parse_scheme("ASCH v1\nn=2 d=1\n0 1\n1\n")
        assert error.value.line == 4

    def test_index_out_of_range(self):
        with pytest.raises(FormatError) as error:
            parse_scheme("ASCH v1\nn=2 d=1\n0 1\n2 0\n")
        assert (error.value.line, error.value.column) == (4, 1)

    def test_not_an_integer(self):
        with pytest.raises(FormatError) as error:
            parse_scheme("ASCH v1\nn=2 d=1\n0 x\n1 0\n")
        assert (error.value.line, error.value.column) == (3, 2)

    def test_empty_relation(self):
        with pytest.raises(InputError):
            parse_scheme("ASCH v1\nn=2 d=2\n0 1\n1 0\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            read_scheme(tmp_path / "absent.asch")

    def test_many_relations(self):
        # symmetric cyclic scheme on Z_257 has 128 classes
        points = np.arange(257)
        gap = np.abs(points[:, None] - points[None, :])
        table = np.minimum(gap, 257 - gap)
        parsed = parse_scheme(format_scheme(RelationPartition(n=257, d=128, rel=table)))
        assert parsed.d == 128
        assert int(parsed.rel.max()) == 128
        assert parsed.rel.dtype == np.int16
        assert parse_scheme(K4_TEXT).rel.dtype == np.int8
        assert np.array_equal(parsed.rel, table)


class TestPartitionFormat:
    def test_format_and_parse(self):
        partition = PointPartition(n=4, f=2, blocks=[0, 0, 1, 1])
        text = format_partition(partition)
        assert text == "PART v1\nn=4 f=2\n0\n0\n1\n1\n"
        assert np.array_equal(parse_partition(text).blocks, [0, 0, 1, 1])

    def test_label_out_of_range(self):
        with pytest.raises(FormatError) as error:
            parse_partition("PART v1\nn=2 f=2\n0\n2\n")
        assert error.value.line == 4


class TestRationalMatrix:
    def test_parse(self):
        matrix = parse_rational_matrix("1 -1/2\n3/4 0\n")
        assert matrix == ImmutableMatrix([[1, Rational(-1, 2)], [Rational(3, 4), 0]])

    def test_format(self):
        matrix = ImmutableMatrix([[1, Rational(-1, 2)], [Rational(3, 4), 0]])
        assert format_rational_matrix(matrix) == "1 -1/2\n3/4 0\n"

    @pytest.mark.parametrize("token", ["2/4", "3/1", "1/0", "1/-2", "0.5"])
    def test_rejected_tokens(self, token):
        with pytest.raises(FormatError) as error:
            parse_rational_matrix(f"1 {token}\n")
        assert (error.value.line, error.value.column) == (1, 2)

    def test_ragged(self):
        with pytest.raises(FormatError) as error:
            parse_rational_matrix("1 2\n3\n")
        assert error.value.line == 2


class TestOutputFormats:
    def test_codewords(self, gold3):
        lines = format_codewords(gold3.code).splitlines()
        assert len(lines) == 128
        assert lines[0] == "00000000 0"
        assert lines[1] == "11111111 0"
        assert lines[-1].endswith(" 7")

    def test_weighing(self):
        W = np.array([[1, 0], [0, -1]], dtype=np.int8)
        assert format_weighing(W, 1, 0, 1) == "W a=1 b=0 w=1\n1 0\n0 -1\n"

"""Field arithmetic, the Gold code and its distance scheme."""

import numpy as np
import pytest

from asch.core.exceptions import EvenDegree, UnsupportedDegree
from asch.services.gold_code import (
    antipode,
    build_gold_code,
    field_ops,
    oa_strength,
    rm_coset_partition,
)
from asch.services.scheme_core import verify_axioms


class TestBinaryField:
    def test_trace_of_one_is_odd_degree_parity(self):
        field = field_ops(5)
        assert int(field.trace(1)) == 1

    def test_trace_is_linear_and_balanced(self):
        field = field_ops(3)
        x = field.elements()
        traces = field.trace(x)
        assert traces.sum() == 4
        for a in range(8):
            for b in range(8):
                assert int(field.trace(field.add(a, b))) == int(field.trace(a)) ^ int(field.trace(b))

    def test_multiplication_by_modulus(self):
        field = field_ops(3)
        # x^3 = x + 1
        assert int(field.mul(2, 4)) == 3
        assert int(field.cube(2)) == 3

    def test_cube_is_a_bijection_for_odd_degree(self):
        field = field_ops(5)
        cubes = field.cube(field.elements())
        assert len(set(int(c) for c in cubes)) == 32

    def test_even_degree(self):
        with pytest.raises(EvenDegree, match="m must be odd"):
            field_ops(4)

    @pytest.mark.parametrize("m", [1, 17])
    def test_out_of_range(self, m):
        with pytest.raises(UnsupportedDegree):
            field_ops(m)


class TestGoldCode:
    def test_parameters(self, gold3):
        code = gold3.code
        assert code.size == 128
        assert code.length == 8
        assert code.weight_counts == {0: 1, 2: 28, 4: 70, 6: 28, 8: 1}

    def test_codeword_encoding(self, gold3):
        code = gold3.code
        field = field_ops(3)
        x = field.elements()
        a, b, eps = 5, 3, 1
        expected = field.trace(field.GF(a) * x + field.GF(b) * x**3) ^ eps
        u = (b << 4) | (a << 1) | eps
        assert np.array_equal(code.words[u], expected)

    def test_even_degree_code(self):
        with pytest.raises(EvenDegree):
            build_gold_code(6)

    def test_degree_cap(self):
        with pytest.raises(UnsupportedDegree):
            build_gold_code(7)

    def test_distance_scheme(self, gold3):
        assert gold3.cert.k == (1, 28, 70, 28, 1)
        assert gold3.cert.d == 4

    def test_antipode_is_complement(self, gold3):
        code = gold3.code
        phi = antipode(code)
        assert np.array_equal(code.words[phi], 1 - code.words)

    def test_cosets(self, gold3):
        cosets = rm_coset_partition(gold3.code)
        assert cosets.f == 8
        assert np.array_equal(np.bincount(cosets.blocks), np.full(8, 16))
        assert list(cosets.members(0)) == list(range(16))

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_coset_label_of_a_sum(self, gold3, seed):
        code = gold3.code
        coset_of = rm_coset_partition(code).blocks
        rng = np.random.default_rng(seed)
        u, v = rng.integers(0, code.size, size=(2, 64))
        assert np.array_equal(coset_of[u ^ v], coset_of[u] ^ coset_of[v])
        assert np.array_equal(code.words[u ^ v], code.words[u] ^ code.words[v])
        # u and v share a coset exactly when u + v lies in RM(1, m)
        same = coset_of[u] == coset_of[v]
        assert np.array_equal(same, coset_of[u ^ v] == 0)

    def test_orthogonal_array_strength(self, gold3):
        report = oa_strength(gold3.code)
        assert report.degree == 4
        assert report.dual_distance == 8
        assert report.strength == 7
        assert report.hypothesis_holds


@pytest.mark.slow
class TestGoldFive:
    def test_weights(self, gold5):
        assert gold5.code.weight_counts == {0: 1, 12: 496, 16: 1054, 20: 496, 32: 1}

    def test_scheme(self, gold5):
        cert = verify_axioms(gold5.scheme)
        assert cert.k == (1, 496, 1054, 496, 1)

    def test_strength(self, gold5):
        assert oa_strength(gold5.code).strength == 5

"""Closed subsets, quotients and two-fold cover recognition."""

import numpy as np
import pytest
from sympy import Rational

from asch.core.exceptions import InputError, NotAFourClassCover, NotClosed
from asch.models.scheme import RelationPartition, SchemeCertificate
from asch.services.imprimitivity import (
    antipodal_action,
    check_cover_template,
    cover_q_template,
    dual_index_set,
    find_closed_subsets,
    quotient_scheme,
    recognize_cover,
)
from asch.services.scheme_core import verify_axioms

from test_spectra import GOLD3_Q


class TestClosedSubsets:
    def test_gold(self, gold3):
        assert find_closed_subsets(gold3.cert) == [(0,), (0, 4), (0, 1, 2, 3, 4)]

    def test_primitive_quotient(self, gold3):
        assert find_closed_subsets(gold3.profile.quotient.certificate) == [(0,), (0, 1, 2)]

    def test_fission(self, gold3):
        closed = find_closed_subsets(gold3.fission.cert5)
        assert (0, 4) in closed
        assert (0, 2, 4) in closed


class TestQuotient:
    def test_antipodal_quotient(self, gold3):
        structure = quotient_scheme(gold3.cert, (0, 4))
        assert structure.block_size == 2
        assert structure.block_count == 64
        assert structure.classes == ((0, 4), (1, 3), (2,))
        assert structure.certificate.k == (1, 28, 35)
        assert structure.quotient.n == 64 and structure.quotient.d == 2

    def test_blocks_follow_first_occurrence(self, gold3):
        blocks = quotient_scheme(gold3.cert, (0, 4)).block_map
        assert list(blocks[:6]) == [0, 0, 1, 1, 2, 2]

    def test_fission_quotient_by_antipodes(self, gold3):
        structure = quotient_scheme(gold3.fission.cert5, (0, 4))
        assert structure.quotient.n == 64
        assert structure.quotient.d == 3

    def test_fission_quotient_by_cliques(self, gold3):
        structure = quotient_scheme(gold3.fission.cert5, (0, 2, 4))
        assert structure.quotient.n == 8
        assert structure.quotient.d == 1
        assert structure.block_size == 16

    def test_not_closed(self, gold3):
        with pytest.raises(NotClosed):
            quotient_scheme(gold3.cert, (0, 2))

    def test_whole_index_set_is_rejected(self, k4):
        with pytest.raises(InputError) as error:
            quotient_scheme(verify_axioms(k4), (0, 1))
        assert error.value.witness["block_size"] == 4

    def test_whole_gold_index_set_is_rejected(self, gold3):
        assert find_closed_subsets(gold3.cert)[-1] == (0, 1, 2, 3, 4)
        with pytest.raises(InputError):
            quotient_scheme(gold3.cert, (0, 1, 2, 3, 4))

    def test_dual_index_set(self, gold3):
        assert dual_index_set(gold3.profile.spectrum, (0, 4)) == (0, 1, 2)


class TestCover:
    def test_parameters(self, gold3):
        profile = gold3.profile
        assert profile.arrangement == (0, 1, 2, 3, 4)
        assert (profile.m, profile.r, profile.s, profile.n) == (28, 4, -4, 64)
        assert (profile.m3, profile.m4) == (8, 56)
        assert (profile.alpha3, profile.alpha4) == (Rational(1, 2), Rational(-1, 14))
        assert profile.k == 28

    def test_identities(self, gold3):
        assert all(gold3.profile.identities().values())
        assert 8 * Rational(1, 2) + 56 * Rational(-1, 14) == 0

    def test_q_matches_template(self, gold3):
        assert gold3.profile.spectrum.Q == GOLD3_Q
        assert cover_q_template(gold3.profile) == GOLD3_Q
        assert check_cover_template(gold3.profile).ok

    def test_permuted_relations_are_rearranged(self, gold3):
        shuffled = gold3.scheme.relabel_relations([0, 3, 4, 1, 2])
        profile = recognize_cover(verify_axioms(shuffled))
        # antipodal relation is now 2 and the singleton class is 4
        assert profile.arrangement[2] == 4
        assert profile.arrangement[4] == 2
        assert {profile.arrangement[1], profile.arrangement[3]} == {1, 3}
        assert (profile.m, profile.r, profile.s, profile.n) == (28, 4, -4, 64)
        assert (profile.m3, profile.m4) == (8, 56)
        assert abs(profile.alpha3) == Rational(1, 2)
        assert check_cover_template(profile).ok

    def test_primitive_input(self, gold3):
        with pytest.raises(NotAFourClassCover):
            recognize_cover(gold3.profile.quotient.certificate)


class TestAntipodalAction:
    def test_complement_matching(self, gold3):
        assert np.array_equal(gold3.profile.phi, np.arange(128) ^ 1)
        report = antipodal_action(gold3.profile)
        assert report.ok

    def test_corrupted_relation_is_named(self, gold3):
        cert = gold3.profile.certificate
        rel = cert.partition.rel.copy()
        y = int(np.flatnonzero(rel[0] == 1)[0])
        rel[0, y] = rel[y, 0] = 3
        corrupted = SchemeCertificate(
            partition=RelationPartition(n=cert.n, d=4, rel=rel),
            p=cert.p,
            k=cert.k,
            adjacency=cert.adjacency,
        )
        report = antipodal_action(gold3.profile, corrupted)
        assert not report.ok
        assert 1 in report.failing_relations
        assert 3 in report.failing_relations
        assert 2 not in report.failing_relations


def test_quotient_eigenmatrix(gold3):
    P = gold3.profile.quotient_spectrum.P
    assert [tuple(P.row(j)) for j in range(3)] == [(1, 28, 35), (1, 4, -5), (1, -4, 3)]

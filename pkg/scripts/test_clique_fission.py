"""Clique bound, tight regularity, spreads, the fission and its reconciliation."""

import numpy as np
import pytest
from sympy import ImmutableMatrix, Rational

from asch.core.exceptions import (
    BlockNotClique,
    BlockNotTight,
    EmptySubset,
    NonNegativeTheta,
    NotTight,
)
from asch.models.scheme import PointPartition
from asch.services.clique_fission import (
    clique_profile,
    closed_form_valencies,
    delsarte_bound,
    detect_gold_degree,
    reconcile_fission_formulas,
    validate_spread,
    verify_tight_regularity,
)
from asch.services.spectra import reorder_spectrum, verify_duality

GOLD3_FISSION_Q = ImmutableMatrix(
    [
        [1, 28, 28, 8, 56, 7],
        [1, 4, -4, 4, -4, -1],
        [1, -4, -4, 0, 0, 7],
        [1, 4, -4, -4, 4, -1],
        [1, 28, 28, -8, -56, 7],
        [1, -4, 4, 0, 0, -1],
    ]
)


class TestCliqueBound:
    def test_bound(self, gold3):
        theta, bound = delsarte_bound(gold3.profile.spectrum)
        assert theta == -10
        assert bound == 16

    def test_non_negative_theta(self, gold3):
        swapped = reorder_spectrum(gold3.profile.spectrum, [0, 3, 2, 1, 4], range(5))
        with pytest.raises(NonNegativeTheta):
            delsarte_bound(swapped)

    def test_profile_of_a_coset(self, gold3):
        assert clique_profile(gold3.profile.certificate, range(16)) == (0, 2, 4)

    def test_empty_subset(self, gold3):
        with pytest.raises(EmptySubset):
            clique_profile(gold3.profile.certificate, [])


class TestTightRegularity:
    def test_constants(self, gold3):
        regularity = verify_tight_regularity(gold3.profile, range(16))
        assert regularity.constants == (3, 10, 3)
        assert regularity.quotient_constants == (3, 5)
        assert regularity.quotient_clique_size == 8
        assert regularity.quotient_bound == 8
        assert regularity.symmetric
        assert regularity.halving
        assert regularity.quotient_tight

    def test_every_coset(self, gold3):
        for b in range(1, 8):
            members = gold3.spread.members(b)
            assert verify_tight_regularity(gold3.profile, members).constants == (3, 10, 3)

    def test_wrong_profile(self, gold3):
        with pytest.raises(NotTight):
            verify_tight_regularity(gold3.profile, [0, 2])

    def test_too_small(self, gold3):
        with pytest.raises(NotTight):
            verify_tight_regularity(gold3.profile, range(8))


class TestSpread:
    def test_rm_cosets(self, gold3):
        assert gold3.spread.f == 8
        assert gold3.spread.bound == 16

    def test_half_cosets_are_not_tight(self, gold3):
        u = np.arange(128)
        halves = PointPartition(n=128, f=16, blocks=2 * (u >> 4) + ((u >> 1) & 1))
        with pytest.raises(BlockNotTight):
            validate_spread(gold3.profile, halves)

    def test_swapped_point_breaks_clique(self, gold3):
        blocks = np.arange(128) >> 4
        blocks[0], blocks[16] = blocks[16], blocks[0]
        with pytest.raises(BlockNotClique) as error:
            validate_spread(gold3.profile, PointPartition(n=128, f=8, blocks=blocks))
        assert error.value.witness["block"] == 0


class TestFission:
    def test_valencies(self, gold3):
        assert gold3.fission.cert5.k == (1, 28, 14, 28, 1, 56)

    def test_refines_r2(self, gold3):
        coarse = gold3.profile.certificate.partition.rel
        fine = gold3.fission.refined.rel
        assert np.array_equal(coarse == 2, (fine == 2) | (fine == 5))
        assert np.array_equal(fine[coarse != 2], coarse[coarse != 2])

    def test_spectrum(self, gold3):
        spectrum = gold3.fission.spectrum5
        assert spectrum.m == (1, 28, 28, 8, 56, 7)
        assert spectrum.Q == GOLD3_FISSION_Q
        assert spectrum.m[2] + spectrum.m[5] == gold3.profile.spectrum.m[2]
        assert verify_duality(spectrum).ok

    def test_inherited_columns(self, gold3):
        Q, C = gold3.fission.spectrum5.Q, gold3.profile.spectrum.Q
        for e in (0, 1, 3, 4):
            assert [Q[i, e] for i in range(5)] == [C[i, e] for i in range(5)]
            assert Q[5, e] == C[2, e]

    def test_p_lifted_rows(self, gold3):
        P = gold3.fission.spectrum5.P
        assert tuple(P.row(3)) == (1, 14, 0, -14, -1, 0)
        assert tuple(P.row(4)) == (1, -2, 0, 2, -1, 0)


class TestReconciliation:
    def test_detects_gold_degree(self, gold3):
        assert detect_gold_degree(gold3.profile) == 3

    def test_closed_form_q(self, gold3):
        item = gold3.fission.reconciliation.comparison("closed_form_q")
        assert item.matched
        assert item.row_order == (0, 1, 5, 3, 4, 2)
        assert item.relabeled

    def test_gold_example_q(self, gold3):
        item = gold3.fission.reconciliation.comparison("gold_example_q")
        assert item.row_order == (0, 1, 5, 3, 4, 2)
        assert [(cell.row, cell.col) for cell in item.diffs] == [(1, 2), (2, 2), (3, 2)]
        assert [(cell.computed, cell.closed_form) for cell in item.diffs] == [("-4", "-5"), ("4", "3"), ("-4", "-5")]

    def test_valencies(self, gold3):
        item = gold3.fission.reconciliation.comparison("closed_form_valencies")
        assert item.col_order == (0, 1, 2, 3, 4, 5)
        assert [(cell.col, cell.computed, cell.closed_form) for cell in item.diffs] == [
            (2, "14", "63"),
            (5, "56", "7"),
        ]

    def test_text(self, gold3):
        text = gold3.fission.reconciliation.to_text()
        assert text.startswith("RECONCILIATION v1\n")
        assert "CELL row=0 col=2 computed=14 paper=63" in text
        assert "CELL row=0 col=5 computed=56 paper=7" in text
        assert "NOTE gold example compared at m=3" in text

    def test_vanishing_denominator(self, gold3):
        degenerate = gold3.profile.model_copy(update={"s": Rational(0)})
        assert closed_form_valencies(degenerate)[2] is None
        report = reconcile_fission_formulas(gold3.fission, degenerate, example_degree=3)
        cells = report.comparison("closed_form_valencies").diffs
        assert any(cell.closed_form == "undefined" for cell in cells)


@pytest.mark.slow
class TestGoldFive:
    def test_bound(self, gold5):
        assert gold5.spread.bound == 64
        assert gold5.fission.cert5.k[2] + gold5.fission.cert5.k[5] == gold5.profile.certificate.k[2]


def test_fission_orthogonality(gold3):
    spectrum = gold3.fission.spectrum5
    Q = spectrum.Q
    for a in range(6):
        for b in range(6):
            total = sum(spectrum.k[i] * Q[i, a] * Q[i, b] for i in range(6))
            assert total == (128 * spectrum.m[a] if a == b else 0)
    assert [Q[i, 5] for i in range(6)] == [7, -1, 7, -1, 7, -1]

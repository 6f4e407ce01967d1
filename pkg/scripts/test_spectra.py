"""Eigenmatrices and duality identities."""

import pytest
from sympy import ImmutableMatrix, diag

from asch.core.exceptions import InputError
from asch.models.spectrum import Spectrum
from asch.services.scheme_core import verify_axioms
from asch.services.spectra import compute_spectrum, reorder_spectrum, verify_duality

GOLD3_Q = ImmutableMatrix(
    [
        [1, 28, 35, 8, 56],
        [1, 4, -5, 4, -4],
        [1, -4, 3, 0, 0],
        [1, 4, -5, -4, 4],
        [1, 28, 35, -8, -56],
    ]
)


def test_complete_graph(k4):
    spectrum = compute_spectrum(verify_axioms(k4))
    assert spectrum.P == ImmutableMatrix([[1, 3], [1, -1]])
    assert spectrum.Q == ImmutableMatrix([[1, 3], [1, -1]])
    assert spectrum.m == (1, 3)
    assert verify_duality(spectrum).ok


def test_gold_canonical_order(gold3):
    spectrum = gold3.spectrum
    assert spectrum.k == (1, 28, 70, 28, 1)
    assert spectrum.m == (1, 8, 28, 56, 35)
    assert spectrum.eigenvalue_tuple(0) == (1, 28, 70, 28, 1)


def test_gold_q_in_cover_order(gold3):
    arranged = reorder_spectrum(gold3.spectrum, [0, 2, 4, 1, 3], [0, 1, 2, 3, 4])
    assert arranged.Q == GOLD3_Q
    assert arranged.m == (1, 28, 35, 8, 56)


def test_gold_duality(gold3):
    report = verify_duality(gold3.profile.spectrum)
    assert report.ok
    assert len(report.checked) == 5
    Q = gold3.profile.spectrum.Q
    gram = Q.T * diag(*gold3.profile.spectrum.k) * Q
    assert gram[3, 4] == 0
    assert gram[1, 1] == 128 * 28


def test_quotient_spectrum(gold3):
    quotient = gold3.profile.quotient_spectrum
    assert quotient.Q == ImmutableMatrix([[1, 28, 35], [1, 4, -5], [1, -4, 3]])
    assert quotient.m == (1, 28, 35)


def test_perturbed_spectrum_is_reported(k4):
    spectrum = compute_spectrum(verify_axioms(k4))
    broken = Spectrum.model_construct(
        P=spectrum.P,
        Q=ImmutableMatrix([[1, 3], [1, 0]]),
        k=spectrum.k,
        m=spectrum.m,
        size_x=4,
    )
    report = verify_duality(broken)
    assert not report.ok
    assert (1, 1) in report.cells("Q_ij k_i = P_ji m_j")
    assert (1, 1) in report.cells("PQ = |X| I")


def test_spectrum_is_deterministic(gold3):
    again = compute_spectrum(verify_axioms(gold3.scheme))
    assert again.P == gold3.spectrum.P
    assert again.Q == gold3.spectrum.Q


def test_reorder_rejects_moving_identity(gold3):
    with pytest.raises(InputError):
        reorder_spectrum(gold3.spectrum, [1, 0, 2, 3, 4], [0, 1, 2, 3, 4])

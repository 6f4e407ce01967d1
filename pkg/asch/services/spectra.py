"""
Eigenmatrices of a certified scheme.

P comes from the joint eigenvectors of the intersection matrices, Q from the
exact inverse; the dual-eigenvalue formula is then used as an independent check.
"""

import logging
from typing import List, Sequence

from sympy import ImmutableMatrix, Integer, diag, eye

from ..core.exceptions import InputError, NonIntegralMultiplicity
from ..models.scheme import SchemeCertificate
from ..models.spectrum import CellViolation, DualityReport, Spectrum
from .exact_linalg import common_eigenbasis, rat_inverse
from .scheme_core import intersection_matrices

logger = logging.getLogger(__name__)


def compute_spectrum(cert: SchemeCertificate) -> Spectrum:
    """P and Q of a certified scheme, eigenspaces in canonical order."""
    pairs = common_eigenbasis(intersection_matrices(cert))
    P = ImmutableMatrix([list(values) for _, values in pairs])
    Q = ImmutableMatrix(cert.n * rat_inverse(P))

    multiplicities = []
    for j, entry in enumerate(Q.row(0)):
        if not entry.is_integer or entry <= 0:
            raise NonIntegralMultiplicity(
                "multiplicity is not a positive integer",
                {"eigenspace": j, "value": entry},
            )
        multiplicities.append(int(entry))

    spectrum = Spectrum(P=P, Q=Q, k=cert.k, m=tuple(multiplicities), size_x=cert.n)
    logger.info(f"[OK] Spectrum computed: multiplicities={multiplicities}")
    return spectrum


def _compare(report: DualityReport, identity: str, lhs, rhs) -> None:
    report.checked.append(identity)
    for row in range(lhs.rows):
        for col in range(lhs.cols):
            if lhs[row, col] != rhs[row, col]:
                report.violations.append(
                    CellViolation(
                        identity=identity,
                        row=row,
                        col=col,
                        lhs=str(lhs[row, col]),
                        rhs=str(rhs[row, col]),
                    )
                )


def verify_duality(spec: Spectrum) -> DualityReport:
    """Check the duality, orthogonality, inverse and multiplicity identities cell by cell."""
    P, Q = spec.P, spec.Q
    size = spec.d + 1
    size_x = Integer(spec.size_x)
    delta_k = diag(*spec.k)
    delta_m = diag(*spec.m)

    report = DualityReport()

    # Q_{ij} k_i = P_{ji} m_j
    _compare(report, "Q_ij k_i = P_ji m_j", delta_k * Q, P.T * delta_m)
    _compare(report, "Q^T D_k Q = |X| D_m", Q.T * delta_k * Q, size_x * delta_m)
    _compare(report, "PQ = |X| I", P * Q, size_x * eye(size))
    _compare(report, "QP = |X| I", Q * P, size_x * eye(size))

    # second route to the multiplicities
    recomputed = []
    for j in range(size):
        norm = sum(P[j, i] ** 2 / Integer(spec.k[i]) for i in range(size))
        recomputed.append(size_x / norm if norm != 0 else Integer(0))
    _compare(
        report,
        "m_j = |X| / sum_i P_ji^2 / k_i",
        ImmutableMatrix([list(spec.m)]),
        ImmutableMatrix([recomputed]),
    )

    if report.ok:
        logger.info(f"[OK] Duality identities hold ({len(report.checked)} identities)")
    else:
        logger.warning(f"[WARNING] {len(report.violations)} duality cells violated")
    return report


def _check_order(order: Sequence[int], size: int, name: str) -> List[int]:
    order = [int(v) for v in order]
    if sorted(order) != list(range(size)) or order[0] != 0:
        raise InputError(f"{name} must be a permutation of 0..{size - 1} fixing 0", {name: order})
    return order


def reorder_spectrum(spec: Spectrum, eigen_order: Sequence[int], relation_order: Sequence[int]) -> Spectrum:
    """New eigenspace j is old eigen_order[j]; new relation i is old relation_order[i]."""
    size = spec.d + 1
    eigen_order = _check_order(eigen_order, size, "eigen_order")
    relation_order = _check_order(relation_order, size, "relation_order")
    return Spectrum(
        P=spec.P.extract(eigen_order, relation_order),
        Q=spec.Q.extract(relation_order, eigen_order),
        k=tuple(spec.k[i] for i in relation_order),
        m=tuple(spec.m[j] for j in eigen_order),
        size_x=spec.size_x,
    )

"""
Imprimitivity and Two-Fold Covers

- closed relation subsets and the block systems they induce
- quotient schemes on the blocks
- recognition of 4-class two-fold covers of strongly regular graphs,
  rearranged so that R_4 has valency one and the index classes read
  {0,4}, {1,3}, {2}
- the antipodal bijection carried by R_4 and the cover's Q template
"""

import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from sympy import ImmutableMatrix, Integer, Rational

from ..core.exceptions import (
    ArrangementImpossible,
    InputError,
    NotAFourClassCover,
    NotClosed,
    UnequalBlocks,
)
from ..models.cover import AntipodalReport, CoverProfile, CoverTemplateReport, QuotientStructure
from ..models.matrix import RationalMatrix
from ..models.scheme import RelationPartition, SchemeCertificate
from ..models.spectrum import CellViolation, Spectrum
from .scheme_core import verify_axioms
from .spectra import compute_spectrum, reorder_spectrum

logger = logging.getLogger(__name__)


def _closure_witness(cert: SchemeCertificate, index_set: Sequence[int]) -> Optional[Tuple[int, int, int]]:
    members = set(index_set)
    for i in index_set:
        for j in index_set:
            for k in np.flatnonzero(cert.p[i, j]):
                if int(k) not in members:
                    return (int(i), int(j), int(k))
    return None


def find_closed_subsets(cert: SchemeCertificate) -> List[Tuple[int, ...]]:
    """All I containing 0 whose union of relations is an equivalence relation."""
    others = range(1, cert.d + 1)
    closed = []
    for size in range(cert.d + 1):
        for extra in combinations(others, size):
            candidate = (0,) + extra
            if _closure_witness(cert, candidate) is None:
                closed.append(candidate)
    logger.info(f"[INFO] Closed subsets: {closed}")
    return closed


def _index_classes(cert: SchemeCertificate, index_set: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Classes of j ~ k iff p_{i,j}^k != 0 for some i in I, ordered by smallest member."""
    linked = (cert.p[list(index_set)] != 0).any(axis=0)
    count, labels = connected_components(csr_matrix(linked), directed=False)
    classes = [tuple(int(v) for v in np.flatnonzero(labels == c)) for c in range(count)]
    return tuple(sorted(classes, key=lambda members: members[0]))


def _first_occurrence_labels(labels: np.ndarray) -> np.ndarray:
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    renumber = np.empty_like(order)
    renumber[order] = np.arange(order.size)
    return renumber[labels]


def quotient_scheme(cert: SchemeCertificate, index_set: Sequence[int]) -> QuotientStructure:
    """Blocks of the closed subset I and the certified scheme they induce."""
    index_set = tuple(sorted({int(i) for i in index_set} | {0}))
    witness = _closure_witness(cert, index_set)
    if witness is not None:
        i, j, k = witness
        raise NotClosed("index set is not closed", {"index_set": index_set, "i": i, "j": j, "k": k})

    rel = cert.partition.rel
    inside = np.isin(rel, index_set)
    _, labels = connected_components(csr_matrix(inside), directed=False)
    blocks = _first_occurrence_labels(labels)

    sizes = np.bincount(blocks)
    if sizes.min() != sizes.max():
        small = int(np.argmin(sizes))
        raise UnequalBlocks(
            "blocks have different sizes",
            {"block": small, "size": int(sizes[small]), "expected": int(sizes.max())},
        )
    if not np.array_equal(blocks[:, None] == blocks[None, :], inside):
        x, y = (int(v) for v in np.argwhere((blocks[:, None] == blocks[None, :]) != inside)[0])
        raise NotClosed("relations in I are not an equivalence relation", {"x": x, "y": y})
    if sizes.size == 1:
        raise InputError(
            "index set joins every point into one block",
            {"index_set": index_set, "block_size": int(sizes[0])},
        )

    classes = _index_classes(cert, index_set)
    class_of = np.zeros(cert.d + 1, dtype=np.int64)
    for position, members in enumerate(classes):
        class_of[list(members)] = position

    block_count = int(sizes.size)
    reps = np.array([int(np.argmax(blocks == b)) for b in range(block_count)])
    quotient_rel = class_of[rel[np.ix_(reps, reps)]]
    mismatch = class_of[rel] != quotient_rel[np.ix_(blocks, blocks)]
    if mismatch.any():
        x, y = (int(v) for v in np.argwhere(mismatch)[0])
        raise NotClosed("relation classes are not constant between blocks", {"x": x, "y": y})

    quotient = RelationPartition(n=block_count, d=len(classes) - 1, rel=quotient_rel)
    certificate = verify_axioms(quotient)
    logger.info(f"[OK] Quotient by {list(index_set)}: {block_count} blocks of size {int(sizes[0])}")
    return QuotientStructure(
        index_set=index_set,
        classes=classes,
        block_map=blocks,
        block_size=int(sizes[0]),
        block_count=block_count,
        quotient=quotient,
        certificate=certificate,
    )


def dual_index_set(spec: Spectrum, index_set: Sequence[int]) -> Tuple[int, ...]:
    """Eigenspaces J with sum_{i in I} A_i = p sum_{j in J} E_j."""
    index_set = sorted(set(index_set))
    block_size = sum(spec.k[i] for i in index_set)
    dual = []
    for j in range(spec.d + 1):
        value = sum(spec.P[j, i] for i in index_set)
        if value == block_size:
            dual.append(j)
        elif value != 0:
            raise NotClosed(
                "sum of A_i over I has an eigenvalue other than 0 and the block size",
                {"eigenspace": j, "value": value, "block_size": block_size},
            )
    blocks = Rational(spec.size_x, block_size)
    if sum(spec.m[j] for j in dual) != blocks:
        raise UnequalBlocks(
            "multiplicities over J do not add up to the number of blocks",
            {"dual": dual, "blocks": blocks},
        )
    return tuple(dual)


def _relabel_certificate(cert: SchemeCertificate, order: Sequence[int]) -> SchemeCertificate:
    """New relation i is old relation order[i]."""
    order = list(order)
    return SchemeCertificate(
        partition=cert.partition.relabel_relations(order),
        p=cert.p[np.ix_(order, order, order)],
        k=tuple(cert.k[i] for i in order),
        adjacency=cert.adjacency[order],
    )


def _cover_arrangement(cert: SchemeCertificate, spec: Spectrum) -> Tuple[int, ...]:
    candidates = [j for j in range(1, cert.d + 1) if cert.k[j] == 1 and _closure_witness(cert, (0, j)) is None]
    if not candidates:
        raise NotAFourClassCover(
            "no closed non-identity relation of valency one",
            {"valencies": list(cert.k)},
        )
    for antipodal in candidates:
        classes = _index_classes(cert, (0, antipodal))
        shapes = sorted(len(c) for c in classes[1:])
        if classes[0] == (0, antipodal) and shapes == [1, 2]:
            paired = next(c for c in classes[1:] if len(c) == 2)
            single = next(c for c in classes[1:] if len(c) == 1)[0]
            first, second = sorted(paired, key=spec.relation_tuple, reverse=True)
            return (0, first, single, second, antipodal)
    raise ArrangementImpossible(
        "index classes do not have the shape {0,j}, {a,b}, {c}",
        {"classes": _index_classes(cert, (0, candidates[0]))},
    )


def _cover_eigen_order(spec: Spectrum) -> List[int]:
    """E0, the two quotient eigenspaces (E1 with Q_{1,j} > Q_{2,j}), then the rest by multiplicity."""
    Q = spec.Q
    derived = [e for e in range(1, 5) if Q[4, e] == Q[0, e]]
    lifted = [e for e in range(1, 5) if Q[4, e] == -Q[0, e]]
    if len(derived) != 2 or len(lifted) != 2:
        raise ArrangementImpossible(
            "cover eigenspaces do not split two and two",
            {"derived": derived, "lifted": lifted},
        )
    first = [e for e in derived if Q[1, e] > Q[2, e]]
    if len(first) != 1:
        raise ArrangementImpossible("no quotient eigenspace with r > s", {"derived": derived})
    second = [e for e in derived if e != first[0]]
    lifted = sorted(lifted, key=lambda e: (spec.m[e], -Q[1, e]))
    return [0, first[0]] + second + lifted


def _arranged_quotient_spectrum(quotient: QuotientStructure) -> Spectrum:
    spectrum = compute_spectrum(quotient.certificate)
    if spectrum.d != 2:
        raise NotAFourClassCover("quotient is not a strongly regular graph", {"d": spectrum.d})
    Q = spectrum.Q
    if Q[1, 1] > Q[2, 1]:
        return spectrum
    if Q[1, 2] > Q[2, 2]:
        return reorder_spectrum(spectrum, [0, 2, 1], [0, 1, 2])
    raise ArrangementImpossible("quotient has no eigenspace with r > s", {"Q": Q.tolist()})


def recognize_cover(cert: SchemeCertificate) -> CoverProfile:
    """Rearrange a 4-class two-fold cover and read off its parameters."""
    if cert.d != 4:
        raise NotAFourClassCover("a two-fold cover of an SRG has exactly 4 classes", {"d": cert.d})

    spectrum = compute_spectrum(cert)
    arrangement = _cover_arrangement(cert, spectrum)
    arranged_cert = _relabel_certificate(cert, arrangement)
    arranged_spec = reorder_spectrum(spectrum, list(range(5)), arrangement)
    arranged_spec = reorder_spectrum(arranged_spec, _cover_eigen_order(arranged_spec), list(range(5)))

    quotient = quotient_scheme(arranged_cert, (0, 4))
    if quotient.classes != ((0, 4), (1, 3), (2,)):
        raise ArrangementImpossible("arranged index classes differ from {0,4}, {1,3}, {2}", {"classes": quotient.classes})
    quotient_spec = _arranged_quotient_spectrum(quotient)

    rel = arranged_cert.partition.rel
    phi = np.argmax(rel == 4, axis=1)

    Q = arranged_spec.Q
    m3, m4 = arranged_spec.m[3], arranged_spec.m[4]
    profile = CoverProfile(
        arrangement=arrangement,
        phi=phi,
        m=int(quotient_spec.Q[0, 1]),
        r=Rational(quotient_spec.Q[1, 1]),
        s=Rational(quotient_spec.Q[2, 1]),
        n=quotient.block_count,
        m3=m3,
        m4=m4,
        alpha3=Rational(Q[1, 3], m3),
        alpha4=Rational(Q[1, 4], m4),
        k=arranged_cert.k[1],
        certificate=arranged_cert,
        spectrum=arranged_spec,
        quotient=quotient,
        quotient_spectrum=quotient_spec,
    )
    logger.info(
        f"[OK] Cover recognized: arrangement={list(arrangement)} (m,r,s,n)=({profile.m},{profile.r},{profile.s},{profile.n}) "
        f"m3={m3} m4={m4} alpha3={profile.alpha3} alpha4={profile.alpha4}"
    )
    return profile


def antipodal_action(profile: CoverProfile, cert: Optional[SchemeCertificate] = None) -> AntipodalReport:
    """Check that phi maps R_i onto R_{4-i} and is a fixed-point-free involution."""
    cert = cert or profile.certificate
    rel = cert.partition.rel
    phi = np.asarray(profile.phi)
    moved = rel[phi]
    failing = [i for i in range(5) if not np.array_equal(moved == i, rel == 4 - i)]
    identity = np.arange(cert.n)
    report = AntipodalReport(
        failing_relations=failing,
        involution=bool(np.array_equal(phi[phi], identity)),
        fixed_point_free=bool(np.all(phi != identity)),
    )
    if report.ok:
        logger.info("[OK] Antipodal action verified for all five relations")
    else:
        logger.warning(f"[WARNING] Antipodal action fails for relations {failing}")
    return report


def cover_q_template(profile: CoverProfile) -> RationalMatrix:
    """Q of a two-fold cover in terms of (m, r, s, n, m3, m4, alpha3, alpha4)."""
    m, r, s, n = Integer(profile.m), profile.r, profile.s, Integer(profile.n)
    a3 = profile.m3 * profile.alpha3
    a4 = profile.m4 * profile.alpha4
    return ImmutableMatrix(
        [
            [1, m, n - m - 1, profile.m3, profile.m4],
            [1, r, -r - 1, a3, a4],
            [1, s, -s - 1, 0, 0],
            [1, r, -r - 1, -a3, -a4],
            [1, m, n - m - 1, -profile.m3, -profile.m4],
        ]
    )


def check_cover_template(profile: CoverProfile) -> CoverTemplateReport:
    """Compare the arranged Q with the cover template and the quotient Q."""
    computed = profile.spectrum.Q
    template = cover_q_template(profile)
    report = CoverTemplateReport(identities=profile.identities())

    for row in range(5):
        for col in range(5):
            if computed[row, col] != template[row, col]:
                report.template_cells.append(
                    CellViolation(
                        identity="cover Q template",
                        row=row,
                        col=col,
                        lhs=str(computed[row, col]),
                        rhs=str(template[row, col]),
                    )
                )

    quotient_q = profile.quotient_spectrum.Q
    for position, members in enumerate(profile.quotient.classes):
        for row in members:
            for col in range(3):
                if computed[row, col] != quotient_q[position, col]:
                    report.embedding_cells.append(
                        CellViolation(
                            identity="quotient embedding",
                            row=row,
                            col=col,
                            lhs=str(computed[row, col]),
                            rhs=str(quotient_q[position, col]),
                        )
                    )

    if report.ok:
        logger.info("[OK] Cover identities, Q template and quotient embedding hold")
    else:
        logger.warning("[WARNING] Cover template check reported differences")
    return report

"""
Cliques, Spreads and the 5-Class Fission

Works on a recognized two-fold cover (relations arranged so that R_4 is the
antipodal matching and the index classes are {0,4}, {1,3}, {2}):
1. clique profiles and the clique bound 2(1 - P_{0,2}/theta)
2. outside-point regularity of tight {0,2,4}-cliques
3. spread validation
4. the fission R_2 = R~2 + R~5 and its certified spectrum
5. reconciliation of the computed spectrum with the closed-form matrices
"""

import logging
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import Integer, Rational

from ..core.config import settings
from ..core.exceptions import (
    BlockNotClique,
    BlockNotTight,
    CheckFailure,
    EigenspaceInheritanceError,
    EmptySubset,
    FissionNotAScheme,
    NonNegativeTheta,
    NotAPartition,
    NotConstant,
    NotTight,
)
from ..models.cover import CoverProfile
from ..models.fission import (
    CellDiff,
    CliquePartition,
    FissionScheme,
    ReconciliationReport,
    TemplateComparison,
    TightRegularity,
)
from ..models.scheme import PointPartition, RelationPartition, SchemeCertificate
from ..models.spectrum import Spectrum
from .scheme_core import verify_axioms
from .spectra import compute_spectrum, reorder_spectrum

logger = logging.getLogger(__name__)

CLIQUE_PROFILE = (0, 2, 4)
# relation and eigenspace labels left unpinned by the refinement
FREE_LABELS = (2, 5)


def clique_profile(cert: SchemeCertificate, Y: Sequence[int]) -> Tuple[int, ...]:
    """Relation indices realized inside Y x Y."""
    points = np.unique(np.asarray(Y, dtype=np.int64))
    if points.size == 0:
        raise EmptySubset("point subset is empty")
    rel = cert.partition.rel
    return tuple(int(i) for i in np.unique(rel[np.ix_(points, points)]))


def _theta(spec: Spectrum) -> Rational:
    theta = min(spec.P[1, 2], spec.P[2, 2])
    if theta >= 0:
        raise NonNegativeTheta(
            "theta = min(P_12, P_22) must be negative",
            {"P_12": spec.P[1, 2], "P_22": spec.P[2, 2]},
        )
    return Rational(theta)


def delsarte_bound(spec: Spectrum) -> Tuple[Rational, Rational]:
    """(theta, 2 (1 - P_02 / theta)) for a spectrum in cover arrangement."""
    theta = _theta(spec)
    return theta, 2 * (1 - spec.P[0, 2] / theta)


def _constant_counts(rel_rows: np.ndarray, points: np.ndarray, relations: Sequence[int]) -> List[int]:
    """|R_i(x) cap Y| per relation, required equal for every outside x."""
    constants = []
    for i in relations:
        counts = np.count_nonzero(rel_rows == i, axis=1)
        if counts.size and counts.min() != counts.max():
            low, high = int(np.argmin(counts)), int(np.argmax(counts))
            raise NotConstant(
                f"|R_{i}(x) cap Y| depends on x",
                {"i": i, "x": int(points[low]), "count_x": int(counts[low]), "y": int(points[high]), "count_y": int(counts[high])},
            )
        constants.append(int(counts[0]) if counts.size else 0)
    return constants


def verify_tight_regularity(profile: CoverProfile, Y: Sequence[int]) -> TightRegularity:
    """Intersection constants of a tight clique with the neighbourhoods of outside points."""
    cert = profile.certificate
    found = clique_profile(cert, Y)
    if found != CLIQUE_PROFILE:
        raise NotTight("subset is not a {0,2,4}-clique", {"profile": found})
    theta, bound = delsarte_bound(profile.spectrum)
    members = np.unique(np.asarray(Y, dtype=np.int64))
    if members.size != bound:
        raise NotTight("clique does not attain the bound", {"size": int(members.size), "bound": bound})

    rel = cert.partition.rel
    outside = np.setdiff1d(np.arange(cert.n), members)
    constants = _constant_counts(rel[np.ix_(outside, members)], outside, (1, 2, 3))

    quotient = profile.quotient
    qrel = quotient.quotient.rel
    images = np.unique(quotient.block_map[members])
    outside_blocks = np.setdiff1d(np.arange(quotient.block_count), images)
    quotient_constants = _constant_counts(qrel[np.ix_(outside_blocks, images)], outside_blocks, (1, 2))
    quotient_theta = _theta(profile.quotient_spectrum)
    quotient_bound = 1 - profile.quotient_spectrum.P[0, 2] / quotient_theta

    regularity = TightRegularity(
        constants=tuple(constants),
        quotient_constants=tuple(quotient_constants),
        quotient_clique_size=int(images.size),
        quotient_bound=Rational(quotient_bound),
    )
    logger.info(
        f"[OK] Tight clique of size {members.size}: constants {constants}, "
        f"quotient constants {quotient_constants}"
    )
    return regularity


def validate_spread(profile: CoverProfile, blocks: PointPartition) -> CliquePartition:
    """Check that every block is a tight {0,2,4}-clique."""
    cert = profile.certificate
    if blocks.n != cert.n:
        raise NotAPartition("partition does not cover the point set", {"n": blocks.n, "points": cert.n})
    sizes = np.bincount(blocks.blocks, minlength=blocks.f)
    if (sizes == 0).any():
        raise NotAPartition("partition has an empty block", {"block": int(np.argmin(sizes))})

    theta, bound = delsarte_bound(profile.spectrum)
    for index in range(blocks.f):
        found = clique_profile(cert, blocks.members(index))
        if not set(found) <= set(CLIQUE_PROFILE):
            raise BlockNotClique("block is not a {0,2,4}-clique", {"block": index, "profile": found})
        if found != CLIQUE_PROFILE or int(sizes[index]) != bound:
            raise BlockNotTight(
                "block does not attain the clique bound",
                {"block": index, "size": int(sizes[index]), "bound": bound},
            )

    logger.info(f"[OK] Spread validated: {blocks.f} tight cliques of size {bound}")
    return CliquePartition(blocks=blocks.blocks, f=blocks.f, theta=theta, bound=bound)


def _find_column(Q, expected: List) -> Optional[int]:
    for col in range(Q.cols):
        if list(Q.col(col)) == expected:
            return col
    return None


def _inherit_eigenspaces(spectrum: Spectrum, cover: Spectrum, clique_size: int) -> List[int]:
    """Canonical column of each E~0..E~5."""
    Q, C = spectrum.Q, cover.Q
    order = {}
    for e in (0, 1, 3, 4):
        expected = [C[0, e], C[1, e], C[2, e], C[3, e], C[4, e], C[2, e]]
        order[e] = _find_column(Q, expected)
    top = Integer(spectrum.size_x) / clique_size - 1
    order[5] = _find_column(Q, [top, -1, top, -1, top, -1])

    missing = [e for e, col in order.items() if col is None]
    if missing or len(set(order.values())) != 5:
        raise EigenspaceInheritanceError(
            "refined eigenspaces do not extend the cover's", {"missing": missing}
        )
    rest = sorted(set(range(6)) - set(order.values()))
    order[2] = rest[0]
    return [order[e] for e in range(6)]


def _refine(profile: CoverProfile, partition: CliquePartition) -> RelationPartition:
    rel = profile.certificate.partition.rel
    same_block = partition.blocks[:, None] == partition.blocks[None, :]
    refined = rel.copy()
    refined[(rel == 2) & ~same_block] = 5
    return RelationPartition(n=profile.certificate.n, d=5, rel=refined)


def fission(profile: CoverProfile, partition: CliquePartition) -> FissionScheme:
    """Split R_2 by the spread and certify the 5-class refinement."""
    refined = _refine(profile, partition)
    try:
        cert5 = verify_axioms(refined)
    except CheckFailure as error:
        raise FissionNotAScheme(f"refinement is not a scheme: {error.message}", error.witness)

    spectrum = compute_spectrum(cert5)
    order = _inherit_eigenspaces(spectrum, profile.spectrum, int(partition.bound))
    spectrum5 = reorder_spectrum(spectrum, order, list(range(6)))
    if spectrum5.m[2] + spectrum5.m[5] != profile.spectrum.m[2]:
        raise EigenspaceInheritanceError(
            "E~2 and E~5 do not split E_2",
            {"m~2": spectrum5.m[2], "m~5": spectrum5.m[5], "m2": profile.spectrum.m[2]},
        )

    logger.info(f"[OK] Fission certified: valencies={list(cert5.k)} multiplicities={list(spectrum5.m)}")
    scheme = FissionScheme(refined=refined, cert5=cert5, spectrum5=spectrum5, cliques=partition)
    return scheme.model_copy(update={"reconciliation": reconcile_fission_formulas(scheme, profile)})


# --- closed-form templates ----------------------------------------------------

def _div(numerator, denominator):
    """Exact quotient, None when the denominator vanishes."""
    if denominator == 0:
        return None
    return Rational(numerator) / denominator


def closed_form_q(profile: CoverProfile) -> List[List]:
    """Q~ in terms of the cover parameters, rows R~0..R~5, columns E~0..E~5."""
    m, r, s, n = Integer(profile.m), profile.r, profile.s, Integer(profile.n)
    a3, a4 = profile.m3 * profile.alpha3, profile.m4 * profile.alpha4
    ms = _div(m, s)
    top = None if ms is None else n - m - 1 + ms
    bottom = None if ms is None else -s - 1 + ms
    neg_ms = None if ms is None else -ms
    return [
        [1, m, top, profile.m3, profile.m4, neg_ms],
        [1, r, -r, a3, a4, -1],
        [1, s, -s, 0, 0, -1],
        [1, r, -r, -a3, -a4, -1],
        [1, m, top, -profile.m3, -profile.m4, neg_ms],
        [1, s, bottom, 0, 0, neg_ms],
    ]


def closed_form_valencies(profile: CoverProfile) -> List:
    n, k = Integer(profile.n), Integer(profile.k)
    ms = _div(profile.m, profile.s)
    middle = None if ms is None else 2 * (n - k - 1) + ms
    return [1, k, middle, k, 1, None if ms is None else -ms]


def closed_form_p(profile: CoverProfile) -> List[List]:
    """P~ with alpha = alpha3, rows E~0..E~5, columns R~0..R~5."""
    m, r, s, n, k = Integer(profile.m), profile.r, profile.s, Integer(profile.n), Integer(profile.k)
    alpha = profile.alpha3
    ms = _div(m, s)
    neg_ms = None if ms is None else -ms
    valency_2 = None if ms is None else 2 * (n - k - 1) + ms
    spread = m + 2 * s * (n - k - 1)
    denominator = m * (s - 1) + s * (n - 1)
    p21 = _div(k * r * s, denominator)
    p22 = _div(s * spread, denominator)
    p25 = _div(m * (m - s * (s + 1)), s * denominator) if s != 0 else None
    inverse_alpha = _div(1, alpha)
    return [
        [1, k, valency_2, k, 1, neg_ms],
        [1, _div(k * r, m), _div(spread, m), _div(k * r, m), 1, -1],
        [1, p21, p22, p21, 1, p25],
        [1, alpha * k, 0, -alpha * k, -1, 0],
        [1, None if inverse_alpha is None else -inverse_alpha, 0, inverse_alpha, -1, 0],
        [1, _div(k * s, m), _div(spread, m), _div(k * s, m), 1, neg_ms],
    ]


def gold_example_q(m: int) -> Tuple[List[List], List[List]]:
    """Closed-form Q and Q~ of the Gold code scheme at odd degree m."""
    q = Integer(2) ** m
    h = Integer(2) ** (m - 1)
    e = Integer(2) ** ((m + 1) // 2)
    cover = [
        [1, h * (q - 1), (h + 1) * (q - 1), q, q * (q - 1)],
        [1, h, -h - 1, e, -e],
        [1, -h, h - 1, 0, 0],
        [1, h, -h - 1, -e, e],
        [1, h * (q - 1), (h + 1) * (q - 1), -q, -q * (q - 1)],
    ]
    refined = [
        [1, h * (q - 1), h * (q - 1), q, q * (q - 1), q - 1],
        [1, h, -h - 1, e, -e, -1],
        [1, -h, h - 1, 0, 0, -1],
        [1, h, -h - 1, -e, e, -1],
        [1, h * (q - 1), h * (q - 1), -q, -q * (q - 1), q - 1],
        [1, -h, -h, 0, 0, q - 1],
    ]
    return cover, refined


def detect_gold_degree(profile: CoverProfile) -> Optional[int]:
    """Odd m whose closed-form Gold Q equals the cover's Q, if any."""
    for m in range(3, settings.max_field_degree + 1, 2):
        if 2 ** (2 * m + 1) != profile.certificate.n:
            continue
        cover, _ = gold_example_q(m)
        Q = profile.spectrum.Q
        if all(Q[i, j] == cover[i][j] for i in range(5) for j in range(5)):
            return m
    return None


def _swap(labels: Sequence[int], size: int) -> Tuple[int, ...]:
    order = list(range(size))
    a, b = labels
    order[a], order[b] = order[b], order[a]
    return tuple(order)


def _compare(name: str, computed: List[List], template: List[List], swap_rows: bool, swap_cols: bool) -> TemplateComparison:
    """Best relabeling of the free labels; ties keep the identity."""
    rows, cols = len(template), len(template[0])
    identity_rows, identity_cols = tuple(range(rows)), tuple(range(cols))
    row_choices = [identity_rows, _swap(FREE_LABELS, rows)] if swap_rows else [identity_rows]
    col_choices = [identity_cols, _swap(FREE_LABELS, cols)] if swap_cols else [identity_cols]

    best = None
    for row_order, col_order in product(row_choices, col_choices):
        diffs = []
        for i, j in product(range(rows), range(cols)):
            value = computed[row_order[i]][col_order[j]]
            expected = template[i][j]
            if expected is None or value != expected:
                diffs.append(
                    CellDiff(
                        row=i,
                        col=j,
                        computed=str(value),
                        closed_form="undefined" if expected is None else str(expected),
                    )
                )
        if best is None or len(diffs) < len(best.diffs):
            best = TemplateComparison(name=name, row_order=row_order, col_order=col_order, diffs=diffs)
    return best


def _as_rows(matrix) -> List[List]:
    return [list(matrix.row(i)) for i in range(matrix.rows)]


def reconcile_fission_formulas(
    f: FissionScheme, profile: CoverProfile, example_degree: Optional[int] = None
) -> ReconciliationReport:
    """Compare the computed Q~, valencies and P~ with their closed forms."""
    spectrum = f.spectrum5
    report = ReconciliationReport()

    report.comparisons.append(
        _compare("closed_form_q", _as_rows(spectrum.Q), closed_form_q(profile), swap_rows=True, swap_cols=True)
    )

    degree = example_degree or detect_gold_degree(profile)
    if degree is not None:
        _, refined = gold_example_q(degree)
        report.comparisons.append(
            _compare("gold_example_q", _as_rows(spectrum.Q), refined, swap_rows=True, swap_cols=True)
        )
        report.notes.append(f"gold example compared at m={degree}")

    report.comparisons.append(
        _compare("closed_form_valencies", [list(f.cert5.k)], [closed_form_valencies(profile)], swap_rows=False, swap_cols=True)
    )
    report.comparisons.append(
        _compare("closed_form_p", _as_rows(spectrum.P), closed_form_p(profile), swap_rows=True, swap_cols=True)
    )

    for item in report.comparisons:
        if item.relabeled:
            report.notes.append(
                f"{item.name} compared after exchanging labels 2 and 5 "
                f"(rows={','.join(map(str, item.row_order))} cols={','.join(map(str, item.col_order))})"
            )

    flagged = sum(len(item.diffs) for item in report.comparisons)
    logger.info(f"[INFO] Reconciliation: {len(report.comparisons)} templates, {flagged} differing cells")
    return report

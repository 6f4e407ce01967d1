"""
Mutually Unbiased Weighing Matrices

The antipodal eigenspaces E~3 and E~4 of the fission scheme embed X as an
antipodal spherical code. When 2 m~e equals the clique size, every clique
contributes an orthonormal basis (one point per antipodal pair) and the
cross-clique Gram blocks, rescaled by 1/alpha, are {0,+-1} weighing matrices.
Everything is checked at the Gram level in exact integer arithmetic.
"""

import logging
from math import lcm
from typing import Dict, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from sympy import Rational

from ..core.config import settings
from ..core.exceptions import (
    InputError,
    MultiplicityMismatch,
    NonConstantAngle,
    NotAWeighingMatrix,
    NotOrthonormal,
    UnbiasednessViolation,
)
from ..models.cover import CoverProfile
from ..models.fission import CliquePartition, FissionScheme
from ..models.weighing import GramBlocks, MuwmBoundReport, UnbiasedCertificate, WeighingFamily

logger = logging.getLogger(__name__)


def muwm_bound(f: FissionScheme, profile: CoverProfile) -> MuwmBoundReport:
    """k~0 + k~4 + k~w against min(2 m3, 2 m4) for both readings of the third valency."""
    k = f.cert5.k
    within = k[0] + k[4] + k[2]
    literal = k[0] + k[4] + k[5]
    bound = min(2 * profile.m3, 2 * profile.m4)

    multiplicities = {3: profile.m3, 4: profile.m4}
    equality = next((e for e in (3, 4) if 2 * multiplicities[e] == within), None)
    alphas = {3: profile.alpha3, 4: profile.alpha4}

    report = MuwmBoundReport(
        within_clique_sum=within,
        literal_sum=literal,
        bound=bound,
        m3=profile.m3,
        m4=profile.m4,
        equality_eigenindex=equality,
        formula_size=None if profile.s == 0 else Rational(-profile.m, 2 * profile.s),
        formula_weight=None if equality is None else 1 / alphas[equality],
    )
    logger.info(f"[INFO] Weighing bound: within-clique {within}, literal {literal}, bound {bound}")
    return report


def _antipodes(f: FissionScheme) -> np.ndarray:
    return np.argmax(f.refined.rel == 4, axis=1)


def _representatives(f: FissionScheme, partition: CliquePartition, flips: Optional[np.ndarray]) -> np.ndarray:
    """Per clique, the smaller point of every antipodal pair (or its antipode where flipped)."""
    phi = _antipodes(f)
    reps = []
    for index in range(partition.f):
        members = partition.members(index)
        reps.append(members[members < phi[members]])
    reps = np.array(reps, dtype=np.int64)
    if flips is not None:
        flips = np.asarray(flips, dtype=bool)
        if flips.shape != reps.shape:
            raise InputError("flip mask has the wrong shape", {"expected": reps.shape, "got": flips.shape})
        reps = np.where(flips, phi[reps], reps)
    return reps


def gram_blocks(
    f: FissionScheme, eigenindex: int, partition: CliquePartition, flips: Optional[np.ndarray] = None
) -> GramBlocks:
    """Unit Gram matrix of E~e restricted to clique representatives, in f x f blocks."""
    if eigenindex not in (3, 4):
        raise InputError("eigenindex must be 3 or 4", {"eigenindex": eigenindex})
    multiplicity = f.spectrum5.m[eigenindex]
    clique_size = int(partition.bound)
    if 2 * multiplicity != clique_size:
        raise MultiplicityMismatch(
            "2 m_e differs from the clique size",
            {"eigenindex": eigenindex, "2m_e": 2 * multiplicity, "clique_size": clique_size},
        )

    values = tuple(Rational(f.spectrum5.Q[i, eigenindex], multiplicity) for i in range(6))
    denominator = lcm(*(int(v.q) for v in values))
    numerators_by_relation = np.array([int(v * denominator) for v in values], dtype=np.int64)

    reps = _representatives(f, partition, flips)
    count, dim = reps.shape
    flat = reps.ravel()
    table = numerators_by_relation[f.refined.rel[np.ix_(flat, flat)]]
    numerators = table.reshape(count, dim, count, dim).transpose(0, 2, 1, 3)

    identity = denominator * np.eye(dim, dtype=np.int64)
    for a in range(count):
        if not np.array_equal(numerators[a, a], identity):
            i, j = (int(v) for v in np.argwhere(numerators[a, a] != identity)[0])
            raise NotOrthonormal(
                "clique representatives are not orthonormal",
                {"clique": a, "row": i, "col": j, "value": Rational(int(numerators[a, a][i, j]), denominator)},
            )

    logger.info(f"[OK] Gram blocks for E~{eigenindex}: {count} cliques x {dim} representatives")
    return GramBlocks(
        eigenindex=eigenindex,
        multiplicity=multiplicity,
        reps=reps,
        numerators=np.ascontiguousarray(numerators),
        denominator=denominator,
        relation_values=values,
    )


def angle_set(grams: GramBlocks) -> Tuple[Rational, ...]:
    """Off-diagonal unit Gram values over all of X."""
    return tuple(sorted(set(grams.relation_values[1:])))


def _weighing_witness(products: np.ndarray, target: np.ndarray) -> Optional[Tuple[int, int, int, int]]:
    bad = np.argwhere(products != target)
    if bad.size:
        return tuple(int(v) for v in bad[0])
    return None


def extract_weighing_family(grams: GramBlocks, alpha: Rational) -> WeighingFamily:
    """W_ab = G_ab / alpha with W_aa = I; checks entries and W W^T = w I."""
    alpha = Rational(alpha)
    scaled = alpha * grams.denominator
    if not scaled.is_integer or scaled == 0:
        raise NonConstantAngle("alpha is not a Gram value", {"alpha": alpha, "denominator": grams.denominator})
    step = int(scaled)

    count, dim = grams.f, grams.dim
    numerators = grams.numerators
    off_diagonal = ~np.eye(count, dtype=bool)[:, :, None, None]
    allowed = (numerators == 0) | (numerators == step) | (numerators == -step)
    bad = np.argwhere(off_diagonal & ~allowed)
    if bad.size:
        a, b, i, j = (int(v) for v in bad[0])
        raise NonConstantAngle(
            "cross-clique Gram entry outside {0, +-alpha}",
            {"a": a, "b": b, "row": i, "col": j, "value": Rational(int(numerators[a, b, i, j]), grams.denominator)},
        )

    weight = 1 / alpha**2
    if not weight.is_integer:
        raise NotAWeighingMatrix("1/alpha^2 is not an integer", {"alpha": alpha})
    weight = int(weight)

    W = (numerators // step).astype(np.int8)
    W[np.arange(count), np.arange(count)] = np.eye(dim, dtype=np.int8)

    wide = W.astype(np.int64)
    target = weight * np.eye(dim, dtype=np.int64)
    rows = np.einsum("abij,abkj->abik", wide, wide)
    cols = np.einsum("abji,abjk->abik", wide, wide)
    nonzero_rows = np.count_nonzero(W, axis=3)
    nonzero_cols = np.count_nonzero(W, axis=2)
    for a in range(count):
        for b in range(count):
            if a == b:
                continue
            cell = _weighing_witness(rows[a, b], target) or _weighing_witness(cols[a, b], target)
            if cell is not None or (nonzero_rows[a, b] != weight).any() or (nonzero_cols[a, b] != weight).any():
                raise NotAWeighingMatrix(
                    f"W_{{{a},{b}}} is not a weighing matrix of weight {weight}",
                    {"a": a, "b": b, "cell": cell},
                )

    logger.info(f"[OK] Weighing family: {count} cliques, W({dim},{weight}) blocks, alpha={alpha}")
    return WeighingFamily(
        dim=dim,
        alpha=alpha,
        weight=weight,
        eigenindex=grams.eigenindex,
        reps=grams.reps,
        W=W,
    )


def _check_reference(W: np.ndarray, b: int, numerator: int, denominator: int) -> List[Dict[str, int]]:
    """W_ab W_cb^T * alpha == W_ac for every a, c distinct from b and each other."""
    count, dim = W.shape[0], W.shape[2]
    # small integers are exact in float64
    stacked = W[:, b].reshape(count * dim, dim).astype(np.float64)
    products = (stacked @ stacked.T).reshape(count, dim, count, dim).transpose(0, 2, 1, 3)
    lhs = np.rint(products).astype(np.int64) * numerator
    rhs = W.astype(np.int64) * denominator

    failures = []
    for a in range(count):
        for c in range(count):
            if a == c or b in (a, c):
                continue
            bad = np.argwhere(lhs[a, c] != rhs[a, c])
            if bad.size:
                i, j = (int(v) for v in bad[0])
                failures.append({"a": a, "c": c, "b": b, "row": i, "col": j})
    return failures


def verify_unbiased(fam: WeighingFamily, raise_on_failure: bool = True) -> UnbiasedCertificate:
    """Every ordered pair (a, c) against every reference b: W_ab W_cb^T = (1/alpha) W_ac."""
    count = fam.f
    alpha = Rational(fam.alpha)
    results = Parallel(n_jobs=max(1, min(count, settings.worker_count)), prefer="threads")(
        delayed(_check_reference)(fam.W, b, int(alpha.p), int(alpha.q)) for b in range(count)
    )
    failures = sorted(
        (item for batch in results for item in batch),
        key=lambda item: (item["a"], item["c"], item["b"]),
    )
    failed_pairs = {(item["a"], item["c"]) for item in failures}
    pairs = count * (count - 1)

    certificate = UnbiasedCertificate(
        pairs_checked=pairs,
        pairs_ok=pairs - len(failed_pairs),
        products_checked=pairs * max(0, count - 2),
        weighing_checked=pairs,
        failures=failures,
    )
    if failures and raise_on_failure:
        first = failures[0]
        raise UnbiasednessViolation(
            f"W_{{{first['a']},{first['b']}}} W_{{{first['c']},{first['b']}}}^T is not (1/alpha) W_{{{first['a']},{first['c']}}}",
            first,
        )
    if certificate.ok:
        logger.info(f"[OK] Unbiasedness: {certificate.pairs_ok}/{pairs} ordered pairs")
    else:
        logger.warning(f"[WARNING] Unbiasedness fails for {len(failed_pairs)} ordered pairs")
    return certificate

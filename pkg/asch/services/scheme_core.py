"""
Scheme Axioms and Certificates

Checks that a symmetric relation partition is an association scheme:
1. symmetry of every relation
2. R_0 is the diagonal
3. every product A_i A_j is an integer combination of the A_k

The certificate stores p_{i,j}^k, the valencies and packed adjacency rows.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from sympy import ImmutableMatrix

from ..core.config import settings
from ..core.exceptions import IdentityViolation, IntersectionNumberNotConstant, NotSymmetric
from ..core.utils import row_chunks
from ..models.matrix import RationalMatrix
from ..models.scheme import RelationPartition, SchemeCertificate

logger = logging.getLogger(__name__)


def _check_structure(rp: RelationPartition) -> None:
    rel = rp.rel
    asymmetric = np.argwhere(rel != rel.T)
    if asymmetric.size:
        x, y = (int(v) for v in asymmetric[0])
        raise NotSymmetric(
            "relation table is not symmetric",
            {"x": x, "y": y, "rel(x,y)": int(rel[x, y]), "rel(y,x)": int(rel[y, x])},
        )

    off_diagonal = (rel == 0) != np.eye(rp.n, dtype=bool)
    if off_diagonal.any():
        x, y = (int(v) for v in np.argwhere(off_diagonal)[0])
        raise IdentityViolation(
            "relation 0 must be exactly the diagonal",
            {"x": x, "y": y, "rel(x,y)": int(rel[x, y])},
        )


def _representatives(rel: np.ndarray, size: int) -> List[Tuple[int, int]]:
    """First pair (row-major) of every relation."""
    flat = rel.ravel()
    reps = []
    for k in range(size):
        x, y = divmod(int(np.argmax(flat == k)), rel.shape[0])
        reps.append((x, y))
    return reps


def _count_table(rel: np.ndarray, reps: List[Tuple[int, int]], size: int) -> np.ndarray:
    """p[i, j, k] read off at the representative pair of relation k."""
    p = np.zeros((size, size, size), dtype=np.int64)
    for k, (x, y) in enumerate(reps):
        np.add.at(p[:, :, k], (rel[x].astype(np.int64), rel[:, y].astype(np.int64)), 1)
    return p


def _check_rows(rows: np.ndarray, dense: List[np.ndarray], rel: np.ndarray, p: np.ndarray) -> Optional[Tuple]:
    """Compare (A_i A_j)[rows] with sum_k p_{i,j}^k A_k[rows]; first mismatch or None."""
    size = len(dense)
    local = rel[rows]
    for i in range(1, size):
        left = dense[i][rows]
        for j in range(i, size):
            # 0/1 float32 products are exact integer counts below 2^24
            counts = (left @ dense[j]).astype(np.int64)
            expected = p[i, j][local]
            bad = np.argwhere(counts != expected)
            if bad.size:
                r, y = bad[0]
                return (i, j, int(rows[r]), int(y), int(counts[r, y]))
    return None


def verify_axioms(rp: RelationPartition) -> SchemeCertificate:
    """Certify rp as a symmetric association scheme or raise with a witness."""
    _check_structure(rp)
    rel = rp.rel
    size = rp.d + 1

    reps = _representatives(rel, size)
    p = _count_table(rel, reps, size)

    dense = [(rel == i).astype(np.float32) for i in range(size)]
    chunks = row_chunks(rp.n)
    results = Parallel(n_jobs=len(chunks), prefer="threads")(
        delayed(_check_rows)(rows, dense, rel, p) for rows in chunks
    )
    failures = [r for r in results if r is not None]
    if failures:
        i, j, x, y, count = min(failures)
        k = int(rel[x, y])
        rx, ry = reps[k]
        raise IntersectionNumberNotConstant(
            f"p_{{{i},{j}}}^{k} is not constant on relation {k}",
            {
                "i": i,
                "j": j,
                "k": k,
                "pair_a": (rx, ry),
                "count_a": int(p[i, j, k]),
                "pair_b": (x, y),
                "count_b": count,
            },
        )

    valencies = tuple(int(p[i, i, 0]) for i in range(size))
    adjacency = np.stack([np.packbits(rel == i, axis=1) for i in range(size)])
    certificate = SchemeCertificate(partition=rp, p=p, k=valencies, adjacency=adjacency)
    logger.info(f"[OK] Scheme certified: n={rp.n} d={rp.d} valencies={list(valencies)}")
    return certificate


def intersection_matrices(cert: SchemeCertificate) -> List[RationalMatrix]:
    """B_i with (B_i)_{k,j} = p_{i,j}^k."""
    return [ImmutableMatrix(cert.p[i].T.tolist()) for i in range(cert.d + 1)]

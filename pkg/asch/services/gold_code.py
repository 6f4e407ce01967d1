"""
Gold Codes over GF(2^m)

Builds C = {Tr(a x + b x^3) + eps : a, b in GF(2^m), eps in {0,1}} for odd m,
the extended dual of the narrow-sense BCH code with designed distance 5 plus
the all-ones word. Its distance classes give a 4-class scheme and the cosets
of RM(1,m) = {Tr(a x) + eps} give a spread of tight cliques.
"""

import logging
from math import comb
from typing import Dict

import galois
import numpy as np

from ..core.config import settings
from ..core.exceptions import EvenDegree, UnexpectedDistance, UnsupportedDegree, WeightSpectrumViolation
from ..core.utils import row_chunks
from ..models.code import GoldCode, OrthogonalArrayReport
from ..models.scheme import PointPartition, RelationPartition

logger = logging.getLogger(__name__)

# One fixed irreducible modulus per odd degree keeps emitted files reproducible.
MODULI: Dict[int, str] = {
    3: "x^3 + x + 1",
    5: "x^5 + x^2 + 1",
    7: "x^7 + x + 1",
    9: "x^9 + x^4 + 1",
    11: "x^11 + x^2 + 1",
    13: "x^13 + x^4 + x^3 + x + 1",
    15: "x^15 + x + 1",
}


class BinaryField:
    """GF(2^m) in polynomial basis; elements are m-bit integers."""

    def __init__(self, m: int):
        self.m = m
        self.modulus = galois.Poly.Str(MODULI[m])
        if not self.modulus.is_irreducible():
            raise UnsupportedDegree("modulus is not irreducible", {"m": m, "modulus": MODULI[m]})
        self.GF = galois.GF(2**m, irreducible_poly=self.modulus)

    @property
    def order(self) -> int:
        return 1 << self.m

    def elements(self):
        """All field elements, sorted by integer encoding."""
        return self.GF.elements

    def add(self, a, b):
        return self.GF(a) + self.GF(b)

    def mul(self, a, b):
        return self.GF(a) * self.GF(b)

    def cube(self, a):
        return self.GF(a) ** 3

    def trace(self, a) -> np.ndarray:
        """Tr(a) = a + a^2 + ... + a^(2^(m-1)) as 0/1 integers."""
        return self.GF(a).field_trace().view(np.ndarray).astype(np.int64)


def _check_degree(m: int, cap: int) -> None:
    if m % 2 == 0:
        raise EvenDegree("m must be odd", {"m": m})
    if m < 3 or m > cap or m not in MODULI:
        raise UnsupportedDegree(f"m must lie in [3, {cap}]", {"m": m})


def field_ops(m: int) -> BinaryField:
    _check_degree(m, settings.max_field_degree)
    return BinaryField(m)


def _expected_weights(m: int) -> Dict[int, int]:
    half = 1 << (m - 1)
    shift = 1 << ((m - 1) // 2)
    return {0: 0, half - shift: 1, half: 2, half + shift: 3, 1 << m: 4}


def _generator(field: BinaryField) -> np.ndarray:
    """Rows: all-ones, Tr(2^i x) for i < m, Tr(2^i x^3) for i < m."""
    x = field.elements()
    cubes = x**3
    rows = [np.ones(field.order, dtype=np.int64)]
    rows += [field.trace(field.GF(1 << i) * x) for i in range(field.m)]
    rows += [field.trace(field.GF(1 << i) * cubes) for i in range(field.m)]
    return np.array(rows, dtype=np.uint8)


def build_gold_code(m: int) -> GoldCode:
    """Enumerate C and self-check dimension, linearity and the weight spectrum."""
    _check_degree(m, settings.max_code_degree)
    field = BinaryField(m)
    GF2 = galois.GF(2)

    generator = _generator(field)
    dimension = 2 * m + 1
    rank = int(np.linalg.matrix_rank(GF2(generator)))
    if rank != dimension:
        raise WeightSpectrumViolation("generator rows are not independent", {"rank": rank, "expected": dimension})

    size = 1 << dimension
    messages = ((np.arange(size)[:, None] >> np.arange(dimension)[None, :]) & 1).astype(np.uint8)
    words = (GF2(messages) @ GF2(generator)).view(np.ndarray).astype(np.uint8)

    for i in range(dimension):
        for j in range(i + 1, dimension):
            u, v = 1 << i, 1 << j
            if not np.array_equal(words[u ^ v], words[u] ^ words[v]):
                raise WeightSpectrumViolation("code is not closed under addition", {"u": u, "v": v})
    if not words[1].all():
        raise WeightSpectrumViolation("all-ones word missing", {"index": 1})

    weights = words.sum(axis=1, dtype=np.int64)
    expected = _expected_weights(m)
    found = sorted(int(w) for w in np.unique(weights))
    if not set(found) <= set(expected):
        raise WeightSpectrumViolation("unexpected codeword weight", {"weights": found})
    counts = {w: int(np.count_nonzero(weights == w)) for w in sorted(expected)}
    length = 1 << m
    if any(counts[w] != counts[length - w] for w in counts) or sum(counts.values()) != size:
        raise WeightSpectrumViolation("weight distribution is not symmetric", {"counts": counts})

    logger.info(f"[OK] Gold code m={m}: {size} words of length {length}, weight counts {counts}")
    return GoldCode(
        m=m,
        modulus=MODULI[m],
        generator=generator,
        words=words,
        weights=weights,
        weight_counts=counts,
    )


def scheme_from_code(code: GoldCode) -> RelationPartition:
    """Relation of (u, v) = distance class of the weight of u + v."""
    lookup = np.full(code.length + 1, -1, dtype=np.int8)
    for distance, index in code.distance_classes().items():
        lookup[distance] = index

    points = np.arange(code.size)
    rel = np.empty((code.size, code.size), dtype=np.int8)
    for rows in row_chunks(code.size):
        rel[rows] = lookup[code.weights[np.bitwise_xor.outer(rows, points)]]

    if (rel < 0).any():
        x, y = (int(v) for v in np.argwhere(rel < 0)[0])
        raise UnexpectedDistance(
            "distance outside the expected set",
            {"x": x, "y": y, "d": int(code.weights[x ^ y])},
        )
    return RelationPartition(n=code.size, d=4, rel=rel)


def rm_coset_partition(code: GoldCode) -> PointPartition:
    """Blocks = cosets of RM(1,m) in C, labelled by b."""
    return PointPartition(n=code.size, f=code.length, blocks=code.coset_of)


def antipode(code: GoldCode) -> np.ndarray:
    """u -> u + all-ones."""
    return np.arange(code.size) ^ 1


def _krawtchouk(length: int, j: int, i: int) -> int:
    return sum((-1) ** s * comb(i, s) * comb(length - i, j - s) for s in range(j + 1))


def oa_strength(code: GoldCode) -> OrthogonalArrayReport:
    """Strength of C as an orthogonal array, from the dual weight distribution."""
    length = code.length
    dual = {}
    for j in range(length + 1):
        total = sum(count * _krawtchouk(length, j, i) for i, count in code.weight_counts.items())
        if total % code.size:
            raise WeightSpectrumViolation("MacWilliams transform is not integral", {"j": j})
        if total:
            dual[j] = total // code.size
    dual_distance = min(j for j in dual if j > 0)
    degree = sum(1 for w, count in code.weight_counts.items() if w > 0 and count > 0)
    report = OrthogonalArrayReport(dual_distribution=dual, dual_distance=dual_distance, degree=degree)
    logger.info(f"[INFO] Gold code m={code.m}: strength {report.strength}, degree {degree}")
    return report

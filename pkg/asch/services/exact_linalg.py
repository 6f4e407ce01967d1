"""
Exact Linear Algebra Kernels

Rational matrix kernels used to turn intersection numbers into eigenmatrices:
- characteristic polynomials (division-free Berkowitz expansion)
- integer eigenvalues by divisor testing and deflation
- simultaneous eigenspace refinement for commuting families
- exact inverses
"""

import logging
from typing import List, Sequence, Tuple

from sympy import ImmutableMatrix, Matrix, Poly, Symbol, divisors, eye

from ..core.exceptions import (
    InputError,
    JointEigenspaceNotSimple,
    NonIntegralEntries,
    NonIntegralSpectrum,
    NonSquare,
    Singular,
)
from ..models.matrix import IntPolynomial, RationalMatrix

logger = logging.getLogger(__name__)

_x = Symbol("x")


def _require_square(matrix: RationalMatrix) -> None:
    if matrix.rows != matrix.cols or matrix.rows == 0:
        raise NonSquare("matrix must be square", {"shape": matrix.shape})


def _require_integral(matrix: RationalMatrix) -> None:
    for position, entry in enumerate(matrix):
        if not entry.is_integer:
            row, col = divmod(position, matrix.cols)
            raise NonIntegralEntries("matrix entries must be integers", {"row": row, "col": col, "entry": entry})


def char_poly(matrix: RationalMatrix) -> IntPolynomial:
    """det(xI - M) for an integral square matrix."""
    matrix = ImmutableMatrix(matrix)
    _require_square(matrix)
    _require_integral(matrix)

    coefficients = matrix.charpoly(_x).all_coeffs()
    return IntPolynomial(coefficients=[int(c) for c in reversed(coefficients)])


def _candidate_roots(constant: int) -> List[int]:
    candidates = []
    for divisor in divisors(abs(constant)):
        candidates.extend((divisor, -divisor))
    return candidates


def integer_eigenvalues(matrix: RationalMatrix) -> List[int]:
    """All eigenvalues with multiplicity, largest first; every root must be an integer."""
    polynomial = char_poly(matrix)
    coefficients = list(polynomial.coefficients)

    roots: List[int] = []
    while len(coefficients) > 1 and coefficients[0] == 0:
        roots.append(0)
        coefficients.pop(0)

    remaining = Poly(list(reversed(coefficients)), _x)
    while remaining.degree() > 0:
        constant = int(remaining.TC())
        for candidate in _candidate_roots(constant):
            if remaining.eval(candidate) == 0:
                roots.append(candidate)
                remaining = remaining.quo(Poly(_x - candidate, _x))
                break
        else:
            raise NonIntegralSpectrum(
                "characteristic polynomial has a non-integral root",
                {"factor": str(remaining.as_expr())},
            )

    return sorted(roots, reverse=True)


def _normalized(vector: Matrix) -> Tuple:
    """Scale so that the first nonzero entry is 1."""
    pivot = next(entry for entry in vector if entry != 0)
    return tuple(entry / pivot for entry in vector)


def _is_positive(vector: Tuple) -> bool:
    return all(entry > 0 for entry in vector)


def common_eigenbasis(family: Sequence[RationalMatrix]) -> List[Tuple[Tuple, Tuple]]:
    """Joint eigenvectors of a commuting family, one per joint eigenspace.

    Returns (eigenvector, eigenvalue tuple) pairs; the eigenvalue tuple has one
    entry per family member. The row with an all-positive eigenvector comes
    first, the others follow in descending lexicographic order.
    """
    family = [ImmutableMatrix(member) for member in family]
    if not family:
        raise InputError("empty matrix family")
    size = family[0].rows
    for member in family:
        _require_square(member)
        if member.rows != size:
            raise InputError("family members must share one dimension", {"expected": size, "got": member.rows})
    for a, first in enumerate(family):
        for b in range(a + 1, len(family)):
            if first * family[b] != family[b] * first:
                raise InputError("family members do not commute", {"a": a, "b": b})

    spaces = [(ImmutableMatrix(eye(size)), ())]
    for member in family:
        values = sorted(set(integer_eigenvalues(member)), reverse=True)
        refined = []
        for basis, labels in spaces:
            found = 0
            for value in values:
                kernel = ((member - value * eye(size)) * basis).nullspace()
                if not kernel:
                    continue
                subspace = basis * Matrix.hstack(*kernel)
                refined.append((ImmutableMatrix(subspace), labels + (value,)))
                found += subspace.cols
            if found != basis.cols:
                raise JointEigenspaceNotSimple(
                    "family is not diagonalizable on a joint eigenspace",
                    {"labels": labels, "dimension": basis.cols, "found": found},
                )
        spaces = refined

    stalled = [(labels, basis.cols) for basis, labels in spaces if basis.cols != 1]
    if stalled:
        raise JointEigenspaceNotSimple(
            "refinement stalled with a joint eigenspace of dimension >= 2",
            {"labels": stalled[0][0], "dimension": stalled[0][1]},
        )

    pairs = [(_normalized(basis.col(0)), labels) for basis, labels in spaces]
    perron = [pair for pair in pairs if _is_positive(pair[0])]
    rest = sorted((pair for pair in pairs if not _is_positive(pair[0])), key=lambda pair: pair[1], reverse=True)
    logger.debug(f"[INFO] Joint eigenbasis of {len(family)} matrices: {len(pairs)} eigenspaces")
    return perron[:1] + sorted(perron[1:], key=lambda pair: pair[1], reverse=True) + rest


def rat_inverse(matrix: RationalMatrix) -> RationalMatrix:
    """Exact two-sided inverse."""
    matrix = ImmutableMatrix(matrix)
    _require_square(matrix)
    if matrix.det() == 0:
        raise Singular("matrix is singular", {"shape": matrix.shape})
    return ImmutableMatrix(matrix.inv())

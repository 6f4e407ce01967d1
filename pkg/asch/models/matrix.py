"""
Exact matrix and polynomial value types.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator
from sympy import ImmutableMatrix, Integer, eye, zeros

# Matrices over Q. sympy keeps every entry in lowest terms with a positive
# denominator, which is exactly the invariant we need.
RationalMatrix = ImmutableMatrix


class IntPolynomial(BaseModel):
    """Integer polynomial, coefficients listed lowest degree first."""

    model_config = ConfigDict(frozen=True)

    coefficients: Tuple[int, ...]

    @field_validator("coefficients", mode="before")
    @classmethod
    def _strip_leading_zeros(cls, value):
        coeffs = [int(c) for c in value]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs) if coeffs else (0,)

    @property
    def degree(self) -> int:
        if self.coefficients == (0,):
            return -1
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def __call__(self, x):
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def evaluate_matrix(self, matrix: RationalMatrix) -> RationalMatrix:
        """Substitute a square matrix for x (Horner's rule)."""
        size = matrix.rows
        result = zeros(size, size)
        for c in reversed(self.coefficients):
            result = result * matrix + Integer(c) * eye(size)
        return ImmutableMatrix(result)

    def __str__(self) -> str:
        terms = []
        for power, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            if power == 0:
                terms.append(f"{c}")
            elif power == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{power}")
        return " + ".join(terms) if terms else "0"

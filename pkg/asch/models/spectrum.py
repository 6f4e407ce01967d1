"""
Eigenmatrix models.
"""

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import eye

from .matrix import RationalMatrix


class Spectrum(BaseModel):
    """First and second eigenmatrices.

    P rows are eigenspaces, P columns are relations; Q = |X| P^{-1}.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    P: RationalMatrix
    Q: RationalMatrix
    k: Tuple[int, ...]
    m: Tuple[int, ...]
    size_x: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_eigenmatrices(self):
        size = len(self.k)
        if self.P.shape != (size, size) or self.Q.shape != (size, size):
            raise ValueError("eigenmatrices must be (d+1) x (d+1)")
        if self.P * self.Q != self.size_x * eye(size):
            raise ValueError("P Q must equal |X| I")
        if tuple(self.P.row(0)) != self.k:
            raise ValueError("row 0 of P must list the valencies")
        if sum(self.m) != self.size_x or min(self.m) < 1:
            raise ValueError("multiplicities must be positive and sum to |X|")
        return self

    @property
    def d(self) -> int:
        return len(self.k) - 1

    def eigenvalue_tuple(self, j: int) -> Tuple:
        return tuple(self.P.row(j))

    def relation_tuple(self, i: int) -> Tuple:
        """Eigenvalues of A_i over the eigenspaces (column i of P)."""
        return tuple(self.P.col(i))


class CellViolation(BaseModel):
    identity: str
    row: int
    col: int
    lhs: str
    rhs: str


class DualityReport(BaseModel):
    """Outcome of the duality and orthogonality identities on a spectrum."""

    violations: List[CellViolation] = Field(default_factory=list)
    checked: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def cells(self, identity: str) -> List[Tuple[int, int]]:
        return [(v.row, v.col) for v in self.violations if v.identity == identity]



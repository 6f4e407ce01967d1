"""
Gram blocks and weighing matrix families.
"""

from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from sympy import ImmutableMatrix, Rational

from .matrix import RationalMatrix


class MuwmBoundReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    within_clique_sum: int
    literal_sum: int
    bound: int
    m3: int
    m4: int
    # eigenindex (3 or 4) whose 2*m_e equals the within-clique sum, if any
    equality_eigenindex: Optional[int] = None
    formula_size: Optional[Rational] = None
    formula_weight: Optional[Rational] = None

    @property
    def within_clique_equality(self) -> bool:
        return self.within_clique_sum == self.bound

    @property
    def literal_consistent(self) -> bool:
        return self.literal_sum <= self.bound


class GramBlocks(BaseModel):
    """Unit Gram matrix restricted to clique representatives.

    Block (a, b) equals numerators[a, b] / denominator.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenindex: int
    multiplicity: int
    reps: np.ndarray
    numerators: np.ndarray
    denominator: int
    # unit Gram value of each relation R~0..R~5
    relation_values: Tuple[Rational, ...]

    @property
    def f(self) -> int:
        return self.reps.shape[0]

    @property
    def dim(self) -> int:
        return self.reps.shape[1]

    def block(self, a: int, b: int) -> RationalMatrix:
        return ImmutableMatrix(self.numerators[a, b].tolist()) / self.denominator


class WeighingFamily(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dim: int
    alpha: Rational
    weight: int
    eigenindex: int
    reps: np.ndarray
    # W[a, b] is the dim x dim {0,+-1} matrix of clique a against clique b
    W: np.ndarray

    @property
    def f(self) -> int:
        return self.W.shape[0]


class UnbiasedCertificate(BaseModel):
    pairs_checked: int
    pairs_ok: int
    products_checked: int
    weighing_checked: int
    failures: List[Dict[str, int]] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pairs_ok == self.pairs_checked and not self.failures

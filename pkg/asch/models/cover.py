"""
Quotient schemes and two-fold cover profiles.
"""

from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from sympy import Rational

from .scheme import RelationPartition, SchemeCertificate
from .spectrum import CellViolation, Spectrum


class QuotientStructure(BaseModel):
    """Blocks of a closed relation subset and the scheme they induce."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    index_set: Tuple[int, ...]
    # classes[0] is the index set itself; remaining classes ordered by smallest member
    classes: Tuple[Tuple[int, ...], ...]
    block_map: np.ndarray
    block_size: int
    block_count: int
    quotient: RelationPartition
    certificate: SchemeCertificate

    def class_of(self) -> np.ndarray:
        """Lookup table: relation index -> quotient relation index."""
        table = np.zeros(sum(len(c) for c in self.classes), dtype=np.int64)
        for position, members in enumerate(self.classes):
            table[list(members)] = position
        return table


class CoverProfile(BaseModel):
    """A 4-class two-fold cover of a strongly regular graph in canonical arrangement."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    # arrangement[new] = original relation index
    arrangement: Tuple[int, ...]
    phi: np.ndarray
    m: int
    r: Rational
    s: Rational
    n: int
    m3: int
    m4: int
    alpha3: Rational
    alpha4: Rational
    k: int
    certificate: SchemeCertificate
    spectrum: Spectrum
    quotient: QuotientStructure
    quotient_spectrum: Spectrum

    def identities(self) -> Dict[str, bool]:
        return {
            "r > s": bool(self.r > self.s),
            "m3 + m4 = n": self.m3 + self.m4 == self.n,
            "m3*alpha3 + m4*alpha4 = 0": self.m3 * self.alpha3 + self.m4 * self.alpha4 == 0,
            "k*alpha3*alpha4 = -1": self.k * self.alpha3 * self.alpha4 == -1,
        }


class AntipodalReport(BaseModel):
    failing_relations: List[int] = Field(default_factory=list)
    involution: bool = True
    fixed_point_free: bool = True

    @property
    def ok(self) -> bool:
        return not self.failing_relations and self.involution and self.fixed_point_free


class CoverTemplateReport(BaseModel):
    identities: Dict[str, bool] = Field(default_factory=dict)
    template_cells: List[CellViolation] = Field(default_factory=list)
    embedding_cells: List[CellViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.identities.values()) and not self.template_cells and not self.embedding_cells

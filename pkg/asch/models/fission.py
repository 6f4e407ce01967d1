"""
Clique spreads, the 5-class fission and the formula reconciliation report.
"""

from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from sympy import Rational

from .scheme import RelationPartition, SchemeCertificate
from .spectrum import Spectrum


class CliquePartition(BaseModel):
    """A spread: every block is a tight {0,2,4}-clique."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    blocks: np.ndarray
    f: int
    theta: Rational
    bound: Rational

    def members(self, index: int) -> np.ndarray:
        return np.flatnonzero(self.blocks == index)


class TightRegularity(BaseModel):
    """Outside-point intersection constants of a tight clique."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    constants: Tuple[int, int, int]
    quotient_constants: Tuple[int, int]
    quotient_clique_size: int
    quotient_bound: Rational

    @property
    def symmetric(self) -> bool:
        return self.constants[0] == self.constants[2]

    @property
    def halving(self) -> bool:
        c1, c2, c3 = self.constants
        q1, q2 = self.quotient_constants
        return c1 + c3 == 2 * q1 and c2 == 2 * q2

    @property
    def quotient_tight(self) -> bool:
        """The image of the clique attains the quotient clique bound."""
        return self.quotient_clique_size == self.quotient_bound


class CellDiff(BaseModel):
    row: int
    col: int
    computed: str
    closed_form: str


class TemplateComparison(BaseModel):
    """One closed-form matrix (or vector) compared with computed values."""

    name: str
    row_order: Tuple[int, ...]
    col_order: Tuple[int, ...]
    diffs: List[CellDiff] = Field(default_factory=list)

    @property
    def matched(self) -> bool:
        return not self.diffs

    @property
    def relabeled(self) -> bool:
        return self.row_order != tuple(sorted(self.row_order)) or self.col_order != tuple(sorted(self.col_order))


class ReconciliationReport(BaseModel):
    comparisons: List[TemplateComparison] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    def comparison(self, name: str) -> Optional[TemplateComparison]:
        for item in self.comparisons:
            if item.name == name:
                return item
        return None

    def to_text(self) -> str:
        lines = ["RECONCILIATION v1"]
        for item in self.comparisons:
            status = "MATCH" if item.matched else "DIFF"
            lines.append(
                f"TEMPLATE {item.name} {status} rows={','.join(map(str, item.row_order))} "
                f"cols={','.join(map(str, item.col_order))} diffs={len(item.diffs)}"
            )
            for cell in item.diffs:
                lines.append(f"CELL row={cell.row} col={cell.col} computed={cell.computed} paper={cell.closed_form}")
        for note in self.notes:
            lines.append(f"NOTE {note}")
        return "\n".join(lines) + "\n"


class FissionScheme(BaseModel):
    """The 6-relation refinement R~0..R~5 with its certificate and arranged spectrum."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    refined: RelationPartition
    cert5: SchemeCertificate
    # idempotents ordered E~0..E~5 (E~i = E_i for i in {0,1,3,4}, E~5 the clique projection)
    spectrum5: Spectrum
    cliques: CliquePartition
    reconciliation: Optional[ReconciliationReport] = None

"""
Binary code models.
"""

from typing import Dict

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class GoldCode(BaseModel):
    """C = {Tr(a x + b x^3) + eps} over GF(2^m).

    Codeword u = (b << (m+1)) | (a << 1) | eps, coordinates ordered by the
    integer encoding of the field elements.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: int = Field(..., ge=3)
    modulus: str
    generator: np.ndarray
    words: np.ndarray
    weights: np.ndarray
    weight_counts: Dict[int, int]

    @property
    def length(self) -> int:
        return 1 << self.m

    @property
    def size(self) -> int:
        return self.words.shape[0]

    @property
    def coset_of(self) -> np.ndarray:
        """RM(1,m)-coset label b of every codeword."""
        return np.arange(self.size) >> (self.m + 1)

    def distance_classes(self) -> Dict[int, int]:
        """Hamming distance -> relation index of the 4-class scheme."""
        half = 1 << (self.m - 1)
        shift = 1 << ((self.m - 1) // 2)
        return {0: 0, half - shift: 1, half: 2, half + shift: 3, self.length: 4}


class OrthogonalArrayReport(BaseModel):
    """Dual distance of a code via the MacWilliams transform."""

    dual_distribution: Dict[int, int]
    dual_distance: int
    # number of nonzero distances
    degree: int

    @property
    def strength(self) -> int:
        return self.dual_distance - 1

    @property
    def hypothesis_holds(self) -> bool:
        """t >= 2s - 3, under which the distance classes form a scheme."""
        return self.strength >= 2 * self.degree - 3

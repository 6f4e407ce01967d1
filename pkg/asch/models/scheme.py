"""
Relation partitions, scheme certificates and point partitions.
"""

from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator


def _frozen_array(value, dtype) -> np.ndarray:
    array = np.array(value, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


def relation_dtype(d: int) -> np.dtype:
    """Smallest signed integer type holding relation indices 0..d."""
    return np.min_scalar_type(-max(int(d), 0) - 1)


class RelationPartition(BaseModel):
    """A partition of X x X given as an n x n table of relation indices."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    rel: np.ndarray

    @field_validator("rel", mode="before")
    @classmethod
    def _as_table(cls, value, info: ValidationInfo):
        table = np.asarray(value)
        if "d" not in info.data:
            return _frozen_array(table, np.int64)
        if table.size and (table.min() < 0 or table.max() > info.data["d"]):
            raise ValueError(f"relation indices must lie in [0, {info.data['d']}]")
        return _frozen_array(table, relation_dtype(info.data["d"]))

    @model_validator(mode="after")
    def _check_table(self):
        if self.rel.shape != (self.n, self.n):
            raise ValueError(f"relation table has shape {self.rel.shape}, expected ({self.n}, {self.n})")
        if self.rel.min() < 0 or self.rel.max() > self.d:
            raise ValueError(f"relation indices must lie in [0, {self.d}]")
        present = np.unique(self.rel)
        if present.size != self.d + 1:
            missing = sorted(set(range(self.d + 1)) - set(present.tolist()))
            raise ValueError(f"relations {missing} are empty")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RelationPartition":
        table = np.array(rows, dtype=np.int64)
        return cls(n=table.shape[0], d=int(table.max()), rel=table)

    def relabel_points(self, perm: Sequence[int]) -> "RelationPartition":
        """New point x is old point perm[x]."""
        perm = np.asarray(perm)
        return RelationPartition(n=self.n, d=self.d, rel=self.rel[np.ix_(perm, perm)])

    def relabel_relations(self, order: Sequence[int]) -> "RelationPartition":
        """New relation i is old relation order[i]."""
        inverse = np.argsort(np.asarray(order))
        return RelationPartition(n=self.n, d=self.d, rel=inverse[self.rel])


class SchemeCertificate(BaseModel):
    """Verified intersection numbers p[i, j, k] = p_{i,j}^k, valencies and adjacency bitsets."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    partition: RelationPartition
    p: np.ndarray
    k: Tuple[int, ...]
    # adjacency[i] holds A_i with every row packed into bytes
    adjacency: np.ndarray

    @field_validator("p", mode="before")
    @classmethod
    def _as_p(cls, value):
        return _frozen_array(value, np.int64)

    @model_validator(mode="after")
    def _check_counts(self):
        size = self.partition.d + 1
        if self.p.shape != (size, size, size):
            raise ValueError("intersection table has the wrong shape")
        if not np.array_equal(self.p, self.p.transpose(1, 0, 2)):
            raise ValueError("p_{i,j}^k must equal p_{j,i}^k")
        valencies = np.array(self.k)
        if not np.array_equal(self.p.sum(axis=1), np.repeat(valencies[:, None], size, axis=1)):
            raise ValueError("sum over j of p_{i,j}^k must equal k_i")
        if not np.array_equal(self.p[:, :, 0], np.diag(valencies)):
            raise ValueError("p_{i,j}^0 must equal delta_{i,j} k_i")
        return self

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def d(self) -> int:
        return self.partition.d

    def adjacency_matrix(self, i: int) -> np.ndarray:
        """A_i as a boolean n x n array."""
        return np.unpackbits(self.adjacency[i], axis=1, count=self.n).astype(bool)


class PointPartition(BaseModel):
    """An assignment of every point to one of f blocks."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(..., ge=1)
    f: int = Field(..., ge=1)
    blocks: np.ndarray

    @field_validator("blocks", mode="before")
    @classmethod
    def _as_blocks(cls, value):
        return _frozen_array(value, np.int64)

    @model_validator(mode="after")
    def _check_blocks(self):
        if self.blocks.shape != (self.n,):
            raise ValueError(f"expected {self.n} block labels, got {self.blocks.shape[0]}")
        if self.blocks.min() < 0 or self.blocks.max() >= self.f:
            raise ValueError(f"block labels must lie in [0, {self.f})")
        return self

    def members(self, index: int) -> np.ndarray:
        return np.flatnonzero(self.blocks == index)

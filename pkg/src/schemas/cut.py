from __future__ import annotations

from collections.abc import Iterable
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator


def _sorted_ids(value: Any) -> tuple[str, ...]:
    if isinstance(value, str):
        value = [value]
    return tuple(sorted(set(value)))


class CutQuery(BaseModel):
    """
    (A,B)-点割查询

    Attributes:
        sources (tuple[str, ...]): A
        sinks (tuple[str, ...]): B，允许与 A 相交（交集中的顶点必然在割中）
        deleted (tuple[str, ...]): D，求割之前先删除的顶点，必须与 A∪B 不相交
    """

    model_config = ConfigDict(frozen=True)

    sources: tuple[str, ...]
    sinks: tuple[str, ...]
    deleted: tuple[str, ...] = ()

    @field_validator("sources", "sinks", "deleted", mode="before")
    @classmethod
    def normalize_ids(cls, v):
        return _sorted_ids(v)

    @classmethod
    def of(cls, sources: Iterable[str], sinks: Iterable[str], deleted: Iterable[str] = ()) -> CutQuery:
        return cls(sources=tuple(sources), sinks=tuple(sinks), deleted=tuple(deleted))


class CutResult(BaseModel):
    """
    最小点割结果

    Attributes:
        value (int): 割的总权重 Σ w(v)
        witness (tuple[str, ...] | None): 取得该值的一个点割
    """

    model_config = ConfigDict(frozen=True)

    value: int
    witness: tuple[str, ...] | None = None


class MincutVector(BaseModel):
    """
    终端二划分的最小割向量，共 2^|T| 项

    第 m 项为 mincut(A_m, T∖A_m)，A_m 由 m 的二进制位在有序终端列表上选出（第 i 位对应 terminals[i]）。
    """

    model_config = ConfigDict(frozen=True)

    terminals: tuple[str, ...]
    entries: tuple[int, ...]

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=np.int64)

    def index_of(self, subset: Iterable[str]) -> int:
        position = {tid: i for i, tid in enumerate(self.terminals)}
        mask = 0
        for tid in subset:
            mask |= 1 << position[tid]
        return mask

    def subset_at(self, mask: int) -> tuple[str, ...]:
        return tuple(tid for i, tid in enumerate(self.terminals) if mask >> i & 1)

    def value_at(self, subset: Iterable[str]) -> int:
        return self.entries[self.index_of(subset)]

    def differing_indices(self, other: MincutVector) -> list[int]:
        if self.terminals != other.terminals:
            raise ValueError("终端列表不一致，无法比较")
        return np.flatnonzero(self.array != other.array).tolist()

    def is_complement_symmetric(self) -> bool:
        entries = self.array
        full = len(entries) - 1
        return bool(np.array_equal(entries, entries[full - np.arange(len(entries))]))

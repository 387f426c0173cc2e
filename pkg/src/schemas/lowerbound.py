from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from src.graph import TerminalGraph, expand_weighted, expansion_copies


class LowerBoundInstance(BaseModel):
    """
    下界实例 G_k 及其删点族 G^B_k

    终端 a1..ak（权重 2）与 d1..dk（权重 4），边 {a_i, d_i}；
    非终端 v_i_j（权重 1）与 a_i、a_j 相邻，removed 中的下标对应的 v_i_j 被删除。
    """

    model_config = ConfigDict(frozen=True)

    k: int
    graph: TerminalGraph
    removed: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def a(i: int) -> str:
        return f"a{i}"

    @staticmethod
    def d(i: int) -> str:
        return f"d{i}"

    @staticmethod
    def v(i: int, j: int) -> str:
        return f"v_{i}_{j}"

    def unweighted(self) -> TerminalGraph:
        return expand_weighted(self.graph)

    def copy_map(self) -> dict[str, tuple[str, ...]]:
        """终端到其在 unweighted() 中副本集合的映射，可直接作为 mincut_vector 的分组"""
        copies = expansion_copies(self.graph)
        return {tid: copies[tid] for tid in self.graph.terminals}


class VijCheck(BaseModel):
    """
    Attributes:
        value (int): X_{i,j} 处的最小割值
        forced (bool): v_i_j 存在且属于每一个最小割
    """

    model_config = ConfigDict(frozen=True)

    value: int
    forced: bool

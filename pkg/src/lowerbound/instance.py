from __future__ import annotations

from itertools import combinations
from typing import TYPE_CHECKING

from src.core.exceptions import InvalidArgumentError
from src.graph import Edge, TerminalGraph, Vertex
from src.schemas.cut import CutQuery
from src.schemas.lowerbound import LowerBoundInstance

if TYPE_CHECKING:
    from collections.abc import Iterable

A_WEIGHT = 2
D_WEIGHT = 4


def pair_indices(k: int) -> list[tuple[int, int]]:
    """所有 1 ≤ i < j ≤ k 的下标对，按字典序"""
    return list(combinations(range(1, k + 1), 2))


def _check_pair(k: int, i: int, j: int) -> None:
    if not 1 <= i < j <= k:
        raise InvalidArgumentError(f"下标 ({i},{j}) 不满足 1 ≤ i < j ≤ {k}")


def generate_gk(k: int, removed: Iterable[tuple[int, int]] = ()) -> LowerBoundInstance:
    """
    生成 G_k，或删除 removed 中各 v_i_j 后的 G^B_k

    Raises:
        InvalidArgumentError: k < 2 或下标越界
    """
    if k < 2:
        raise InvalidArgumentError(f"k 必须 >= 2，得到 {k}")
    removed = tuple(sorted(set(removed)))
    for i, j in removed:
        _check_pair(k, i, j)

    a, d, v = LowerBoundInstance.a, LowerBoundInstance.d, LowerBoundInstance.v
    vertices: dict[str, Vertex] = {}
    edges: list[Edge] = []
    for i in range(1, k + 1):
        vertices[a(i)] = Vertex(weight=A_WEIGHT, terminal=True)
        vertices[d(i)] = Vertex(weight=D_WEIGHT, terminal=True)
        edges.append((a(i), d(i)))
    for i, j in pair_indices(k):
        if (i, j) in removed:
            continue
        vertices[v(i, j)] = Vertex()
        edges.extend([(a(i), v(i, j)), (a(j), v(i, j))])

    graph = TerminalGraph.build("undirected", vertices, edges)
    return LowerBoundInstance(k=k, graph=graph, removed=removed)


def xij_partition(inst: LowerBoundInstance, i: int, j: int) -> CutQuery:
    """X_{i,j} = {a_i} ∪ (D∖{d_j}) 对 T∖X_{i,j} 的查询"""
    _check_pair(inst.k, i, j)
    sources = [inst.a(i)] + [inst.d(x) for x in range(1, inst.k + 1) if x != j]
    sinks = [tid for tid in inst.graph.terminals if tid not in sources]
    return CutQuery.of(sources, sinks)

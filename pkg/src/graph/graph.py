from __future__ import annotations

import re
from functools import cached_property
from typing import TYPE_CHECKING, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.exceptions import GraphStructureError

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

Orientation = Literal["directed", "undirected"]
Edge = tuple[str, str]

VERTEX_ID_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")


class Vertex(BaseModel):
    model_config = ConfigDict(frozen=True)

    weight: int = Field(default=1, ge=1)
    terminal: bool = False


def canonical_edge(u: str, v: str, directed: bool) -> Edge:
    if directed or u <= v:
        return (u, v)
    return (v, u)


def _check_structure(orientation: str, vertices: Mapping[str, Vertex], edges: Iterable[Edge]) -> None:
    directed = orientation == "directed"
    for vid in vertices:
        if not VERTEX_ID_PATTERN.match(vid):
            raise GraphStructureError(f"非法顶点 id: {vid!r}")

    seen: set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise GraphStructureError(f"不允许自环: {u}")
        if u not in vertices or v not in vertices:
            missing = u if u not in vertices else v
            raise GraphStructureError(f"边 ({u}, {v}) 引用了不存在的顶点 {missing}")
        edge = canonical_edge(u, v, directed)
        if edge != (u, v):
            raise GraphStructureError(f"无向边 ({u}, {v}) 未按规范顺序存储")
        if edge in seen:
            raise GraphStructureError(f"重复的边 ({u}, {v})")
        seen.add(edge)


class TerminalGraph(BaseModel):
    """
    带终端集合的点权（有向）图

    顶点按 id 升序保存，边按 (src, dst) 升序保存；无向边只保存一次，端点按 id 升序。
    构造后不可变，派生结构（邻接表等）惰性计算并缓存。

    Attributes:
        orientation (Orientation): directed / undirected
        vertices (dict[str, Vertex]): 顶点 id 到权重、终端标记的映射
        edges (tuple[Edge, ...]): 规范化的边
    """

    model_config = ConfigDict(frozen=True)

    orientation: Orientation = "undirected"
    vertices: dict[str, Vertex] = Field(default_factory=dict)
    edges: tuple[Edge, ...] = ()

    @model_validator(mode="after")
    def validate_structure(self):
        _check_structure(self.orientation, self.vertices, self.edges)
        if list(self.vertices) != sorted(self.vertices):
            raise GraphStructureError("顶点未按 id 升序存储")
        if list(self.edges) != sorted(self.edges):
            raise GraphStructureError("边未按规范顺序存储")
        return self

    @classmethod
    def build(
        cls,
        orientation: Orientation,
        vertices: Mapping[str, Vertex] | Iterable[str],
        edges: Iterable[Edge] = (),
        *,
        merge_duplicates: bool = False,
    ) -> TerminalGraph:
        """
        规范化并校验后构造图

        Args:
            orientation (Orientation): 图的方向
            vertices: 顶点映射；也可以只给 id，此时全部为权重 1 的非终端
            edges: 任意顺序的边，无向边端点顺序任意
            merge_duplicates (bool): 为 True 时静默合并重复边，否则报错
        """
        directed = orientation == "directed"
        if not isinstance(vertices, dict):
            vertices = {vid: Vertex() for vid in vertices}
        ordered_vertices = {vid: vertices[vid] for vid in sorted(vertices)}

        canonical: list[Edge] = []
        for u, v in edges:
            if u == v:
                raise GraphStructureError(f"不允许自环: {u}")
            canonical.append(canonical_edge(u, v, directed))
        if merge_duplicates:
            canonical = list(set(canonical))
        canonical.sort()

        _check_structure(orientation, ordered_vertices, canonical)
        return cls.model_construct(orientation=orientation, vertices=ordered_vertices, edges=tuple(canonical))

    @property
    def directed(self) -> bool:
        return self.orientation == "directed"

    @cached_property
    def terminals(self) -> tuple[str, ...]:
        return tuple(vid for vid, vertex in self.vertices.items() if vertex.terminal)

    @cached_property
    def nonterminals(self) -> tuple[str, ...]:
        return tuple(vid for vid, vertex in self.vertices.items() if not vertex.terminal)

    @property
    def k(self) -> int:
        return len(self.terminals)

    @cached_property
    def terminal_set(self) -> frozenset[str]:
        return frozenset(self.terminals)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def total_weight(self) -> int:
        return sum(vertex.weight for vertex in self.vertices.values())

    def weight_of(self, vertex_ids: Iterable[str]) -> int:
        return sum(self.vertices[vid].weight for vid in vertex_ids)

    def is_terminal(self, vid: str) -> bool:
        return self.vertices[vid].terminal

    @cached_property
    def successor_map(self) -> dict[str, tuple[str, ...]]:
        adjacency: dict[str, list[str]] = {vid: [] for vid in self.vertices}
        for u, v in self.edges:
            adjacency[u].append(v)
            if not self.directed:
                adjacency[v].append(u)
        return {vid: tuple(sorted(targets)) for vid, targets in adjacency.items()}

    @cached_property
    def predecessor_map(self) -> dict[str, tuple[str, ...]]:
        if not self.directed:
            return self.successor_map
        adjacency: dict[str, list[str]] = {vid: [] for vid in self.vertices}
        for u, v in self.edges:
            adjacency[v].append(u)
        return {vid: tuple(sorted(sources)) for vid, sources in adjacency.items()}

    def successors(self, vid: str) -> tuple[str, ...]:
        """有向图的出邻居；无向图的邻居"""
        return self.successor_map[vid]

    def predecessors(self, vid: str) -> tuple[str, ...]:
        """有向图的入邻居；无向图的邻居"""
        return self.predecessor_map[vid]

    def neighbors(self, vid: str) -> tuple[str, ...]:
        """忽略方向的邻居（弱连通意义下）"""
        if not self.directed:
            return self.successor_map[vid]
        return tuple(sorted(set(self.successor_map[vid]) | set(self.predecessor_map[vid])))

    def has_edge(self, u: str, v: str) -> bool:
        return canonical_edge(u, v, self.directed) in self.edge_set

    def is_quasi_bipartite(self) -> bool:
        """每条边至少有一个端点是终端"""
        return all(self.vertices[u].terminal or self.vertices[v].terminal for u, v in self.edges)

    def is_unweighted(self) -> bool:
        return all(vertex.weight == 1 for vertex in self.vertices.values())

    def terminal_terminal_edges(self) -> list[Edge]:
        return [(u, v) for u, v in self.edges if self.vertices[u].terminal and self.vertices[v].terminal]

    def without(self, removed: Iterable[str]) -> TerminalGraph:
        """删除给定顶点后的导出子图"""
        removed = set(removed)
        return TerminalGraph.model_construct(
            orientation=self.orientation,
            vertices={vid: vertex for vid, vertex in self.vertices.items() if vid not in removed},
            edges=tuple((u, v) for u, v in self.edges if u not in removed and v not in removed),
        )

    def with_terminals(self, terminals: Iterable[str]) -> TerminalGraph:
        """以给定集合作为新的终端集合，其余顶点属性不变"""
        terminals = set(terminals)
        unknown = terminals - self.vertices.keys()
        if unknown:
            raise GraphStructureError(f"终端不在图中: {sorted(unknown)}")
        vertices = {}
        for vid, vertex in self.vertices.items():
            flag = vid in terminals
            vertices[vid] = vertex if vertex.terminal == flag else vertex.model_copy(update={"terminal": flag})
        return TerminalGraph.model_construct(orientation=self.orientation, vertices=vertices, edges=self.edges)

    def with_weight(self, vid: str, weight: int) -> TerminalGraph:
        vertices = dict(self.vertices)
        vertices[vid] = vertices[vid].model_copy(update={"weight": weight})
        return TerminalGraph.model_construct(orientation=self.orientation, vertices=vertices, edges=self.edges)

    def with_edge(self, u: str, v: str) -> TerminalGraph:
        return TerminalGraph.build(self.orientation, self.vertices, [*self.edges, (u, v)])

    def summary(self) -> str:
        return f"{self.orientation} |V|={len(self.vertices)} |E|={len(self.edges)} k={self.k}"

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import networkx as nx

from src.core.constants import COMPONENT_PREFIX, COPY_SEPARATOR, SUBDIVISION_PREFIX
from src.core.exceptions import GraphStructureError
from src.utils.logging import logger

from .graph import Edge, TerminalGraph, Vertex

if TYPE_CHECKING:
    from collections.abc import Iterable

graph_logger = logger.bind(name="graph")


def to_networkx(g: TerminalGraph, *, weak: bool = False) -> nx.Graph:
    """
    转换为 networkx 图；weak=True 时有向图按无向处理（弱连通）
    """
    nx_graph: nx.Graph = nx.DiGraph() if g.directed and not weak else nx.Graph()
    nx_graph.add_nodes_from(g.vertices)
    nx_graph.add_edges_from(g.edges)
    return nx_graph


def weak_components(g: TerminalGraph, removed: Iterable[str] = ()) -> list[tuple[str, ...]]:
    """
    删除 removed 后的（弱）连通分量，分量内按 id 升序，分量之间按最小 id 升序
    """
    removed = set(removed)
    view = to_networkx(g, weak=True).subgraph(vid for vid in g.vertices if vid not in removed)
    components = [tuple(sorted(component)) for component in nx.connected_components(view)]
    components.sort()
    return components


def max_component_size(g: TerminalGraph) -> int:
    """G∖T 中最大（弱）连通分量的大小 c，没有非终端时为 0"""
    return max((len(component) for component in weak_components(g, g.terminals)), default=0)


@dataclass(frozen=True)
class SubdivisionRecord:
    """
    终端-终端边到细分顶点 v_e 的映射
    """

    mapping: dict[Edge, str] = field(default_factory=dict)

    @property
    def reverse(self) -> dict[str, Edge]:
        return {vid: edge for edge, vid in self.mapping.items()}

    def __len__(self) -> int:
        return len(self.mapping)


def subdivision_id(u: str, v: str) -> str:
    return f"{SUBDIVISION_PREFIX}{u}_{v}"


def subdivide_terminal_edges(g: TerminalGraph) -> tuple[TerminalGraph, SubdivisionRecord]:
    """
    将每条终端-终端边 {a,b}（有向时为 (a,b)）替换为 {a,v_e},{v_e,b}

    v_e 是新的非终端，权重为 min(w(a), w(b))：割掉 v_e 的割总能换成割掉较轻的端点，
    因此输出图在 T 与 V'∖T 之间是二部图，且不改变任何终端割的值。单位权图中 v_e 仍是单位权。

    Raises:
        GraphStructureError: 输入不是 quasi-bipartite，或新 id 与已有顶点冲突
    """
    if not g.is_quasi_bipartite():
        raise GraphStructureError("输入图不是 quasi-bipartite，存在两端都不是终端的边")

    mapping: dict[Edge, str] = {}
    for u, v in g.terminal_terminal_edges():
        fresh = subdivision_id(u, v)
        if fresh in g.vertices or fresh in mapping.values():
            raise GraphStructureError(f"细分顶点 id {fresh} 与已有顶点冲突，请重命名以 {SUBDIVISION_PREFIX} 开头的顶点")
        mapping[(u, v)] = fresh

    if not mapping:
        return g, SubdivisionRecord()

    vertices = dict(g.vertices)
    for (u, v), fresh in mapping.items():
        vertices[fresh] = Vertex(weight=min(g.vertices[u].weight, g.vertices[v].weight))
    edges: list[Edge] = []
    for edge in g.edges:
        if edge in mapping:
            u, v = edge
            edges.extend([(u, mapping[edge]), (mapping[edge], v)])
        else:
            edges.append(edge)

    graph_logger.debug(f"细分 {len(mapping)} 条终端-终端边")
    return TerminalGraph.build(g.orientation, vertices, edges), SubdivisionRecord(mapping)


@dataclass(frozen=True)
class ComponentQuotient:
    """
    将 G∖T 的每个（弱）连通分量 C_i 收缩为一个非终端后得到的商图

    Attributes:
        quotient (TerminalGraph): 商图，终端保持不变
        component_map (dict[str, tuple[str, ...]]): 商图非终端到原顶点集合 C_i 的映射
        member_of (dict[str, str]): 原非终端到所属商图非终端的映射
    """

    quotient: TerminalGraph
    component_map: dict[str, tuple[str, ...]]
    member_of: dict[str, str]

    @property
    def component_count(self) -> int:
        return len(self.component_map)

    @property
    def max_component_size(self) -> int:
        return max((len(members) for members in self.component_map.values()), default=0)


def component_id(members: tuple[str, ...]) -> str:
    return f"{COMPONENT_PREFIX}{members[0]}"


def contract_nonterminal_components(g: TerminalGraph) -> ComponentQuotient:
    """
    收缩 G∖T 的所有（弱）连通分量

    商图中存在边 (t, C_i)（有向时还有 (C_i, t)）当且仅当原图中有对应方向的边连接 t 与 C_i 中的某个顶点。
    分量顶点 id 为 "__cmp_<分量最小 id>"。
    """
    component_map: dict[str, tuple[str, ...]] = {}
    member_of: dict[str, str] = {}
    for members in weak_components(g, g.terminals):
        cid = component_id(members)
        if cid in g.vertices:
            raise GraphStructureError(f"分量顶点 id {cid} 与已有顶点冲突，请重命名以 {COMPONENT_PREFIX} 开头的顶点")
        component_map[cid] = members
        member_of.update((vid, cid) for vid in members)

    vertices = {tid: g.vertices[tid] for tid in g.terminals}
    vertices.update((cid, Vertex()) for cid in component_map)

    edges = {(member_of.get(u, u), member_of.get(v, v)) for u, v in g.edges}
    edges = {(u, v) for u, v in edges if u != v}

    quotient = TerminalGraph.build(g.orientation, vertices, edges, merge_duplicates=True)
    return ComponentQuotient(quotient=quotient, component_map=component_map, member_of=member_of)


def component_passages(g: TerminalGraph, contraction: ComponentQuotient) -> set[tuple[str, str, str]]:
    """
    有向图中真正能穿过分量的终端路径 (a, C, b)

    要求存在 u, w ∈ C，使 (a,u)、(w,b) 是原图的边且 G[C] 中 u 可达 w。
    无向图的分量连通，商图中的每条路径都会出现在结果中。
    """
    passages: set[tuple[str, str, str]] = set()
    digraph = to_networkx(g)
    for cid, members in contraction.component_map.items():
        inner = digraph.subgraph(members)
        for a in contraction.quotient.predecessors(cid):
            reach: set[str] = set()
            for u in g.successors(a):
                if contraction.member_of.get(u) == cid and u not in reach:
                    reach.add(u)
                    reach.update(nx.descendants(inner, u))
            for b in contraction.quotient.successors(cid):
                if b != a and any(w in reach for w in g.predecessors(b)):
                    passages.add((a, cid, b))
    return passages


def copy_ids(vid: str, weight: int) -> tuple[str, ...]:
    if weight == 1:
        return (vid,)
    return tuple(f"{vid}{COPY_SEPARATOR}{i}" for i in range(1, weight + 1))


def expansion_copies(g: TerminalGraph) -> dict[str, tuple[str, ...]]:
    """每个顶点在 expand_weighted 结果中的副本 id"""
    return {vid: copy_ids(vid, vertex.weight) for vid, vertex in g.vertices.items()}


def expand_weighted(g: TerminalGraph) -> TerminalGraph:
    """
    将权重为 w(v) 的顶点替换为 w(v) 个单位权副本（独立集），副本继承邻居关系与终端标记

    权重为 1 的顶点保留原 id，其余副本 id 为 "<id>__<序号>"。
    """
    copies = expansion_copies(g)
    vertices: dict[str, Vertex] = {}
    for vid, vertex in g.vertices.items():
        for copy in copies[vid]:
            if copy in vertices or (copy != vid and copy in g.vertices):
                raise GraphStructureError(f"副本 id {copy} 与已有顶点冲突")
            vertices[copy] = Vertex(terminal=vertex.terminal)

    edges = [(cu, cv) for u, v in g.edges for cu in copies[u] for cv in copies[v]]
    return TerminalGraph.build(g.orientation, vertices, edges)

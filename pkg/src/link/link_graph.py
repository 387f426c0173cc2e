from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from itertools import permutations
from typing import TYPE_CHECKING, Literal

from src.core.exceptions import GraphStructureError
from src.graph import Edge, canonical_edge

if TYPE_CHECKING:
    from src.graph import TerminalGraph

LinkFlavor = Literal["undirected_link", "out_link", "in_link"]
Pair = tuple[str, str]
PathFilter = Callable[[str, str, str], bool]


@dataclass(frozen=True)
class LinkGraph:
    """
    有序终端对 (a,b) 与原图边之间的二部辅助图

    Attributes:
        flavor (LinkFlavor): undirected_link / out_link / in_link
        left (tuple[Pair, ...]): 所有 a ≠ b 的有序终端对，按 (a,b) 升序
        right (tuple[Edge, ...]): 原图的全部边，按规范顺序
        adjacency (dict[Pair, tuple[Edge, ...]]): 每个终端对相邻的边，按规范顺序
    """

    flavor: LinkFlavor
    left: tuple[Pair, ...]
    right: tuple[Edge, ...]
    adjacency: dict[Pair, tuple[Edge, ...]]

    def neighbors(self, pair: Pair) -> tuple[Edge, ...]:
        return self.adjacency.get(pair, ())

    def adjacencies(self) -> list[tuple[Pair, Edge]]:
        return [(pair, edge) for pair in self.left for edge in self.neighbors(pair)]

    def right_degree(self) -> dict[Edge, int]:
        degree = dict.fromkeys(self.right, 0)
        for _, edge in self.adjacencies():
            degree[edge] += 1
        return degree

    def __len__(self) -> int:
        return sum(len(edges) for edges in self.adjacency.values())


def _check_input(g: TerminalGraph, flavor: LinkFlavor) -> None:
    if (flavor == "undirected_link") == g.directed:
        raise GraphStructureError(f"{flavor} 与图的方向 {g.orientation} 不匹配")
    if not g.is_quasi_bipartite():
        raise GraphStructureError("输入图不是 quasi-bipartite")
    if g.terminal_terminal_edges():
        raise GraphStructureError("输入图含有终端-终端边，请先调用 subdivide_terminal_edges")


def build_link_graph(g: TerminalGraph, flavor: LinkFlavor, path_filter: PathFilter | None = None) -> LinkGraph:
    """
    构造 link graph

    对每条经过非终端 v 的长度为 2 的终端路径 a → v → b（a ≠ b）：
    undirected_link 与 out_link 将 (a,b) 连到第一条边 {a,v} / (a,v)，in_link 连到最后一条边 (v,b)。
    path_filter(a, v, b) 返回 False 的路径不产生连接。

    Raises:
        GraphStructureError: 方向不匹配，或输入含终端-终端边
    """
    _check_input(g, flavor)

    found: dict[Pair, set[Edge]] = {}
    for a in g.terminals:
        for v in g.successors(a):
            if g.is_terminal(v):
                continue
            for b in g.successors(v):
                if b == a or not g.is_terminal(b):
                    continue
                if path_filter is not None and not path_filter(a, v, b):
                    continue
                edge = (v, b) if flavor == "in_link" else canonical_edge(a, v, g.directed)
                found.setdefault((a, b), set()).add(edge)

    return LinkGraph(
        flavor=flavor,
        left=tuple(permutations(g.terminals, 2)),
        right=g.edges,
        adjacency={pair: tuple(sorted(edges)) for pair, edges in sorted(found.items())},
    )

"""
带种子的随机实例生成器，测试用

所有函数都接收显式的 random.Random 实例，同一种子总是生成同一个图。
"""

from __future__ import annotations

from itertools import combinations
from typing import TYPE_CHECKING

from .graph import Edge, Orientation, TerminalGraph, Vertex

if TYPE_CHECKING:
    import random


def _orientation(directed: bool) -> Orientation:
    return "directed" if directed else "undirected"


def _random_arcs(rng: random.Random, u: str, v: str, directed: bool) -> list[Edge]:
    if not directed:
        return [(u, v)]
    match rng.randrange(3):
        case 0:
            return [(u, v)]
        case 1:
            return [(v, u)]
        case _:
            return [(u, v), (v, u)]


def random_quasi_bipartite(rng: random.Random, k: int, n: int, p: float, *, directed: bool = False) -> TerminalGraph:
    """
    k 个终端 t0..、n 个非终端 n0..；每个终端-非终端对以概率 p 连边，终端-终端对以概率 p/2 连边

    有向时每条连边随机取正向、反向或双向。
    """
    terminals = [f"t{i}" for i in range(k)]
    others = [f"n{i}" for i in range(n)]
    vertices = {tid: Vertex(terminal=True) for tid in terminals}
    vertices.update((vid, Vertex()) for vid in others)

    edges: list[Edge] = []
    for tid in terminals:
        for vid in others:
            if rng.random() < p:
                edges.extend(_random_arcs(rng, tid, vid, directed))
    for a, b in combinations(terminals, 2):
        if rng.random() < p / 2:
            edges.extend(_random_arcs(rng, a, b, directed))
    return TerminalGraph.build(_orientation(directed), vertices, edges)


def _random_connected(rng: random.Random, members: list[str], directed: bool, extra: float = 0.3) -> list[Edge]:
    """随机生成树加若干额外边，保证（弱）连通"""
    edges: set[Edge] = set()
    for i in range(1, len(members)):
        parent = members[rng.randrange(i)]
        edges.update(_random_arcs(rng, parent, members[i], directed))
    for u, v in combinations(members, 2):
        if rng.random() < extra:
            edges.update(_random_arcs(rng, u, v, directed))
    return sorted(edges)


def random_tau_quasi_bipartite(
    rng: random.Random, k: int, tau: int, n_components: int, p: float, *, directed: bool = False
) -> TerminalGraph:
    """
    G∖T 由 n_components 个大小在 [1, tau] 内的连通分量组成，分量顶点 id 为 c<分量>_<序号>
    """
    terminals = [f"t{i}" for i in range(k)]
    vertices = {tid: Vertex(terminal=True) for tid in terminals}
    edges: set[Edge] = set()

    for index in range(n_components):
        members = [f"c{index}_{j}" for j in range(rng.randint(1, tau))]
        vertices.update((vid, Vertex()) for vid in members)
        edges.update(_random_connected(rng, members, directed))
        for tid in terminals:
            for vid in members:
                if rng.random() < p:
                    edges.update(_random_arcs(rng, tid, vid, directed))

    for a, b in combinations(terminals, 2):
        if rng.random() < p / 3:
            edges.update(_random_arcs(rng, a, b, directed))
    return TerminalGraph.build(_orientation(directed), vertices, edges, merge_duplicates=True)


def random_weighted_graph(
    rng: random.Random, n: int, p: float, max_weight: int = 4, *, directed: bool = False, k: int = 0
) -> TerminalGraph:
    """一般的点权图，前 k 个顶点为终端"""
    ids = [f"v{i}" for i in range(n)]
    vertices = {vid: Vertex(weight=rng.randint(1, max_weight), terminal=i < k) for i, vid in enumerate(ids)}
    edges: set[Edge] = set()
    for u, v in combinations(ids, 2):
        if rng.random() < p:
            edges.update(_random_arcs(rng, u, v, directed))
    return TerminalGraph.build(_orientation(directed), vertices, edges, merge_duplicates=True)


def planted_separator_graph(
    rng: random.Random, k: int, tau: int, x: int, clusters: int, *, directed: bool = False
) -> TerminalGraph:
    """
    植入大小为 x 的 τ-separator：x 个枢纽 h0.. 之外是若干大小不超过 τ 的簇，簇之间只经由枢纽相连

    终端从全部顶点中随机选取 k 个。
    """
    hubs = [f"h{i}" for i in range(x)]
    ids = list(hubs)
    edges: set[Edge] = set()
    for index in range(clusters):
        members = [f"q{index}_{j}" for j in range(rng.randint(1, tau))]
        ids.extend(members)
        edges.update(_random_connected(rng, members, directed))
        for vid in members:
            for hub in hubs:
                if rng.random() < 0.5:
                    edges.update(_random_arcs(rng, hub, vid, directed))
    for a, b in combinations(hubs, 2):
        if rng.random() < 0.5:
            edges.update(_random_arcs(rng, a, b, directed))

    terminals = set(rng.sample(ids, min(k, len(ids))))
    vertices = {vid: Vertex(terminal=vid in terminals) for vid in ids}
    return TerminalGraph.build(_orientation(directed), vertices, edges, merge_duplicates=True)


def complete_terminal_bipartite(k: int, n: int, *, directed: bool = False) -> TerminalGraph:
    """
    完全二部图 K_{T,N}：每个终端与每个非终端相连（有向时两个方向都有）
    """
    terminals = [f"t{i}" for i in range(k)]
    others = [f"n{i}" for i in range(n)]
    vertices = {tid: Vertex(terminal=True) for tid in terminals}
    vertices.update((vid, Vertex()) for vid in others)
    edges: list[Edge] = []
    for tid in terminals:
        for vid in others:
            edges.append((tid, vid))
            if directed:
                edges.append((vid, tid))
    return TerminalGraph.build(_orientation(directed), vertices, edges)

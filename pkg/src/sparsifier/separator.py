from __future__ import annotations

from itertools import combinations
from typing import TYPE_CHECKING

import networkx as nx

from src.core.constants import BRUTEFORCE_MAX_VERTICES
from src.core.exceptions import GraphStructureError, GuardExceededError, InvalidArgumentError
from src.graph import to_networkx, weak_components
from src.schemas.sparsifier import SeparatorResult, SparsifierResult

from .quasi_bipartite import require_unweighted, sparsifier_logger
from .tau import sparsify_tau

if TYPE_CHECKING:
    from collections.abc import Iterable

    from src.graph import TerminalGraph


def _check_tau(tau: int) -> None:
    if tau < 1:
        raise InvalidArgumentError(f"τ 必须 >= 1，得到 {tau}")


def is_tau_separator(g: TerminalGraph, separator: Iterable[str], tau: int) -> bool:
    """G∖S 的每个（弱）连通分量都不超过 τ 个顶点"""
    return all(len(component) <= tau for component in weak_components(g, separator))


def find_tau_separator(g: TerminalGraph, tau: int) -> SeparatorResult:
    """
    贪心求 τ-separator

    只要 G∖S' 还有超过 τ 个顶点的分量，就取最小 id 的超大分量，从其最小 id 顶点出发按 id 升序做广度优先搜索，
    把最先到达的 τ+1 个顶点加入 S'。若 G 有大小为 x 的 τ-separator，则 |S'| ≤ (τ+1)x。
    τ = 1 时即经典的极大匹配 2-近似点覆盖。

    Raises:
        InvalidArgumentError: τ < 1
    """
    _check_tau(tau)
    nx_graph = to_networkx(g, weak=True)
    separator: set[str] = set()
    rounds = 0
    while True:
        oversized = next((c for c in weak_components(g, separator) if len(c) > tau), None)
        if oversized is None:
            break
        root = oversized[0]
        view = nx_graph.subgraph(vid for vid in g.vertices if vid not in separator)
        picked = [root] + [v for _, v in nx.bfs_edges(view, root, sort_neighbors=sorted)][:tau]
        separator.update(picked)
        rounds += 1

    sparsifier_logger.debug(f"贪心 {tau}-separator: {rounds} 轮，|S'|={len(separator)}")
    return SeparatorResult(separator=tuple(sorted(separator)), tau=tau, rounds=rounds)


def find_min_tau_separator(g: TerminalGraph, tau: int) -> SeparatorResult:
    """
    穷举求最小 τ-separator（按基数递增、同基数按字典序取第一个），|V| ≤ 20

    Raises:
        GuardExceededError: 顶点数超过穷举上限
    """
    _check_tau(tau)
    ids = list(g.vertices)
    if len(ids) > BRUTEFORCE_MAX_VERTICES:
        raise GuardExceededError(f"|V| = {len(ids)} 超过穷举上限 {BRUTEFORCE_MAX_VERTICES}")
    for size in range(len(ids) + 1):
        for combo in combinations(ids, size):
            if is_tau_separator(g, combo, tau):
                return SeparatorResult(separator=combo, tau=tau)
    raise AssertionError("V 本身总是 τ-separator")


def sparsify_with_separator(
    g: TerminalGraph, tau: int, separator: Iterable[str] | None = None
) -> SparsifierResult:
    """
    扩展终端流程：把 τ-separator S' 提升为终端，对 (G, T ∪ S') 做 τ 稀疏化，再恢复原终端标记

    对 T ∪ S' 保持割值的稀疏图对原终端集合 T 同样保持割值。

    Args:
        g (TerminalGraph): 单位权图
        tau (int): τ
        separator: 可选，直接给定的 τ-separator；默认使用贪心结果

    Raises:
        InvalidArgumentError: τ < 1，或给定集合不是 τ-separator
        GraphStructureError: 带权输入，或给定集合含有不在图中的顶点
    """
    _check_tau(tau)
    require_unweighted(g)

    if separator is None:
        found = find_tau_separator(g, tau)
    else:
        chosen = tuple(sorted(set(separator)))
        unknown = [vid for vid in chosen if vid not in g.vertices]
        if unknown:
            raise GraphStructureError(f"separator 中的顶点不在图中: {unknown}")
        if not is_tau_separator(g, chosen, tau):
            raise InvalidArgumentError(f"给定集合不是 {tau}-separator")
        found = SeparatorResult(separator=chosen, tau=tau)

    extended = set(g.terminals) | set(found.separator)
    inner = sparsify_tau(g.with_terminals(extended))
    sparsifier = inner.sparsifier.with_terminals(g.terminals)

    stats = inner.stats.model_copy(
        update={
            "construction": "separator",
            "k": g.k,
            "k_effective": len(extended),
            "nonterminals": len(sparsifier.nonterminals),
            "tau": tau,
            "separator": found.size,
            "rounds": found.rounds,
        }
    )
    sparsifier_logger.debug(
        f"扩展终端稀疏化: τ={tau} |S'|={found.size} |T'|={len(extended)} -> {sparsifier.summary()}"
    )
    return SparsifierResult(sparsifier=sparsifier, provenance=inner.provenance, stats=stats)


def sparsify_with_vertex_cover(g: TerminalGraph) -> SparsifierResult:
    """τ = 1：贪心点覆盖与 T 一起作为终端，图变为 quasi-bipartite"""
    return sparsify_with_separator(g, 1)

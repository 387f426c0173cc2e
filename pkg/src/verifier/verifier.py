from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import TYPE_CHECKING

from src.core.constants import (
    BIPARTITION_MAX_TERMINALS,
    BRUTEFORCE_MAX_VERTICES,
    FULL_MAX_TERMINALS,
    PARANOID_MAX_TERMINALS,
)
from src.core.exceptions import GraphStructureError, GuardExceededError, InvalidArgumentError
from src.cut import mincut, mincut_bruteforce
from src.schemas.cut import CutQuery
from src.schemas.verifier import VerificationReport, VerifyMode, Witness
from src.utils.logging import logger
from src.utils.tools import chunk_ranges

if TYPE_CHECKING:
    from src.graph import TerminalGraph

verifier_logger = logger.bind(name="verifier")

MODE_GUARDS: dict[str, int] = {
    "bipartition": BIPARTITION_MAX_TERMINALS,
    "full": FULL_MAX_TERMINALS,
    "paranoid": PARANOID_MAX_TERMINALS,
}


def enumerate_queries(terminals: tuple[str, ...], mode: VerifyMode) -> list[CutQuery]:
    """
    按检查顺序列出全部查询

    - bipartition: 所有 (A, T∖A)，按 (|A|, A) 排序
    - full: 所有不相交的 (A, D)，B = T∖(A∪D)，按 (|A|+|D|, A, D) 排序
    - paranoid: 所有 (A, B)，允许相交，D = ∅，按 (|A|+|B|, A, B) 排序
    """
    keyed: list[tuple[tuple, CutQuery]] = []
    match mode:
        case "bipartition":
            for choice in product((True, False), repeat=len(terminals)):
                side = tuple(t for t, inside in zip(terminals, choice, strict=True) if inside)
                rest = tuple(t for t, inside in zip(terminals, choice, strict=True) if not inside)
                keyed.append(((len(side), side), CutQuery.of(side, rest)))
        case "full":
            # 0: A, 1: D, 2: B
            for labels in product(range(3), repeat=len(terminals)):
                groups: list[list[str]] = [[], [], []]
                for t, label in zip(terminals, labels, strict=True):
                    groups[label].append(t)
                side, deleted, rest = map(tuple, groups)
                keyed.append(((len(side) + len(deleted), side, deleted), CutQuery.of(side, rest, deleted)))
        case "paranoid":
            for labels in product(range(4), repeat=len(terminals)):
                side = tuple(t for t, label in zip(terminals, labels, strict=True) if label & 1)
                other = tuple(t for t, label in zip(terminals, labels, strict=True) if label & 2)
                keyed.append(((len(side) + len(other), side, other), CutQuery.of(side, other)))
        case _:
            raise InvalidArgumentError(f"未知的验证模式: {mode}")
    keyed.sort(key=lambda item: item[0])
    return [query for _, query in keyed]


def _within_bruteforce(g: TerminalGraph, q: CutQuery) -> bool:
    return len(g.vertices) - len(q.deleted) <= BRUTEFORCE_MAX_VERTICES


def _first_failure(
    g: TerminalGraph, h: TerminalGraph, queries: list[CutQuery], offset: int, cross_check: bool
) -> tuple[int, Witness] | None:
    """返回 queries 中第一个不一致查询的全局下标与见证"""
    for index, query in enumerate(queries, start=offset):
        value_g = mincut(g, query).value
        value_h = mincut(h, query).value
        if value_g == value_h:
            continue

        if cross_check:
            if _within_bruteforce(g, query) and _within_bruteforce(h, query):
                value_g = mincut_bruteforce(g, query).value
                value_h = mincut_bruteforce(h, query).value
                if value_g == value_h:
                    verifier_logger.warning(f"第 {index} 个查询的不一致未被穷举确认，已忽略: {query}")
                    continue
            else:
                verifier_logger.debug(f"第 {index} 个查询超出穷举上限，跳过交叉验证")

        witness = Witness(
            sources=query.sources,
            sinks=query.sinks,
            deleted=query.deleted,
            value_in_g=value_g,
            value_in_sparsifier=value_h,
        )
        return index, witness
    return None


def _check_pair(g: TerminalGraph, h: TerminalGraph, mode: VerifyMode) -> None:
    if g.orientation != h.orientation:
        raise GraphStructureError(f"方向不一致: {g.orientation} vs {h.orientation}")
    missing = [t for t in g.terminals if t not in h.vertices]
    if missing:
        raise GraphStructureError(f"稀疏图缺少终端: {missing}")
    if set(h.terminals) != g.terminal_set:
        raise GraphStructureError(f"终端集合不一致: {list(g.terminals)} vs {list(h.terminals)}")
    if mode not in MODE_GUARDS:
        raise InvalidArgumentError(f"未知的验证模式: {mode}")
    if g.k > MODE_GUARDS[mode]:
        raise GuardExceededError(f"{mode} 模式最多支持 {MODE_GUARDS[mode]} 个终端，输入有 {g.k} 个")


def verify_sparsifier(
    g: TerminalGraph,
    h: TerminalGraph,
    mode: VerifyMode = "full",
    *,
    cross_check: bool = False,
    jobs: int = 1,
) -> VerificationReport:
    """
    穷举验证 h 是否是 (g, T) 的点割稀疏图

    查询按 enumerate_queries 的顺序检查，报告第一个不一致的查询。
    jobs > 1 时把查询切成连续的若干段交给进程池，合并时取全局最靠前的失败，结果与串行一致。

    Args:
        g (TerminalGraph): 原图
        h (TerminalGraph): 候选稀疏图
        mode (VerifyMode): bipartition / full / paranoid
        cross_check (bool): 发现不一致时用穷举算法复核
        jobs (int): 并行进程数

    Raises:
        GraphStructureError: 方向或终端集合不一致
        GuardExceededError: 终端数超出该模式上限
    """
    _check_pair(g, h, mode)
    queries = enumerate_queries(g.terminals, mode)
    verifier_logger.debug(f"{mode} 验证: {g.summary()} vs {h.summary()}，共 {len(queries)} 个查询")

    ranges = chunk_ranges(len(queries), jobs)
    if jobs > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=len(ranges)) as executor:
            futures = [
                executor.submit(_first_failure, g, h, queries[start:stop], start, cross_check)
                for start, stop in ranges
            ]
            failures = [result for future in futures if (result := future.result()) is not None]
        failure = min(failures, key=lambda item: item[0], default=None)
    else:
        failure = _first_failure(g, h, queries, 0, cross_check)

    if failure is None:
        report = VerificationReport(mode=mode, queries_checked=len(queries), outcome="pass")
    else:
        index, witness = failure
        report = VerificationReport(mode=mode, queries_checked=index + 1, outcome="fail", witness=witness)
        verifier_logger.info(f"验证失败: {report.text()}")
    return report


def verify_subgraph(g: TerminalGraph, h: TerminalGraph) -> bool:
    """V(h) ⊆ V(g)、E(h) ⊆ E(g)，且共有顶点的权重与终端标记一致"""
    if g.orientation != h.orientation:
        return False
    for vid, vertex in h.vertices.items():
        if g.vertices.get(vid) != vertex:
            return False
    return h.edge_set <= g.edge_set


def replay_witness(g: TerminalGraph, h: TerminalGraph, witness: Witness) -> tuple[int, int]:
    """直接用割算法重算见证查询，返回 (原图割值, 稀疏图割值)"""
    query = CutQuery.of(witness.sources, witness.sinks, witness.deleted)
    return mincut(g, query).value, mincut(h, query).value

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import TYPE_CHECKING

from src.core.constants import BRUTEFORCE_MAX_VERTICES, VECTOR_MAX_TERMINALS
from src.core.exceptions import GuardExceededError, QueryError
from src.schemas.cut import CutQuery, CutResult, MincutVector
from src.utils.logging import logger

from .flow import FlowNetwork

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from src.graph import TerminalGraph

cut_logger = logger.bind(name="cut")


def check_query(g: TerminalGraph, q: CutQuery) -> None:
    """
    Raises:
        QueryError: 查询中的顶点不在图中，或 D 与 A∪B 相交
    """
    for name, ids in (("A", q.sources), ("B", q.sinks), ("D", q.deleted)):
        unknown = [vid for vid in ids if vid not in g.vertices]
        if unknown:
            raise QueryError(f"{name} 中的顶点不在图中: {unknown}")
    overlap = set(q.deleted) & (set(q.sources) | set(q.sinks))
    if overlap:
        raise QueryError(f"删除集 D 与 A∪B 相交: {sorted(overlap)}")


def mincut(g: TerminalGraph, q: CutQuery) -> CutResult:
    """
    精确的最小权 (A,B)-点割，C 允许与 A∪B 相交

    在拆点网络上求最大流：每个 v ∈ V∖D 拆为 v_in → v_out（容量 w(v)），每条弧 (u,v) 变为
    u_out → v_in（容量 W+1，W 为总权重），超级源连向 a_in，b_out 连向超级汇。
    见证割为残量网络中源点可达侧的割。
    """
    check_query(g, q)
    if not q.sources or not q.sinks:
        return CutResult(value=0, witness=())

    ids = list(g.vertices)
    index = {vid: i for i, vid in enumerate(ids)}
    deleted = set(q.deleted)
    infinity = g.total_weight + 1

    size = 2 * len(ids) + 2
    source, sink = size - 2, size - 1
    network = FlowNetwork(size)
    for vid in ids:
        if vid not in deleted:
            network.add_arc(2 * index[vid], 2 * index[vid] + 1, g.vertices[vid].weight)
    for u, v in g.edges:
        if u in deleted or v in deleted:
            continue
        network.add_arc(2 * index[u] + 1, 2 * index[v], infinity)
        if not g.directed:
            network.add_arc(2 * index[v] + 1, 2 * index[u], infinity)
    for vid in q.sources:
        network.add_arc(source, 2 * index[vid], infinity)
    for vid in q.sinks:
        network.add_arc(2 * index[vid] + 1, sink, infinity)

    value = network.max_flow(source, sink)
    seen = network.reachable(source)
    witness = tuple(
        vid for vid in ids if vid not in deleted and seen[2 * index[vid]] and not seen[2 * index[vid] + 1]
    )
    return CutResult(value=value, witness=witness)


def is_vertex_cut(g: TerminalGraph, q: CutQuery, cut: Iterable[str]) -> bool:
    """在 g∖(D∪C) 中沿边方向搜索，判断 A∖C 是否还能到达 B∖C"""
    blocked = set(q.deleted) | set(cut)
    targets = {vid for vid in q.sinks if vid not in blocked}
    frontier = deque(vid for vid in q.sources if vid not in blocked)
    seen = set(frontier)
    while frontier:
        node = frontier.popleft()
        if node in targets:
            return False
        for nxt in g.successors(node):
            if nxt not in seen and nxt not in blocked:
                seen.add(nxt)
                frontier.append(nxt)
    return True


def _candidates(g: TerminalGraph, q: CutQuery) -> list[str]:
    deleted = set(q.deleted)
    candidates = [vid for vid in g.vertices if vid not in deleted]
    if len(candidates) > BRUTEFORCE_MAX_VERTICES:
        raise GuardExceededError(f"|V∖D| = {len(candidates)} 超过穷举上限 {BRUTEFORCE_MAX_VERTICES}")
    return candidates


def mincut_bruteforce(g: TerminalGraph, q: CutQuery) -> CutResult:
    """
    穷举所有 C ⊆ V∖D 求最小点割，作为独立于流算法的对照

    按基数递增枚举；权重至少为基数，所以基数达到当前最优值后即可停止。
    """
    check_query(g, q)
    candidates = _candidates(g, q)

    best: CutResult | None = None
    for size in range(len(candidates) + 1):
        if best is not None and size >= best.value:
            break
        for combo in combinations(candidates, size):
            weight = g.weight_of(combo)
            if best is not None and weight >= best.value:
                continue
            if is_vertex_cut(g, q, combo):
                best = CutResult(value=weight, witness=combo)

    if best is None:
        raise QueryError("找不到点割")
    return best


def enumerate_min_cuts(g: TerminalGraph, q: CutQuery) -> list[tuple[str, ...]]:
    """
    列出所有权重等于最小割值的 (A,B)-点割，按字典序排列
    """
    candidates = _candidates(g, q)
    value = mincut(g, q).value

    found: list[tuple[str, ...]] = []
    for size in range(value + 1):
        for combo in combinations(candidates, size):
            if g.weight_of(combo) == value and is_vertex_cut(g, q, combo):
                found.append(combo)
    found.sort()
    return found


def mincut_vector(g: TerminalGraph, groups: Mapping[str, Iterable[str]] | None = None) -> MincutVector:
    """
    终端二划分最小割向量，第 m 项为 mincut(A_m, T∖A_m)

    Args:
        g (TerminalGraph): 图
        groups: 可选，将每个标签映射到一组顶点，按组划分（如带权图展开后的副本集合）；默认每个终端自成一组
    """
    if groups is None:
        groups = {tid: (tid,) for tid in g.terminals}
    labels = tuple(sorted(groups))
    if len(labels) > VECTOR_MAX_TERMINALS:
        raise GuardExceededError(f"终端数 {len(labels)} 超过上限 {VECTOR_MAX_TERMINALS}")

    members = [tuple(groups[label]) for label in labels]
    entries: list[int] = []
    for mask in range(1 << len(labels)):
        side: list[str] = []
        other: list[str] = []
        for i, group in enumerate(members):
            (side if mask >> i & 1 else other).extend(group)
        entries.append(mincut(g, CutQuery.of(side, other)).value)

    cut_logger.debug(f"计算最小割向量: {g.summary()} 共 {len(entries)} 项")
    return MincutVector(terminals=labels, entries=tuple(entries))


def every_min_cut_contains(g: TerminalGraph, q: CutQuery, vid: str) -> bool:
    """
    判断每个最小 (A,B)-点割是否都包含 vid

    把 vid 的权重提到 W+1 后重新求割：若不含 vid 的最优割比原最小值大，则 vid 是必选的。
    vid ∈ A∩B 时必然在割中；vid ∈ D 时不可能在割中。
    """
    if vid in q.deleted:
        return False
    if vid in q.sources and vid in q.sinks:
        return True
    value = mincut(g, q).value
    avoiding = mincut(g.with_weight(vid, g.total_weight + 1), q).value
    return avoiding > value

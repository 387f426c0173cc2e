from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import TYPE_CHECKING

import numpy as np

from src.core.constants import LOWERBOUND_MAX_K
from src.core.exceptions import GuardExceededError, InvalidArgumentError
from src.cut import enumerate_min_cuts, every_min_cut_contains, mincut, mincut_vector
from src.schemas.cut import CutQuery, MincutVector
from src.schemas.lowerbound import LowerBoundInstance, VijCheck
from src.utils.logging import logger

from .instance import generate_gk, pair_indices, xij_partition

if TYPE_CHECKING:
    from collections.abc import Iterable

lowerbound_logger = logger.bind(name="lowerbound")

Removed = tuple[tuple[int, int], ...]


def _check_k(k: int) -> None:
    if k < 2:
        raise InvalidArgumentError(f"k 必须 >= 2，得到 {k}")
    if k > LOWERBOUND_MAX_K:
        raise GuardExceededError(f"k = {k} 超过上限 {LOWERBOUND_MAX_K}")


def check_forced_terminal(inst: LowerBoundInstance, i: int, side: Iterable[str]) -> bool:
    """
    穷举 (X, T∖X) 的全部最小割，判断是否都包含 a_i

    前置条件：a_i 与 d_i 分处 X 与 T∖X 两侧（X 可以是任意一侧）。

    Raises:
        InvalidArgumentError: 下标越界、X 含非终端，或 a_i 与 d_i 在同一侧
        GuardExceededError: 实例超出穷举上限
    """
    if not 1 <= i <= inst.k:
        raise InvalidArgumentError(f"下标 {i} 不在 [1, {inst.k}] 内")
    side = set(side)
    terminals = set(inst.graph.terminals)
    if not side <= terminals:
        raise InvalidArgumentError(f"X 必须是终端子集，多出 {sorted(side - terminals)}")
    if (inst.a(i) in side) == (inst.d(i) in side):
        raise InvalidArgumentError(f"{inst.a(i)} 与 {inst.d(i)} 必须分处 X 与 T∖X 两侧")

    query = CutQuery.of(side, terminals - side)
    cuts = enumerate_min_cuts(inst.graph, query)
    forced = all(inst.a(i) in cut for cut in cuts)
    lowerbound_logger.debug(f"k={inst.k} i={i} X={sorted(side)}: {len(cuts)} 个最小割，包含 a{i}: {forced}")
    return forced


def check_vij_necessity(inst: LowerBoundInstance, i: int, j: int, *, exhaustive: bool = False) -> VijCheck:
    """
    X_{i,j} 处的最小割值，以及 v_i_j 是否属于每一个最小割

    v_i_j 存在时值为 2k-3 且必选；被删除时值为 2k-4。
    exhaustive=True 时用 enumerate_min_cuts 逐个检查，否则抬高 v_i_j 的权重后比较割值。
    """
    query = xij_partition(inst, i, j)
    value = mincut(inst.graph, query).value
    vid = inst.v(i, j)
    if vid not in inst.graph.vertices:
        return VijCheck(value=value, forced=False)
    if exhaustive:
        forced = all(vid in cut for cut in enumerate_min_cuts(inst.graph, query))
    else:
        forced = every_min_cut_contains(inst.graph, query, vid)
    return VijCheck(value=value, forced=forced)


def family_members(k: int) -> list[Removed]:
    """{G^B_k} 的全部删除集 B，按位掩码顺序（第 m 位对应 pair_indices(k)[m]）"""
    pairs = pair_indices(k)
    return [tuple(pair for bit, pair in enumerate(pairs) if mask >> bit & 1) for mask in range(1 << len(pairs))]


def _family_vector(k: int, removed: Removed) -> MincutVector:
    return mincut_vector(generate_gk(k, removed).graph)


def family_mincut_vectors(k: int, jobs: int = 1) -> dict[Removed, MincutVector]:
    """
    计算族中每个实例的最小割向量

    jobs > 1 时用进程池并行，结果与串行一致。
    """
    _check_k(k)
    members = family_members(k)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            vectors = list(executor.map(_family_vector, [k] * len(members), members))
    else:
        vectors = [_family_vector(k, removed) for removed in members]
    return dict(zip(members, vectors, strict=True))


def count_distinct_vectors(k: int, jobs: int = 1) -> int:
    vectors = family_mincut_vectors(k, jobs)
    rows = np.stack([vector.array for vector in vectors.values()])
    return int(np.unique(rows, axis=0).shape[0])


def check_family_distinctness(k: int, jobs: int = 1) -> bool:
    """
    族中任意两个实例的最小割向量都不同

    对每一对 (B_1, B_2)，还要求至少在一个 (i,j) ∈ B_1 △ B_2 的 X_{i,j} 坐标上不同。
    """
    vectors = family_mincut_vectors(k, jobs)
    base = generate_gk(k)
    layout = next(iter(vectors.values()))
    coordinate = {(i, j): layout.index_of(xij_partition(base, i, j).sources) for i, j in pair_indices(k)}

    for (first, u), (second, w) in combinations(vectors.items(), 2):
        differing = set(u.differing_indices(w))
        if not differing:
            lowerbound_logger.warning(f"k={k}: B={first} 与 B={second} 的最小割向量相同")
            return False
        witnesses = {coordinate[pair] for pair in set(first) ^ set(second)}
        if not differing & witnesses:
            lowerbound_logger.warning(f"k={k}: B={first} 与 B={second} 不在任何 X_(i,j) 坐标上不同")
            return False

    lowerbound_logger.info(f"k={k}: {len(vectors)} 个最小割向量两两不同")
    return True


def check_subgraph_necessity(k: int) -> bool:
    """
    删除任一 v_i_j 都会改变 X_{i,j} 处的最小割，所以 G_k 的子图稀疏化必须保留全部 C(k,2) 个非终端
    """
    _check_k(k)
    base = generate_gk(k)
    for i, j in pair_indices(k):
        query = xij_partition(base, i, j)
        before = mincut(base.graph, query).value
        after = mincut(base.graph.without([base.v(i, j)]), query).value
        if before == after:
            lowerbound_logger.warning(f"k={k}: 删除 v_{i}_{j} 后 X_({i},{j}) 的割值未变 ({before})")
            return False
    return True

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from src.utils.logging import logger

if TYPE_CHECKING:
    from src.graph import Edge

    from .link_graph import LinkGraph, Pair

link_logger = logger.bind(name="link")


@dataclass(frozen=True)
class Matching:
    """
    link graph 上的匹配，pairs 按终端对升序
    """

    pairs: tuple[tuple[Pair, Edge], ...] = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def edge_of(self, pair: Pair) -> Edge | None:
        return next((edge for left, edge in self.pairs if left == pair), None)

    def is_valid_for(self, link: LinkGraph) -> bool:
        lefts = [pair for pair, _ in self.pairs]
        rights = [edge for _, edge in self.pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            return False
        return all(edge in link.neighbors(pair) for pair, edge in self.pairs)


def maximum_matching(link: LinkGraph) -> Matching:
    """
    增广路算法求最大匹配

    按升序依次处理左侧终端对，每次用深度优先搜索找增广路，邻接边按规范顺序扫描。
    同一输入总是得到同一个匹配。
    """
    match_left: dict[Pair, Edge] = {}
    match_right: dict[Edge, Pair] = {}

    for root in link.left:
        if not link.neighbors(root):
            continue

        visited: set[Edge] = set()
        cursor = {root: 0}
        stack = [root]
        free: Edge | None = None
        while stack:
            node = stack[-1]
            options = link.neighbors(node)
            if cursor[node] >= len(options):
                stack.pop()
                continue
            edge = options[cursor[node]]
            cursor[node] += 1
            if edge in visited:
                continue
            visited.add(edge)

            owner = match_right.get(edge)
            if owner is None:
                free = edge
                break
            cursor[owner] = 0
            stack.append(owner)

        if free is None:
            continue
        # 栈上正好是增广路上的左侧顶点，自顶向下翻转
        for node in reversed(stack):
            previous = match_left.get(node)
            match_left[node] = free
            match_right[free] = node
            free = previous

    matching = Matching(tuple(sorted(match_left.items())))
    link_logger.debug(f"{link.flavor}: |L|={len(link.left)} |adj|={len(link)} 匹配大小 {matching.size}")
    return matching

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """
    整数容量的有向流网络，分层图 + 阻塞流（Dinic）求最大流

    弧以成对的方式存储：弧 e 的反向弧是 e ^ 1。
    """

    def __init__(self, size: int) -> None:
        self.size = size
        self.adjacency: list[list[int]] = [[] for _ in range(size)]
        self.heads: list[int] = []
        self.capacities: list[int] = []

    def add_arc(self, tail: int, head: int, capacity: int) -> int:
        index = len(self.heads)
        self.adjacency[tail].append(index)
        self.heads.append(head)
        self.capacities.append(capacity)
        self.adjacency[head].append(index + 1)
        self.heads.append(tail)
        self.capacities.append(0)
        return index

    def _levels(self, source: int, sink: int) -> list[int] | None:
        level = [-1] * self.size
        level[source] = 0
        queue = deque([source])
        heads, capacities = self.heads, self.capacities
        while queue:
            node = queue.popleft()
            for arc in self.adjacency[node]:
                if capacities[arc] > 0 and level[heads[arc]] < 0:
                    level[heads[arc]] = level[node] + 1
                    queue.append(heads[arc])
        return level if level[sink] >= 0 else None

    def _blocking_flow(self, source: int, sink: int, level: list[int]) -> int:
        heads, capacities, adjacency = self.heads, self.capacities, self.adjacency
        cursor = [0] * self.size
        total = 0

        while True:
            path: list[int] = []
            node = source
            while node != sink:
                arcs = adjacency[node]
                advanced = False
                while cursor[node] < len(arcs):
                    arc = arcs[cursor[node]]
                    if capacities[arc] > 0 and level[heads[arc]] == level[node] + 1:
                        path.append(arc)
                        node = heads[arc]
                        advanced = True
                        break
                    cursor[node] += 1

                if advanced:
                    continue
                if node == source:
                    return total
                # 死路，回退一步并跳过这条弧
                level[node] = -1
                arc = path.pop()
                node = heads[arc ^ 1]
                cursor[node] += 1

            bottleneck = min(capacities[arc] for arc in path)
            for arc in path:
                capacities[arc] -= bottleneck
                capacities[arc ^ 1] += bottleneck
            total += bottleneck

    def max_flow(self, source: int, sink: int) -> int:
        if source == sink:
            raise ValueError("源点与汇点相同")
        flow = 0
        while (level := self._levels(source, sink)) is not None:
            flow += self._blocking_flow(source, sink, level)
        return flow

    def reachable(self, source: int) -> list[bool]:
        """残量网络中从 source 可达的节点"""
        seen = [False] * self.size
        seen[source] = True
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for arc in self.adjacency[node]:
                head = self.heads[arc]
                if self.capacities[arc] > 0 and not seen[head]:
                    seen[head] = True
                    queue.append(head)
        return seen

import os
import time
from collections.abc import Iterable


class Timer:
    def __init__(self):
        self.start_time = 0
        self.costs = []

    @property
    def total_cost(self) -> float:
        return sum(self.costs)

    @property
    def last_cost(self) -> float:
        return self.costs[-1] if self.costs else 0

    @property
    def cost(self) -> float:
        return self.last_cost

    def __enter__(self):
        self.start_time = time.monotonic()
        return self

    def __exit__(self, exc_type=None, exc_val=None, exc_tb=None):
        self.costs.append(time.monotonic() - self.start_time)


def split_list(text: str | None) -> list[str]:
    """
    解析逗号分隔的列表，忽略空白项

    :param text: 形如 "a1,d2, d3" 的字符串
    :return: 去除空白后的非空项
    """
    if not text:
        return []
    return [item.strip() for item in text.split(",") if item.strip()]


def fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def fmt_set(items: Iterable[str]) -> str:
    return "{" + ",".join(sorted(items)) + "}"


def default_jobs() -> int:
    return os.cpu_count() or 1


def chunk_ranges(total: int, chunks: int) -> list[tuple[int, int]]:
    """
    将 [0, total) 切成至多 chunks 段连续区间

    :return: [(start, stop), ...]，按 start 升序，不含空区间
    """
    chunks = max(1, min(chunks, total))
    size, rest = divmod(total, chunks)
    ranges = []
    start = 0
    for index in range(chunks):
        stop = start + size + (1 if index < rest else 0)
        if stop > start:
            ranges.append((start, stop))
        start = stop
    return ranges

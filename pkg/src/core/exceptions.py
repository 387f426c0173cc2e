from __future__ import annotations


class SparsifierError(ValueError):
    """
    所有领域异常的基类

    继承 ValueError，调用方可以统一按 ValueError 捕获
    """


class GraphFormatError(SparsifierError):
    """
    图文本格式错误

    Attributes:
        line (int | None): 出错的行号（从 1 开始），无法定位时为 None
    """

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        self.reason = message
        super().__init__(f"第 {line} 行: {message}" if line is not None else message)


class GraphStructureError(SparsifierError):
    """图结构不满足操作的前置条件，如非 quasi-bipartite、方向不匹配、带权输入、id 冲突"""


class QueryError(SparsifierError):
    """割查询不合法"""


class GuardExceededError(SparsifierError):
    """穷举规模超出上限"""


class InvalidArgumentError(SparsifierError):
    """参数取值不合法，如 τ < 1、k < 2、下标越界"""

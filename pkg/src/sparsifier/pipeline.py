from __future__ import annotations

from typing import TYPE_CHECKING

from src.core.exceptions import InvalidArgumentError
from src.graph import max_component_size

from .quasi_bipartite import sparsifier_logger, sparsify_qb
from .separator import sparsify_with_separator
from .tau import sparsify_tau

if TYPE_CHECKING:
    from src.graph import TerminalGraph
    from src.schemas.sparsifier import SparsifierResult, SparsifyMode


def sparsify(g: TerminalGraph, mode: SparsifyMode = "auto", tau: int | None = None) -> SparsifierResult:
    """
    按模式选择构造

    - auto: 给定 tau 时走扩展终端流程，否则 c ≤ 1 用 quasi-bipartite 构造，c > 1 用 τ 构造
    - qb / tau: 对应构造
    - separator: 扩展终端流程，必须给定 tau
    """
    if mode == "auto":
        if tau is not None:
            mode = "separator"
        else:
            mode = "qb" if max_component_size(g) <= 1 else "tau"
        sparsifier_logger.debug(f"auto 模式选择 {mode}")

    match mode:
        case "qb":
            return sparsify_qb(g)
        case "tau":
            return sparsify_tau(g)
        case "separator":
            if tau is None:
                raise InvalidArgumentError("separator 模式需要指定 τ")
            return sparsify_with_separator(g, tau)
        case _:
            raise InvalidArgumentError(f"未知的稀疏化模式: {mode}")


def size_bounds(result: SparsifierResult) -> tuple[int, int]:
    """
    构造保证的 (|V'∖T| 上限, |E'| 上限)

    quasi-bipartite: k(k-1) 与 2k(k-1)；τ: c·k(k-1) 与 k(k-1)(2c+c²)；有向时均翻倍。
    扩展终端流程中 k 取 |T ∪ S'|，|V'∖T| 的上限再加上 |S'|。
    """
    stats = result.stats
    k = stats.k_effective
    pairs = k * (k - 1)
    factor = 2 if stats.directed else 1
    c = max(stats.c or 1, 1)
    # 被提升的 separator 顶点在输出中恢复为非终端
    promoted = stats.separator or 0
    if stats.construction == "qb" or c == 1:
        return factor * pairs + promoted, 2 * factor * pairs
    return factor * c * pairs + promoted, factor * pairs * (2 * c + c * c)


def check_size_bounds(result: SparsifierResult) -> bool:
    max_nonterminals, max_edges = size_bounds(result)
    stats = result.stats
    ok = stats.nonterminals <= max_nonterminals and stats.edges <= max_edges
    if not ok:
        sparsifier_logger.warning(
            f"超出规模上界: |V'∖T|={stats.nonterminals} (上限 {max_nonterminals}) |E'|={stats.edges} (上限 {max_edges})"
        )
    return ok


def provenance_lines(result: SparsifierResult) -> list[str]:
    """'# edge <u> <v> from pair (<a>,<b>) via <flavor>' 形式的注释行"""
    return [f"# {entry.line()}" for entry in result.provenance]
